#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wavedae {

/// Bad matrix structure: out-of-range index, non-finite entry, shape mismatch
/// at construction time.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not match (spmv length, solve rhs length, ...).
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// Factorization hit a pivot below the relative tolerance. `pivot_index` is
/// the elimination step (row/column of the assembled matrix) that failed.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, std::ptrdiff_t pivot_index)
        : std::runtime_error(what), pivot_index(pivot_index) {}

    std::ptrdiff_t pivot_index;
};

/// Invalid numerical input (NaN/Inf where finite values are required,
/// violated operator preconditions).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A scheme was asked to integrate a system outside its applicability range
/// (e.g. a damped system handed to a damping-free scheme).
class SchemeError : public std::runtime_error {
public:
    explicit SchemeError(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format parse failure. `line` is 1-based; 0 when not attributable.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}

    std::size_t line;
};

}  // namespace wavedae
