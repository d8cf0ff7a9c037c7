#pragma once

#include <cstddef>
#include <vector>

#include "wavedae/vec.hpp"

namespace wavedae {

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

/// Compressed-sparse-row matrix, immutable after construction.
///
/// Column indices are strictly increasing within each row and no stored
/// entry is NaN/Inf; both are enforced by the factory functions.
class SparseMatrix {
public:
    SparseMatrix() = default;

    static SparseMatrix from_triplets(const std::vector<Triplet>& triplets,
                                      std::size_t nrows, std::size_t ncols);
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix zero(std::size_t nrows, std::size_t ncols);

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t nnz() const { return values_.size(); }
    bool is_zero() const { return values_.empty(); }

    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::size_t>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    Vector multiply(const Vector& v) const;

    /// y += alpha * (*this) * v, without temporaries.
    void multiply_add(double alpha, const Vector& v, Vector& y) const;

    /// y += alpha * transpose(*this) * v.
    void multiply_transpose_add(double alpha, const Vector& v, Vector& y) const;

    std::vector<Triplet> to_triplets() const;

    double max_abs() const;

private:
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

SparseMatrix csr_from_triplets(const std::vector<Triplet>& triplets,
                               std::size_t nrows, std::size_t ncols);

Vector spmv(const SparseMatrix& a, const Vector& v);

/// alpha*A + beta*B, entrywise on the union pattern.
SparseMatrix add_scaled(double alpha, const SparseMatrix& a,
                        double beta, const SparseMatrix& b);

SparseMatrix transpose(const SparseMatrix& a);

}  // namespace wavedae
