#pragma once

#include <cstddef>
#include <vector>

#include "wavedae/vec.hpp"

namespace wavedae {

/// Small square dense matrix (row-major). Used for the Krylov Hessenberg
/// matrix and the matrix-cosine kernel; dimensions stay <= 64.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t r) : r_(r), a_(r * r, 0.0) {}

    static DenseMatrix identity(std::size_t r) {
        DenseMatrix m(r);
        for (std::size_t i = 0; i < r; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return r_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * r_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * r_ + j]; }

    DenseMatrix top_left(std::size_t k) const {
        DenseMatrix m(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    Vector multiply(const Vector& v) const;
    DenseMatrix multiply(const DenseMatrix& b) const;

    /// max over columns of the column's absolute entry sum
    double one_norm() const;

    bool all_finite() const;

private:
    std::size_t r_ = 0;
    std::vector<double> a_;
};

/// Even cosine series in tau^2 * H:
///     C = sum_k (-tau^2 H)^k / (2k)!
/// so that for H = W diag(lambda) W^-1 the result is W diag(cos(tau
/// sqrt(lambda))) W^-1. Evaluated by halving tau until tau^2 ||H||_1 <= 1,
/// summing the series to degree 10, then undoing the halvings with
/// C <- 2 C^2 - I.
DenseMatrix small_cosine(const DenseMatrix& h, double tau);

}  // namespace wavedae
