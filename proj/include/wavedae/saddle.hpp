#pragma once

#include <cstddef>
#include <utility>

#include "wavedae/sparse_lu.hpp"
#include "wavedae/sparse_matrix.hpp"
#include "wavedae/vec.hpp"

namespace wavedae {

/// Factorization of the KKT block matrix [[K, B^T], [B, 0]], reusable for
/// many solves. Backed by the in-house sparse LU with partial pivoting
/// (pivot tolerance 1e-14 relative to the largest block-matrix entry).
class SaddleFactorization {
public:
    /// K is n x n, B is m x n with m <= n (m = 0 allowed).
    SaddleFactorization(const SparseMatrix& k, const SparseMatrix& b);

    std::size_t primal_dim() const { return n_; }
    std::size_t multiplier_dim() const { return m_; }

    /// Solves K x + B^T mult = r1, B x = r2.
    std::pair<Vector, Vector> solve(const Vector& r1, const Vector& r2) const;

private:
    std::size_t n_;
    std::size_t m_;
    SparseLu lu_;
};

SaddleFactorization kkt_factorize(const SparseMatrix& k, const SparseMatrix& b);

std::pair<Vector, Vector> kkt_solve(const SaddleFactorization& fact,
                                    const Vector& r1, const Vector& r2);

}  // namespace wavedae
