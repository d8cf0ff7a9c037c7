#pragma once

#include <cstddef>
#include <vector>

#include "wavedae/sparse_matrix.hpp"
#include "wavedae/vec.hpp"

namespace wavedae {

/// Sparse LU factorization P A Q = L U of a square matrix.
///
/// Left-looking (Gilbert-Peierls) elimination with partial pivoting by
/// magnitude. Columns are pre-ordered by reverse Cuthill-McKee on the
/// symmetrized pattern to limit fill; rows are permuted by pivoting only.
/// A pivot candidate whose magnitude is <= rel_pivot_tol * max|A| raises
/// SingularMatrixError carrying the offending column index of A.
class SparseLu {
public:
    SparseLu(const SparseMatrix& a, double rel_pivot_tol = 1e-14);

    std::size_t size() const { return n_; }

    Vector solve(const Vector& b) const;

private:
    std::size_t n_ = 0;
    // CSC factors in pivot order: L has its unit diagonal stored first in
    // each column, U has its diagonal stored last.
    std::vector<std::size_t> lp_, up_;
    std::vector<std::size_t> li_, ui_;
    std::vector<double> lx_, ux_;
    std::vector<std::size_t> q_;     // column order, new -> old
    std::vector<std::size_t> pinv_;  // old row -> pivot step
};

/// Reverse Cuthill-McKee ordering of the symmetrized nonzero pattern.
/// Returns new-position -> old-index.
std::vector<std::size_t> rcm_order(const SparseMatrix& a);

}  // namespace wavedae
