#include "wavedae/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavedae/errors.hpp"

namespace wavedae {

SparseMatrix SparseMatrix::from_triplets(const std::vector<Triplet>& triplets,
                                         std::size_t nrows, std::size_t ncols) {
    for (const Triplet& t : triplets) {
        if (t.row >= nrows || t.col >= ncols)
            throw StructureError("triplet (" + std::to_string(t.row) + "," +
                                 std::to_string(t.col) + ") outside " +
                                 std::to_string(nrows) + "x" + std::to_string(ncols));
        if (!std::isfinite(t.value))
            throw StructureError("non-finite triplet value at (" + std::to_string(t.row) +
                                 "," + std::to_string(t.col) + ")");
    }

    std::vector<Triplet> sorted(triplets);
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m;
    m.nrows_ = nrows;
    m.ncols_ = ncols;
    m.row_ptr_.assign(nrows + 1, 0);
    m.col_idx_.reserve(sorted.size());
    m.values_.reserve(sorted.size());

    std::size_t i = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
        while (i < sorted.size() && sorted[i].row == r) {
            const std::size_t c = sorted[i].col;
            double v = 0.0;
            while (i < sorted.size() && sorted[i].row == r && sorted[i].col == c)
                v += sorted[i++].value;
            if (v != 0.0) {
                m.col_idx_.push_back(c);
                m.values_.push_back(v);
            }
        }
        m.row_ptr_[r + 1] = m.values_.size();
    }
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    std::vector<Triplet> t;
    t.reserve(n);
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, 1.0});
    return from_triplets(t, n, n);
}

SparseMatrix SparseMatrix::zero(std::size_t nrows, std::size_t ncols) {
    return from_triplets({}, nrows, ncols);
}

Vector SparseMatrix::multiply(const Vector& v) const {
    Vector y(nrows_, 0.0);
    multiply_add(1.0, v, y);
    return y;
}

void SparseMatrix::multiply_add(double alpha, const Vector& v, Vector& y) const {
    if (v.size() != ncols_ || y.size() != nrows_)
        throw DimensionError("spmv: matrix is " + std::to_string(nrows_) + "x" +
                             std::to_string(ncols_) + ", vector length " +
                             std::to_string(v.size()));
    for (std::size_t r = 0; r < nrows_; ++r) {
        double s = 0.0;
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            s += values_[k] * v[col_idx_[k]];
        y[r] += alpha * s;
    }
}

void SparseMatrix::multiply_transpose_add(double alpha, const Vector& v, Vector& y) const {
    if (v.size() != nrows_ || y.size() != ncols_)
        throw DimensionError("spmv^T: matrix is " + std::to_string(nrows_) + "x" +
                             std::to_string(ncols_) + ", vector length " +
                             std::to_string(v.size()));
    for (std::size_t r = 0; r < nrows_; ++r) {
        const double a = alpha * v[r];
        if (a == 0.0) continue;
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            y[col_idx_[k]] += a * values_[k];
    }
}

std::vector<Triplet> SparseMatrix::to_triplets() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (std::size_t r = 0; r < nrows_; ++r)
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            t.push_back({r, col_idx_[k], values_[k]});
    return t;
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

SparseMatrix csr_from_triplets(const std::vector<Triplet>& triplets,
                               std::size_t nrows, std::size_t ncols) {
    return SparseMatrix::from_triplets(triplets, nrows, ncols);
}

Vector spmv(const SparseMatrix& a, const Vector& v) { return a.multiply(v); }

SparseMatrix transpose(const SparseMatrix& a) {
    std::vector<Triplet> t = a.to_triplets();
    for (Triplet& e : t) std::swap(e.row, e.col);
    return SparseMatrix::from_triplets(t, a.ncols(), a.nrows());
}

SparseMatrix add_scaled(double alpha, const SparseMatrix& a,
                        double beta, const SparseMatrix& b) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols())
        throw DimensionError("add_scaled: shape mismatch");
    std::vector<Triplet> t;
    t.reserve(a.nnz() + b.nnz());
    for (Triplet e : a.to_triplets()) {
        e.value *= alpha;
        t.push_back(e);
    }
    for (Triplet e : b.to_triplets()) {
        e.value *= beta;
        t.push_back(e);
    }
    return SparseMatrix::from_triplets(t, a.nrows(), a.ncols());
}

}  // namespace wavedae
