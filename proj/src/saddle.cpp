#include "wavedae/saddle.hpp"

#include <string>

#include "wavedae/errors.hpp"

namespace wavedae {

namespace {

SparseLu build_block_lu(const SparseMatrix& k, const SparseMatrix& b) {
    if (k.nrows() != k.ncols())
        throw DimensionError("kkt_factorize: K must be square, got " +
                             std::to_string(k.nrows()) + "x" + std::to_string(k.ncols()));
    if (b.ncols() != k.ncols())
        throw DimensionError("kkt_factorize: B has " + std::to_string(b.ncols()) +
                             " columns, K is " + std::to_string(k.ncols()) + "-dimensional");
    if (b.nrows() > b.ncols())
        throw DimensionError("kkt_factorize: more constraints than unknowns (m > n)");

    const std::size_t n = k.nrows();
    std::vector<Triplet> t = k.to_triplets();
    t.reserve(k.nnz() + 2 * b.nnz());
    for (const Triplet& e : b.to_triplets()) {
        t.push_back({n + e.row, e.col, e.value});  // B block
        t.push_back({e.col, n + e.row, e.value});  // B^T block
    }
    return SparseLu(csr_from_triplets(t, n + b.nrows(), n + b.nrows()), 1e-14);
}

}  // namespace

SaddleFactorization::SaddleFactorization(const SparseMatrix& k, const SparseMatrix& b)
    : n_(k.nrows()), m_(b.nrows()), lu_(build_block_lu(k, b)) {}

std::pair<Vector, Vector> SaddleFactorization::solve(const Vector& r1,
                                                     const Vector& r2) const {
    if (r1.size() != n_ || r2.size() != m_)
        throw DimensionError("kkt_solve: rhs lengths (" + std::to_string(r1.size()) + "," +
                             std::to_string(r2.size()) + "), expected (" +
                             std::to_string(n_) + "," + std::to_string(m_) + ")");
    Vector rhs(n_ + m_);
    std::copy(r1.begin(), r1.end(), rhs.begin());
    std::copy(r2.begin(), r2.end(), rhs.begin() + static_cast<std::ptrdiff_t>(n_));
    const Vector sol = lu_.solve(rhs);
    Vector x(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(n_));
    Vector mult(sol.begin() + static_cast<std::ptrdiff_t>(n_), sol.end());
    return {std::move(x), std::move(mult)};
}

SaddleFactorization kkt_factorize(const SparseMatrix& k, const SparseMatrix& b) {
    return SaddleFactorization(k, b);
}

std::pair<Vector, Vector> kkt_solve(const SaddleFactorization& fact,
                                    const Vector& r1, const Vector& r2) {
    return fact.solve(r1, r2);
}

}  // namespace wavedae
