#include "wavedae/dense_matrix.hpp"

#include <cmath>
#include <string>

#include "wavedae/errors.hpp"

namespace wavedae {

Vector DenseMatrix::multiply(const Vector& v) const {
    if (v.size() != r_) throw DimensionError("dense multiply: length mismatch");
    Vector y(r_, 0.0);
    for (std::size_t i = 0; i < r_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < r_; ++j) s += (*this)(i, j) * v[j];
        y[i] = s;
    }
    return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& b) const {
    if (b.r_ != r_) throw DimensionError("dense multiply: size mismatch");
    DenseMatrix c(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < r_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < r_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double DenseMatrix::one_norm() const {
    double nrm = 0.0;
    for (std::size_t j = 0; j < r_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < r_; ++i) col += std::abs((*this)(i, j));
        nrm = std::max(nrm, col);
    }
    return nrm;
}

bool DenseMatrix::all_finite() const {
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j)
            if (!std::isfinite((*this)(i, j))) return false;
    return true;
}

DenseMatrix small_cosine(const DenseMatrix& h, double tau) {
    constexpr std::size_t kMaxDim = 64;
    constexpr int kSeriesDegree = 10;

    const std::size_t r = h.size();
    if (r > kMaxDim)
        throw DimensionError("small_cosine: dimension " + std::to_string(r) + " > 64");
    if (!h.all_finite()) throw InputError("small_cosine: non-finite entry in H");
    if (!(tau >= 0.0)) throw InputError("small_cosine: tau must be >= 0");

    const double hnorm = h.one_norm();
    int halvings = 0;
    double tau_s = tau;
    while (tau_s * tau_s * hnorm > 1.0 && halvings < 128) {
        tau_s *= 0.5;
        ++halvings;
    }

    // X = -tau_s^2 H, then Horner over C = sum_{k<=10} X^k / (2k)!.
    DenseMatrix x(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) x(i, j) = -tau_s * tau_s * h(i, j);

    double coeff[kSeriesDegree + 1];
    coeff[0] = 1.0;
    for (int k = 1; k <= kSeriesDegree; ++k)
        coeff[k] = coeff[k - 1] / (static_cast<double>(2 * k - 1) * static_cast<double>(2 * k));

    DenseMatrix c(r);
    for (std::size_t i = 0; i < r; ++i) c(i, i) = coeff[kSeriesDegree];
    for (int k = kSeriesDegree - 1; k >= 0; --k) {
        c = x.multiply(c);
        for (std::size_t i = 0; i < r; ++i) c(i, i) += coeff[k];
    }

    for (int s = 0; s < halvings; ++s) {
        DenseMatrix sq = c.multiply(c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sq(i, j) = 2.0 * sq(i, j);
        for (std::size_t i = 0; i < r; ++i) sq(i, i) -= 1.0;
        c = sq;
    }
    return c;
}

}  // namespace wavedae
