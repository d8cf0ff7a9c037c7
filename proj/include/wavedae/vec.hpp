#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace wavedae {

using Vector = std::vector<double>;

inline double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

/// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(double alpha, Vector& x) {
    for (double& v : x) v *= alpha;
}

inline Vector zeros(std::size_t n) { return Vector(n, 0.0); }

/// a + alpha * b as a fresh vector
inline Vector added(const Vector& a, double alpha, const Vector& b) {
    Vector r(a);
    axpy(alpha, b, r);
    return r;
}

inline Vector subtracted(const Vector& a, const Vector& b) { return added(a, -1.0, b); }

inline bool all_finite(const Vector& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace wavedae
