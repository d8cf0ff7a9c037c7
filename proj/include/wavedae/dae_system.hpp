#pragma once

#include <cstddef>
#include <functional>

#include "wavedae/saddle.hpp"
#include "wavedae/sparse_matrix.hpp"
#include "wavedae/vec.hpp"

namespace wavedae {

/// Load term: (t, state) -> vector in the dual of the primal space.
using LoadFn = std::function<Vector(double, const Vector&)>;
/// Constraint data: t -> vector of length m.
using ConstraintFn = std::function<Vector(double)>;

/// The semi-discrete constrained second-order system
///
///     M x'' + D x' + A x + B^T lambda = f(t, x),   B x = g(t).
///
/// M is symmetric positive definite, A positive on ker B, B of full row
/// rank (m <= n, m = 0 allowed). Construction validates these properties:
/// symmetry of M entrywise, definiteness of M and kernel-ellipticity of A
/// by deterministic random probes, and the rank of B by dense elimination
/// when n <= 500 (skipped above that; the FEM constructor produces B with
/// an identity block, full rank by construction).
///
/// g, gdot, gddot default to 0 when not supplied. They must be evaluable
/// on [0, T + tau] for the time span the integrators are run on; f, g and
/// the derivatives must be pure functions.
class SemiDiscreteDae {
public:
    SemiDiscreteDae(SparseMatrix m_mat, SparseMatrix d_mat, SparseMatrix a_mat,
                    SparseMatrix b_mat, LoadFn f, ConstraintFn g = {},
                    ConstraintFn gdot = {}, ConstraintFn gddot = {});

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }

    const SparseMatrix& mass() const { return m_mat_; }
    const SparseMatrix& damping() const { return d_mat_; }
    const SparseMatrix& stiffness() const { return a_mat_; }
    const SparseMatrix& constraint() const { return b_mat_; }

    bool damping_free() const { return d_mat_.is_zero(); }

    Vector load(double t, const Vector& x) const;
    Vector g(double t) const;
    Vector gdot(double t) const;
    Vector gddot(double t) const;

private:
    std::size_t n_;
    std::size_t m_;
    SparseMatrix m_mat_, d_mat_, a_mat_, b_mat_;
    LoadFn f_;
    ConstraintFn g_, gdot_, gddot_;
};

struct ConsistencyReport {
    double position_residual;  // ||B x0 - g(0)||
    double velocity_residual;  // ||B y0 - gdot(0)||
    bool pass;
};

ConsistencyReport check_consistency(const SemiDiscreteDae& sys, const Vector& x0,
                                    const Vector& y0, double tol);

/// ||B x - g(t)||_2
double constraint_residual(const SemiDiscreteDae& sys, const Vector& x, double t);

/// Saddle-point realizations of the three operator actions on ker B:
/// B^- (constraint right-inverse), A_ker and its inverse. Holds one
/// factorization with K = A (for binv/aker_inv) and one with K = M
/// (for aker and kernel accelerations). Immutable and safe to share.
class OperatorToolkit {
public:
    explicit OperatorToolkit(const SemiDiscreteDae& sys);

    const SemiDiscreteDae& system() const { return *sys_; }

    /// x with A x + B^T mu = 0 and B x = gval; the image is A-orthogonal
    /// to ker B.
    Vector binv_apply(const Vector& gval) const;

    /// x in ker B with w^T M x = w^T A v for all w in ker B.
    /// Requires ||B v|| <= 1e-10 ||v||.
    Vector aker_apply(const Vector& v) const;

    /// b in ker B with w^T A b = w^T rhs for all w in ker B
    /// (rhs lives in the dual space).
    Vector aker_inv_apply(const Vector& rhs) const;

    /// x in ker B with w^T M x = w^T rhs for all w in ker B; the discrete
    /// realization of the kernel restriction pi_ker of a dual vector.
    Vector kernel_accel(const Vector& rhs) const;

private:
    const SemiDiscreteDae* sys_;
    SaddleFactorization stiffness_saddle_;  // K = A
    SaddleFactorization mass_saddle_;       // K = M
};

Vector binv_apply(const OperatorToolkit& tk, const Vector& gval);
Vector aker_apply(const OperatorToolkit& tk, const Vector& v);
Vector aker_inv_apply(const OperatorToolkit& tk, const Vector& rhs);

}  // namespace wavedae
