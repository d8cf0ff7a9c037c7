#include "wavedae/dae_system.hpp"

#include <cmath>
#include <random>
#include <string>

#include "wavedae/errors.hpp"

namespace wavedae {

namespace {

constexpr double kSymTol = 1e-12;
constexpr std::size_t kDenseRankLimit = 500;

void check_mass_symmetric(const SparseMatrix& m) {
    const SparseMatrix skew = add_scaled(1.0, m, -1.0, transpose(m));
    if (skew.max_abs() > kSymTol * std::max(m.max_abs(), 1.0))
        throw StructureError("mass matrix is not symmetric (max asymmetry " +
                             std::to_string(skew.max_abs()) + ")");
}

Vector random_unit_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Vector v(n);
    double nrm = 0.0;
    while (nrm == 0.0) {
        for (double& e : v) e = dist(rng);
        nrm = norm2(v);
    }
    scale(1.0 / nrm, v);
    return v;
}

// Dense rank of B by Gaussian elimination with partial pivoting.
std::size_t dense_row_rank(const SparseMatrix& b) {
    const std::size_t m = b.nrows(), n = b.ncols();
    std::vector<Vector> rows(m, Vector(n, 0.0));
    for (const Triplet& t : b.to_triplets()) rows[t.row][t.col] = t.value;

    const double tol = 1e-12 * std::max(b.max_abs(), 1.0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank; r < m; ++r)
            if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
        if (std::abs(rows[piv][col]) <= tol) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            const double factor = rows[r][col] / rows[rank][col];
            if (factor != 0.0) axpy(-factor, rows[rank], rows[r]);
        }
        ++rank;
    }
    return rank;
}

// Euclidean projection onto ker B via a dense Cholesky of B B^T.
class KernelProjector {
public:
    explicit KernelProjector(const SparseMatrix& b) : b_(&b), m_(b.nrows()) {
        chol_.assign(m_ * m_, 0.0);
        // B B^T, dense lower triangle.
        const auto trips = b.to_triplets();
        for (std::size_t i = 0; i < m_; ++i) {
            Vector bi(b.ncols(), 0.0);
            for (std::size_t k = b.row_ptr()[i]; k < b.row_ptr()[i + 1]; ++k)
                bi[b.col_idx()[k]] = b.values()[k];
            for (std::size_t j = 0; j <= i; ++j) {
                double s = 0.0;
                for (std::size_t k = b.row_ptr()[j]; k < b.row_ptr()[j + 1]; ++k)
                    s += b.values()[k] * bi[b.col_idx()[k]];
                chol_[i * m_ + j] = s;
            }
        }
        const double tol = 1e-13 * std::max(b.max_abs() * b.max_abs(), 1.0);
        for (std::size_t j = 0; j < m_; ++j) {
            double d = chol_[j * m_ + j];
            for (std::size_t k = 0; k < j; ++k) d -= chol_[j * m_ + k] * chol_[j * m_ + k];
            if (d <= tol)
                throw StructureError("constraint matrix B is (numerically) rank deficient");
            chol_[j * m_ + j] = std::sqrt(d);
            for (std::size_t i = j + 1; i < m_; ++i) {
                double s = chol_[i * m_ + j];
                for (std::size_t k = 0; k < j; ++k) s -= chol_[i * m_ + k] * chol_[j * m_ + k];
                chol_[i * m_ + j] = s / chol_[j * m_ + j];
            }
        }
    }

    Vector project(const Vector& z) const {
        Vector y(m_, 0.0);
        b_->multiply_add(1.0, z, y);
        // Solve (B B^T) w = B z with the Cholesky factor.
        for (std::size_t i = 0; i < m_; ++i) {
            double s = y[i];
            for (std::size_t k = 0; k < i; ++k) s -= chol_[i * m_ + k] * y[k];
            y[i] = s / chol_[i * m_ + i];
        }
        for (std::size_t i = m_; i-- > 0;) {
            double s = y[i];
            for (std::size_t k = i + 1; k < m_; ++k) s -= chol_[k * m_ + i] * y[k];
            y[i] = s / chol_[i * m_ + i];
        }
        Vector out(z);
        b_->multiply_transpose_add(-1.0, y, out);
        return out;
    }

private:
    const SparseMatrix* b_;
    std::size_t m_;
    std::vector<double> chol_;  // lower-triangular factor of B B^T
};

}  // namespace

SemiDiscreteDae::SemiDiscreteDae(SparseMatrix m_mat, SparseMatrix d_mat,
                                 SparseMatrix a_mat, SparseMatrix b_mat, LoadFn f,
                                 ConstraintFn g, ConstraintFn gdot, ConstraintFn gddot)
    : n_(m_mat.nrows()),
      m_(b_mat.nrows()),
      m_mat_(std::move(m_mat)),
      d_mat_(std::move(d_mat)),
      a_mat_(std::move(a_mat)),
      b_mat_(std::move(b_mat)),
      f_(std::move(f)),
      g_(std::move(g)),
      gdot_(std::move(gdot)),
      gddot_(std::move(gddot)) {
    if (m_mat_.ncols() != n_ || a_mat_.nrows() != n_ || a_mat_.ncols() != n_ ||
        d_mat_.nrows() != n_ || d_mat_.ncols() != n_)
        throw DimensionError("SemiDiscreteDae: M, D, A must all be n x n");
    if (b_mat_.ncols() != n_)
        throw DimensionError("SemiDiscreteDae: B must have n columns");
    if (m_ > n_)
        throw DimensionError("SemiDiscreteDae: more constraints than unknowns");
    if (!f_) throw InputError("SemiDiscreteDae: load callable is required");

    check_mass_symmetric(m_mat_);

    std::mt19937_64 rng(0x5eed5eedULL);  // deterministic validation probes
    for (int probe = 0; probe < 10; ++probe) {
        const Vector x = random_unit_vector(n_, rng);
        if (dot(x, m_mat_.multiply(x)) <= 0.0)
            throw StructureError("mass matrix failed a positive-definiteness probe");
    }

    if (m_ > 0 && n_ <= kDenseRankLimit && dense_row_rank(b_mat_) < m_)
        throw StructureError("constraint matrix B is row-rank deficient");

    if (m_ > 0) {
        const KernelProjector proj(b_mat_);
        for (int probe = 0; probe < 10; ++probe) {
            Vector z = proj.project(random_unit_vector(n_, rng));
            const double nrm = norm2(z);
            if (nrm <= 1e-12) continue;  // trivial kernel direction, nothing to probe
            scale(1.0 / nrm, z);
            if (dot(z, a_mat_.multiply(z)) <= 0.0)
                throw StructureError("stiffness matrix is not positive on ker B");
        }
    } else {
        for (int probe = 0; probe < 10; ++probe) {
            const Vector z = random_unit_vector(n_, rng);
            if (dot(z, a_mat_.multiply(z)) <= 0.0)
                throw StructureError("stiffness matrix is not positive definite (m = 0)");
        }
    }
}

Vector SemiDiscreteDae::load(double t, const Vector& x) const {
    Vector r = f_(t, x);
    if (r.size() != n_) throw DimensionError("load callable returned wrong length");
    return r;
}

namespace {
Vector eval_constraint_fn(const ConstraintFn& fn, double t, std::size_t m,
                          const char* name) {
    if (!fn) return Vector(m, 0.0);
    Vector r = fn(t);
    if (r.size() != m)
        throw DimensionError(std::string(name) + " callable returned wrong length");
    return r;
}
}  // namespace

Vector SemiDiscreteDae::g(double t) const { return eval_constraint_fn(g_, t, m_, "g"); }
Vector SemiDiscreteDae::gdot(double t) const {
    return eval_constraint_fn(gdot_, t, m_, "gdot");
}
Vector SemiDiscreteDae::gddot(double t) const {
    return eval_constraint_fn(gddot_, t, m_, "gddot");
}

ConsistencyReport check_consistency(const SemiDiscreteDae& sys, const Vector& x0,
                                    const Vector& y0, double tol) {
    Vector rx = sys.g(0.0);
    scale(-1.0, rx);
    sys.constraint().multiply_add(1.0, x0, rx);
    Vector ry = sys.gdot(0.0);
    scale(-1.0, ry);
    sys.constraint().multiply_add(1.0, y0, ry);
    const double pos = norm2(rx);
    const double vel = norm2(ry);
    return {pos, vel, pos <= tol && vel <= tol};
}

double constraint_residual(const SemiDiscreteDae& sys, const Vector& x, double t) {
    if (sys.m() == 0) return 0.0;
    Vector r = sys.g(t);
    scale(-1.0, r);
    sys.constraint().multiply_add(1.0, x, r);
    return norm2(r);
}

OperatorToolkit::OperatorToolkit(const SemiDiscreteDae& sys)
    : sys_(&sys),
      stiffness_saddle_(sys.stiffness(), sys.constraint()),
      mass_saddle_(sys.mass(), sys.constraint()) {}

Vector OperatorToolkit::binv_apply(const Vector& gval) const {
    return stiffness_saddle_.solve(Vector(sys_->n(), 0.0), gval).first;
}

Vector OperatorToolkit::aker_apply(const Vector& v) const {
    const double vnorm = norm2(v);
    Vector bv(sys_->m(), 0.0);
    sys_->constraint().multiply_add(1.0, v, bv);
    const double bnorm = norm2(bv);
    if (bnorm > 1e-10 * vnorm)
        throw InputError("aker_apply: input not in ker B, ||Bv|| = " +
                         std::to_string(bnorm) + " vs ||v|| = " + std::to_string(vnorm));
    return kernel_accel(sys_->stiffness().multiply(v));
}

Vector OperatorToolkit::aker_inv_apply(const Vector& rhs) const {
    return stiffness_saddle_.solve(rhs, Vector(sys_->m(), 0.0)).first;
}

Vector OperatorToolkit::kernel_accel(const Vector& rhs) const {
    return mass_saddle_.solve(rhs, Vector(sys_->m(), 0.0)).first;
}

Vector binv_apply(const OperatorToolkit& tk, const Vector& gval) {
    return tk.binv_apply(gval);
}
Vector aker_apply(const OperatorToolkit& tk, const Vector& v) { return tk.aker_apply(v); }
Vector aker_inv_apply(const OperatorToolkit& tk, const Vector& rhs) {
    return tk.aker_inv_apply(rhs);
}

}  // namespace wavedae
