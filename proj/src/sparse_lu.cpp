#include "wavedae/sparse_lu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wavedae/errors.hpp"

namespace wavedae {

namespace {

// Adjacency of the symmetrized pattern, diagonal excluded.
std::vector<std::vector<std::size_t>> symmetric_adjacency(const SparseMatrix& a) {
    const std::size_t n = a.nrows();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = a.row_ptr()[r]; k < a.row_ptr()[r + 1]; ++k) {
            const std::size_t c = a.col_idx()[k];
            if (c == r) continue;
            adj[r].push_back(c);
            adj[c].push_back(r);
        }
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

// BFS returning visit order; neighbors expanded by increasing degree.
std::vector<std::size_t> bfs_level_order(const std::vector<std::vector<std::size_t>>& adj,
                                         std::size_t start, std::vector<char>& visited) {
    std::vector<std::size_t> order;
    order.push_back(start);
    visited[start] = 1;
    std::size_t head = 0;
    std::vector<std::size_t> nbrs;
    while (head < order.size()) {
        const std::size_t v = order[head++];
        nbrs.clear();
        for (std::size_t w : adj[v])
            if (!visited[w]) nbrs.push_back(w);
        std::sort(nbrs.begin(), nbrs.end(), [&](std::size_t x, std::size_t y) {
            return adj[x].size() != adj[y].size() ? adj[x].size() < adj[y].size() : x < y;
        });
        for (std::size_t w : nbrs) {
            visited[w] = 1;
            order.push_back(w);
        }
    }
    return order;
}

}  // namespace

std::vector<std::size_t> rcm_order(const SparseMatrix& a) {
    const std::size_t n = a.nrows();
    const auto adj = symmetric_adjacency(a);
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);

    for (std::size_t seed = 0; seed < n; ++seed) {
        if (visited[seed]) continue;
        // Pick the min-degree node of this component, then push the start
        // towards the periphery with one extra BFS sweep.
        std::vector<char> probe(visited);
        std::vector<std::size_t> comp = bfs_level_order(adj, seed, probe);
        std::size_t start = comp[0];
        for (std::size_t v : comp)
            if (adj[v].size() < adj[start].size()) start = v;
        probe = visited;
        comp = bfs_level_order(adj, start, probe);
        start = comp.back();

        const std::vector<std::size_t> comp_order = bfs_level_order(adj, start, visited);
        order.insert(order.end(), comp_order.begin(), comp_order.end());
    }
    std::reverse(order.begin(), order.end());
    return order;
}

SparseLu::SparseLu(const SparseMatrix& a, double rel_pivot_tol) {
    if (a.nrows() != a.ncols())
        throw DimensionError("sparse LU requires a square matrix, got " +
                             std::to_string(a.nrows()) + "x" + std::to_string(a.ncols()));
    n_ = a.nrows();
    q_ = rcm_order(a);
    const double pivot_floor = rel_pivot_tol * a.max_abs();

    // CSC view of A in the permuted column order.
    std::vector<std::vector<std::size_t>> col_rows(n_);
    std::vector<std::vector<double>> col_vals(n_);
    {
        std::vector<std::size_t> old_to_new(n_);
        for (std::size_t k = 0; k < n_; ++k) old_to_new[q_[k]] = k;
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t p = a.row_ptr()[r]; p < a.row_ptr()[r + 1]; ++p) {
                const std::size_t k = old_to_new[a.col_idx()[p]];
                col_rows[k].push_back(r);
                col_vals[k].push_back(a.values()[p]);
            }
        }
    }

    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    pinv_.assign(n_, unset);
    lp_.assign(1, 0);
    up_.assign(1, 0);

    std::vector<double> x(n_, 0.0);
    std::vector<char> marked(n_, 0);
    std::vector<std::size_t> reach;          // topological order, built reversed
    std::vector<std::size_t> stack, stack_p; // DFS node / position stacks
    reach.reserve(n_);

    for (std::size_t k = 0; k < n_; ++k) {
        // Sparse triangular solve x = L \ A(:, q[k]); pattern via DFS over
        // the graph of the L columns built so far.
        reach.clear();
        for (std::size_t t = 0; t < col_rows[k].size(); ++t) {
            const std::size_t root = col_rows[k][t];
            if (marked[root]) continue;
            stack.assign(1, root);
            stack_p.assign(1, 0);
            marked[root] = 1;
            while (!stack.empty()) {
                const std::size_t i = stack.back();
                const std::size_t kcol = pinv_[i];
                bool descended = false;
                if (kcol != unset) {
                    for (std::size_t p = lp_[kcol] + 1 + stack_p.back(); p < lp_[kcol + 1]; ++p) {
                        ++stack_p.back();
                        const std::size_t child = li_[p];
                        if (!marked[child]) {
                            marked[child] = 1;
                            stack.push_back(child);
                            stack_p.push_back(0);
                            descended = true;
                            break;
                        }
                    }
                }
                if (!descended) {
                    reach.push_back(i);
                    stack.pop_back();
                    stack_p.pop_back();
                }
            }
        }

        for (std::size_t t = 0; t < col_rows[k].size(); ++t)
            x[col_rows[k][t]] = col_vals[k][t];
        for (std::size_t idx = reach.size(); idx-- > 0;) {
            const std::size_t i = reach[idx];
            const std::size_t kcol = pinv_[i];
            if (kcol == unset) continue;
            const double xi = x[i];
            if (xi != 0.0)
                for (std::size_t p = lp_[kcol] + 1; p < lp_[kcol + 1]; ++p)
                    x[li_[p]] -= lx_[p] * xi;
        }

        // Partial pivoting over rows not yet pivotal.
        std::size_t pivrow = unset;
        double pivmag = -1.0;
        for (std::size_t i : reach) {
            if (pinv_[i] != unset) continue;
            const double m = std::abs(x[i]);
            if (m > pivmag) {
                pivmag = m;
                pivrow = i;
            }
        }
        if (pivrow == unset || pivmag <= pivot_floor)
            throw SingularMatrixError(
                "KKT/LU factorization: pivot " + std::to_string(std::max(pivmag, 0.0)) +
                    " below tolerance at column " + std::to_string(q_[k]),
                static_cast<std::ptrdiff_t>(q_[k]));
        const double pivot = x[pivrow];
        pinv_[pivrow] = k;

        // Column k of U (diagonal last) and of L (unit diagonal first).
        for (std::size_t i : reach) {
            if (pinv_[i] != unset && pinv_[i] < k && x[i] != 0.0) {
                ui_.push_back(pinv_[i]);
                ux_.push_back(x[i]);
            }
        }
        ui_.push_back(k);
        ux_.push_back(pivot);
        up_.push_back(ui_.size());

        li_.push_back(pivrow);
        lx_.push_back(1.0);
        for (std::size_t i : reach) {
            if (pinv_[i] == unset && x[i] != 0.0) {
                li_.push_back(i);
                lx_.push_back(x[i] / pivot);
            }
        }
        lp_.push_back(li_.size());

        for (std::size_t i : reach) {
            x[i] = 0.0;
            marked[i] = 0;
        }
    }

    // Map L's row indices into pivot order so both factors are triangular.
    for (std::size_t& i : li_) i = pinv_[i];
}

Vector SparseLu::solve(const Vector& b) const {
    if (b.size() != n_)
        throw DimensionError("LU solve: rhs length " + std::to_string(b.size()) +
                             ", matrix size " + std::to_string(n_));
    Vector x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[pinv_[i]] = b[i];
    // L has unit diagonal stored first in each column.
    for (std::size_t k = 0; k < n_; ++k) {
        const double xk = x[k];
        if (xk != 0.0)
            for (std::size_t p = lp_[k] + 1; p < lp_[k + 1]; ++p) x[li_[p]] -= lx_[p] * xk;
    }
    // U has its diagonal stored last in each column.
    for (std::size_t k = n_; k-- > 0;) {
        x[k] /= ux_[up_[k + 1] - 1];
        const double xk = x[k];
        if (xk != 0.0)
            for (std::size_t p = up_[k]; p + 1 < up_[k + 1]; ++p) x[ui_[p]] -= ux_[p] * xk;
    }
    Vector out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[q_[k]] = x[k];
    return out;
}

}  // namespace wavedae
