#include "qcausal/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcausal/error.hpp"

namespace qcausal {

namespace {

using Matrix = std::vector<std::vector<double>>;

/// Reduces [A | b] to a maximal set of linearly independent rows. Returns false
/// when an eliminated row leaves a right-hand side above `consistency_tol`.
bool prune_dependent_rows(Matrix &a, std::vector<double> &b, double pivot_tol,
                          double consistency_tol) {
    const std::size_t m = a.size();
    if (m == 0) {
        return true;
    }
    const std::size_t n = a.front().size();
    Matrix work = a;
    std::vector<double> rhs = b;
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) {
        order[i] = i;
    }
    std::vector<bool> keep(m, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        for (std::size_t r = rank + 1; r < m; ++r) {
            if (std::abs(work[r][col]) > std::abs(work[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(work[pivot][col]) <= pivot_tol) {
            continue;
        }
        std::swap(work[pivot], work[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        std::swap(order[pivot], order[rank]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            const double factor = work[r][col] / work[rank][col];
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < n; ++c) {
                work[r][c] -= factor * work[rank][c];
            }
            rhs[r] -= factor * rhs[rank];
        }
        keep[order[rank]] = true;
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r) {
        if (std::abs(rhs[r]) > consistency_tol) {
            return false;
        }
    }
    Matrix kept_a;
    std::vector<double> kept_b;
    for (std::size_t i = 0; i < m; ++i) {
        if (keep[i]) {
            kept_a.push_back(a[i]);
            kept_b.push_back(b[i]);
        }
    }
    a = std::move(kept_a);
    b = std::move(kept_b);
    return true;
}

/// Simplex tableau over equality rows: rows_ x (cols_ + 1), last column is the RHS.
class Tableau {
  public:
    Tableau(Matrix rows, std::vector<std::size_t> basis, double pivot_tol)
        : t_(std::move(rows)), basis_(std::move(basis)), tol_(pivot_tol) {}

    [[nodiscard]] std::size_t rows() const { return t_.size(); }
    [[nodiscard]] std::size_t cols() const { return t_.empty() ? 0 : t_.front().size() - 1; }
    [[nodiscard]] const std::vector<std::size_t> &basis() const { return basis_; }
    [[nodiscard]] double rhs(std::size_t r) const { return t_[r].back(); }
    [[nodiscard]] double at(std::size_t r, std::size_t c) const { return t_[r][c]; }

    void pivot(std::size_t r, std::size_t c) {
        const double p = t_[r][c];
        for (double &v : t_[r]) {
            v /= p;
        }
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0.0) {
                continue;
            }
            const double factor = t_[i][c];
            for (std::size_t j = 0; j < t_[i].size(); ++j) {
                t_[i][j] -= factor * t_[r][j];
            }
            t_[i][c] = 0.0;
        }
        basis_[r] = c;
    }

    void erase_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<long>(r));
        basis_.erase(basis_.begin() + static_cast<long>(r));
    }

    /// Minimizes cost over the columns in `allowed`. Returns false if unbounded.
    bool optimize(const std::vector<double> &cost, const std::vector<bool> &allowed,
                  std::size_t max_pivots) {
        for (std::size_t iter = 0; iter < max_pivots; ++iter) {
            // Bland: lowest-index column with negative reduced cost.
            std::size_t entering = cols();
            for (std::size_t c = 0; c < cols(); ++c) {
                if (!allowed[c]) {
                    continue;
                }
                double reduced = cost[c];
                for (std::size_t r = 0; r < rows(); ++r) {
                    reduced -= cost[basis_[r]] * t_[r][c];
                }
                if (reduced < -tol_) {
                    entering = c;
                    break;
                }
            }
            if (entering == cols()) {
                return true;
            }
            std::size_t leaving = rows();
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < rows(); ++r) {
                if (t_[r][entering] <= tol_) {
                    continue;
                }
                const double ratio = t_[r].back() / t_[r][entering];
                if (leaving == rows() || ratio < best_ratio - tol_ ||
                    (std::abs(ratio - best_ratio) <= tol_ && basis_[r] < basis_[leaving])) {
                    best_ratio = ratio;
                    leaving = r;
                }
            }
            if (leaving == rows()) {
                return false;
            }
            pivot(leaving, entering);
        }
        throw InvariantError("simplex: pivot limit reached");
    }

  private:
    Matrix t_;
    std::vector<std::size_t> basis_;
    double tol_;
};

} // namespace

LpSolution solve_lp(const LinearProgram &lp, const SimplexOptions &options) {
    const std::size_t n = lp.cost.size();
    if (lp.a_eq.size() != lp.b_eq.size() || lp.a_ub.size() != lp.b_ub.size()) {
        throw InputError("solve_lp: constraint rows and right-hand sides differ in count");
    }
    for (const auto &row : lp.a_eq) {
        if (row.size() != n) {
            throw InputError("solve_lp: equality row has wrong width");
        }
    }
    for (const auto &row : lp.a_ub) {
        if (row.size() != n) {
            throw InputError("solve_lp: inequality row has wrong width");
        }
    }

    LpSolution out;
    Matrix a_eq = lp.a_eq;
    std::vector<double> b_eq = lp.b_eq;
    if (!prune_dependent_rows(a_eq, b_eq, options.rank_tolerance, options.feasibility_tolerance)) {
        out.status = LpStatus::Infeasible;
        out.infeasibility = std::numeric_limits<double>::infinity();
        return out;
    }
    out.independent_equalities = a_eq.size();

    // Columns: structural [0, n), slacks [n, n + m_ub), artificials after that.
    const std::size_t m_ub = lp.a_ub.size();
    const std::size_t m = a_eq.size() + m_ub;
    const std::size_t n_slack = n + m_ub;
    const std::size_t total = n_slack + m;
    Matrix rows(m, std::vector<double>(total + 1, 0.0));
    for (std::size_t r = 0; r < m; ++r) {
        const bool is_eq = r < a_eq.size();
        const auto &src = is_eq ? a_eq[r] : lp.a_ub[r - a_eq.size()];
        double rhs = is_eq ? b_eq[r] : lp.b_ub[r - a_eq.size()];
        std::copy(src.begin(), src.end(), rows[r].begin());
        if (!is_eq) {
            rows[r][n + (r - a_eq.size())] = 1.0;
        }
        if (rhs < 0) {
            for (std::size_t c = 0; c < n_slack; ++c) {
                rows[r][c] = -rows[r][c];
            }
            rhs = -rhs;
        }
        rows[r][n_slack + r] = 1.0;
        rows[r][total] = rhs;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        basis[r] = n_slack + r;
    }
    Tableau tab(std::move(rows), std::move(basis), options.pivot_tolerance);

    std::vector<double> phase1_cost(total, 0.0);
    for (std::size_t c = n_slack; c < total; ++c) {
        phase1_cost[c] = 1.0;
    }
    tab.optimize(phase1_cost, std::vector<bool>(total, true), options.max_pivots);
    double residual = 0.0;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
        if (tab.basis()[r] >= n_slack) {
            residual += tab.rhs(r);
        }
    }
    out.infeasibility = residual;
    if (residual > options.feasibility_tolerance) {
        out.status = LpStatus::Infeasible;
        return out;
    }

    // Drive artificials out of the basis; a row with no usable pivot is redundant.
    for (std::size_t r = 0; r < tab.rows();) {
        if (tab.basis()[r] < n_slack) {
            ++r;
            continue;
        }
        std::size_t col = n_slack;
        for (std::size_t c = 0; c < n_slack; ++c) {
            if (std::abs(tab.at(r, c)) > options.rank_tolerance) {
                col = c;
                break;
            }
        }
        if (col == n_slack) {
            tab.erase_row(r);
        } else {
            tab.pivot(r, col);
            ++r;
        }
    }

    std::vector<double> phase2_cost(total, 0.0);
    std::copy(lp.cost.begin(), lp.cost.end(), phase2_cost.begin());
    std::vector<bool> allowed(total, false);
    std::fill(allowed.begin(), allowed.begin() + static_cast<long>(n_slack), true);
    if (!tab.optimize(phase2_cost, allowed, options.max_pivots)) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.x.assign(n, 0.0);
    for (std::size_t r = 0; r < tab.rows(); ++r) {
        if (tab.basis()[r] < n) {
            out.x[tab.basis()[r]] = std::max(0.0, tab.rhs(r));
        }
    }
    out.objective = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        out.objective += lp.cost[c] * out.x[c];
    }
    out.status = LpStatus::Optimal;
    return out;
}

} // namespace qcausal
