#include "epsfront/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "epsfront/errors.hpp"

namespace epsfront {

void LinearSubproblem::validate() const {
    const auto n = static_cast<std::size_t>(num_vars);
    if (num_vars < 1) throw std::invalid_argument("LinearSubproblem: no variables");
    if (objective.size() != n || lower.size() != n || upper.size() != n ||
        is_integer.size() != n)
        throw std::invalid_argument("LinearSubproblem: vector size mismatch");
    for (const auto& row : rows)
        if (row.coeffs.size() != n)
            throw std::invalid_argument("LinearSubproblem: row width mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(lower[j]))
            throw std::invalid_argument("LinearSubproblem: lower bound must be finite");
        if (upper[j] < lower[j])
            throw std::invalid_argument("LinearSubproblem: upper < lower");
    }
}

namespace {

constexpr double kPivotTol = 1e-7;

/// Dense two-phase tableau simplex over shifted nonnegative variables.
class Tableau {
  public:
    Tableau(const LinearSubproblem& sub, const SolverOptions& opts)
        : sub_(sub), opts_(opts) {}

    SolveOutcome solve() {
        build();
        if (!phase1()) {
            SolveOutcome out;
            out.status = SolveStatus::Infeasible;
            out.stats.pivots = pivots_;
            return out;
        }
        return phase2();
    }

  private:
    const LinearSubproblem& sub_;
    const SolverOptions& opts_;

    int n_ = 0;         // structural (shifted) vars
    int m_ = 0;         // tableau rows
    int cols_ = 0;      // total columns excluding rhs
    int art_begin_ = 0; // first artificial column
    std::vector<std::vector<double>> t_;  // (m_+1) x (cols_+1)
    std::vector<int> basis_;
    std::vector<bool> blocked_;  // columns barred from entering (artificials)
    std::int64_t pivots_ = 0;
    int degenerate_ = 0;

    void build() {
        n_ = sub_.num_vars;
        struct NormRow {
            std::vector<double> a;
            double rhs;
            RowSense sense;
        };
        std::vector<NormRow> rows;
        rows.reserve(sub_.rows.size() + static_cast<std::size_t>(n_));
        for (const auto& r : sub_.rows) {
            NormRow nr{r.coeffs, r.rhs, r.sense};
            // shift by lower bounds: y = x - l
            for (int j = 0; j < n_; ++j) nr.rhs -= nr.a[j] * sub_.lower[j];
            rows.push_back(std::move(nr));
        }
        for (int j = 0; j < n_; ++j) {
            if (!std::isfinite(sub_.upper[j])) continue;
            NormRow nr{std::vector<double>(n_, 0.0),
                       sub_.upper[j] - sub_.lower[j], RowSense::LessEqual};
            nr.a[j] = 1.0;
            rows.push_back(std::move(nr));
        }
        for (auto& r : rows) {
            if (r.rhs < 0) {
                for (auto& a : r.a) a = -a;
                r.rhs = -r.rhs;
                if (r.sense == RowSense::LessEqual) r.sense = RowSense::GreaterEqual;
                else if (r.sense == RowSense::GreaterEqual) r.sense = RowSense::LessEqual;
            }
        }
        m_ = static_cast<int>(rows.size());
        int n_slack = 0, n_art = 0;
        for (const auto& r : rows) {
            if (r.sense != RowSense::Equal) ++n_slack;
            if (r.sense != RowSense::LessEqual) ++n_art;
        }
        art_begin_ = n_ + n_slack;
        cols_ = n_ + n_slack + n_art;
        t_.assign(m_ + 1, std::vector<double>(cols_ + 1, 0.0));
        basis_.assign(m_, -1);
        blocked_.assign(cols_, false);

        int slack = n_, art = art_begin_;
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) t_[i][j] = rows[i].a[j];
            t_[i][cols_] = rows[i].rhs;
            switch (rows[i].sense) {
                case RowSense::LessEqual:
                    t_[i][slack] = 1.0;
                    basis_[i] = slack++;
                    break;
                case RowSense::GreaterEqual:
                    t_[i][slack++] = -1.0;
                    t_[i][art] = 1.0;
                    basis_[i] = art++;
                    break;
                case RowSense::Equal:
                    t_[i][art] = 1.0;
                    basis_[i] = art++;
                    break;
            }
        }
    }

    void set_costs(const std::vector<double>& c) {
        auto& obj = t_[m_];
        std::fill(obj.begin(), obj.end(), 0.0);
        for (int j = 0; j < static_cast<int>(c.size()); ++j) obj[j] = c[j];
        // eliminate basic columns from the cost row
        for (int i = 0; i < m_; ++i) {
            const double c_b = obj[basis_[i]];
            if (c_b == 0.0) continue;
            for (int j = 0; j <= cols_; ++j) obj[j] -= c_b * t_[i][j];
        }
    }

    int choose_entering(bool bland) const {
        const auto& obj = t_[m_];
        if (bland) {
            for (int j = 0; j < cols_; ++j)
                if (!blocked_[j] && obj[j] > opts_.feasibility_tol) return j;
            return -1;
        }
        int best = -1;
        double best_val = opts_.feasibility_tol;
        for (int j = 0; j < cols_; ++j)
            if (!blocked_[j] && obj[j] > best_val) {
                best_val = obj[j];
                best = j;
            }
        return best;
    }

    /// Min-ratio row for column j; ties broken by lowest basis index.
    int choose_leaving(int j) const {
        int best = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m_; ++i) {
            if (t_[i][j] <= opts_.feasibility_tol) continue;
            const double ratio = t_[i][cols_] / t_[i][j];
            if (best < 0 || ratio < best_ratio - opts_.feasibility_tol ||
                (ratio < best_ratio + opts_.feasibility_tol &&
                 basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(int row, int col) {
        if (std::abs(t_[row][col]) < kPivotTol)
            throw NumericalInstabilityError("simplex: pivot magnitude below safeguard");
        const double inv = 1.0 / t_[row][col];
        for (int j = 0; j <= cols_; ++j) t_[row][j] *= inv;
        t_[row][col] = 1.0;
        for (int i = 0; i <= m_; ++i) {
            if (i == row) continue;
            const double f = t_[i][col];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[row][j];
            t_[i][col] = 0.0;
        }
        basis_[row] = col;
        ++pivots_;
    }

    /// Returns false when unbounded.
    bool iterate() {
        constexpr std::int64_t kPivotBudget = 200'000;
        degenerate_ = 0;
        while (true) {
            if (pivots_ > kPivotBudget)
                throw NumericalInstabilityError("simplex: pivot budget exhausted");
            const bool bland = degenerate_ > opts_.degenerate_pivot_limit;
            const int col = choose_entering(bland);
            if (col < 0) return true;
            const int row = choose_leaving(col);
            if (row < 0) return false;
            if (t_[row][cols_] < opts_.feasibility_tol) ++degenerate_;
            else degenerate_ = 0;
            pivot(row, col);
        }
    }

    bool phase1() {
        if (art_begin_ == cols_) return true;  // no artificials needed
        std::vector<double> c(cols_, 0.0);
        for (int j = art_begin_; j < cols_; ++j) c[j] = -1.0;
        set_costs(c);
        iterate();  // phase 1 objective is bounded
        // value cell holds the negated objective; positive means artificials remain
        if (t_[m_][cols_] > 1e-7) return false;
        // drive remaining basic artificials out of the basis
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < art_begin_) continue;
            int col = -1;
            for (int j = 0; j < art_begin_; ++j)
                if (std::abs(t_[i][j]) > kPivotTol) { col = j; break; }
            if (col >= 0) pivot(i, col);
        }
        for (int j = art_begin_; j < cols_; ++j) blocked_[j] = true;
        return true;
    }

    SolveOutcome phase2() {
        std::vector<double> c(cols_, 0.0);
        for (int j = 0; j < n_; ++j) c[j] = sub_.objective[j];
        set_costs(c);
        SolveOutcome out;
        out.stats.pivots = pivots_;
        if (!iterate()) {
            out.status = SolveStatus::Unbounded;
            out.stats.pivots = pivots_;
            return out;
        }
        out.status = SolveStatus::Optimal;
        out.x.assign(n_, 0.0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) out.x[basis_[i]] = t_[i][cols_];
        double value = 0.0;
        for (int j = 0; j < n_; ++j) {
            out.x[j] += sub_.lower[j];  // undo the shift
            value += sub_.objective[j] * out.x[j];
        }
        out.objective_value = value;
        out.stats.pivots = pivots_;
        return out;
    }
};

struct BnbNode {
    std::vector<double> lower;
    std::vector<double> upper;
    double bound = 0.0;
    std::vector<double> x;
    std::int64_t id = 0;
};

struct NodeOrder {
    bool operator()(const BnbNode& a, const BnbNode& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;  // max-heap on bound
        return a.id > b.id;                                // then oldest first
    }
};

}  // namespace

SolveOutcome SimplexBackend::solve_lp(const LinearSubproblem& sub) {
    sub.validate();
    Tableau tab(sub, options_);
    return tab.solve();
}

SolveOutcome SimplexBackend::solve_ip(const LinearSubproblem& sub) {
    sub.validate();
    for (int j = 0; j < sub.num_vars; ++j)
        if (sub.is_integer[j] && !std::isfinite(sub.upper[j]))
            throw std::invalid_argument(
                "solve_ip: integer variable without finite upper bound");

    SolveOutcome result;
    result.status = SolveStatus::Infeasible;
    std::int64_t nodes = 0, pivots = 0, next_id = 0;
    bool have_incumbent = false;
    double incumbent_value = 0.0;
    std::vector<double> incumbent_x;

    auto fractional_var = [&](const std::vector<double>& x) {
        int best = -1;
        double best_frac = options_.integrality_tol;
        for (int j = 0; j < sub.num_vars; ++j) {
            if (!sub.is_integer[j]) continue;
            const double f = x[j] - std::floor(x[j]);
            const double dist = std::min(f, 1.0 - f);
            if (dist > best_frac) {
                best_frac = dist;
                best = j;
            }
        }
        return best;
    };

    std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder> open;

    auto push_node = [&](std::vector<double> lower, std::vector<double> upper) {
        LinearSubproblem relax = sub;
        relax.lower = lower;
        relax.upper = upper;
        Tableau tab(relax, options_);
        SolveOutcome lp = tab.solve();
        pivots += lp.stats.pivots;
        if (lp.status == SolveStatus::Unbounded)
            throw UnboundedObjectiveError("solve_ip: LP relaxation unbounded");
        if (lp.status != SolveStatus::Optimal) return;
        if (have_incumbent && lp.objective_value <= incumbent_value + 1e-9) return;
        BnbNode node;
        node.lower = std::move(lower);
        node.upper = std::move(upper);
        node.bound = lp.objective_value;
        node.x = std::move(lp.x);
        node.id = next_id++;
        open.push(std::move(node));
    };

    push_node(sub.lower, sub.upper);

    while (!open.empty()) {
        BnbNode node = open.top();
        open.pop();
        if (++nodes > options_.node_budget)
            throw BudgetExceededError("solve_ip: node budget exceeded");
        if (have_incumbent && node.bound <= incumbent_value + 1e-9) continue;
        const int j = fractional_var(node.x);
        if (j < 0) {
            // integral within tolerance: round exactly and recompute the value
            std::vector<double> x = node.x;
            double value = 0.0;
            for (int v = 0; v < sub.num_vars; ++v) {
                if (sub.is_integer[v]) x[v] = std::round(x[v]);
                value += sub.objective[v] * x[v];
            }
            if (!have_incumbent || value > incumbent_value + 1e-9) {
                have_incumbent = true;
                incumbent_value = value;
                incumbent_x = std::move(x);
            }
            continue;
        }
        const double v = node.x[j];
        auto down_upper = node.upper;
        down_upper[j] = std::floor(v);
        if (down_upper[j] >= node.lower[j] - 1e-12)
            push_node(node.lower, down_upper);
        auto up_lower = node.lower;
        up_lower[j] = std::ceil(v);
        if (up_lower[j] <= node.upper[j] + 1e-12)
            push_node(std::move(up_lower), node.upper);
    }

    result.stats.nodes = nodes;
    result.stats.pivots = pivots;
    if (have_incumbent) {
        result.status = SolveStatus::Optimal;
        result.x = std::move(incumbent_x);
        result.objective_value = incumbent_value;
    }
    return result;
}

}  // namespace epsfront
