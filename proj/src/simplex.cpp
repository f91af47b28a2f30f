#include "kaug/simplex.hpp"

#include "kaug/errors.hpp"

namespace kaug {

BoundedSimplex::BoundedSimplex(std::vector<Rational> costs, std::vector<Rational> upper)
    : n_(static_cast<int>(costs.size())), cost_(std::move(costs)), upper_(std::move(upper)) {
    if (upper_.size() != static_cast<size_t>(n_)) throw Error("simplex: costs/upper size mismatch");
    for (const Rational& c : cost_)
        if (c < 0) throw Error("simplex: negative cost");
    for (const Rational& u : upper_)
        if (u < 0) throw Error("simplex: negative upper bound");
    in_basis_.assign(static_cast<size_t>(n_), 0);
    at_upper_.assign(static_cast<size_t>(n_), 0);
    x_.assign(static_cast<size_t>(n_), Rational(0));
}

Rational BoundedSimplex::nonbasic_value(int j) const {
    if (at_upper_[static_cast<size_t>(j)]) return upper_of(j);
    return Rational(0);
}

std::vector<Rational> BoundedSimplex::basic_values() const {
    std::vector<Rational> beta = bbar_;
    for (int j = 0; j < var_count(); ++j) {
        if (in_basis_[static_cast<size_t>(j)] || !at_upper_[static_cast<size_t>(j)]) continue;
        const Rational& val = upper_of(j);
        for (size_t i = 0; i < tab_.size(); ++i) {
            const Rational& a = tab_[i][static_cast<size_t>(j)];
            if (a != 0) beta[i] -= a * val;
        }
    }
    return beta;
}

std::vector<Rational> BoundedSimplex::reduced_costs() const {
    std::vector<Rational> z(static_cast<size_t>(var_count()), Rational(0));
    for (int j = 0; j < n_; ++j) z[static_cast<size_t>(j)] = cost_[static_cast<size_t>(j)];
    for (size_t i = 0; i < tab_.size(); ++i) {
        int b = basis_[i];
        if (b >= n_) continue;  // surplus costs are zero
        const Rational& cb = cost_[static_cast<size_t>(b)];
        if (cb == 0) continue;
        for (int j = 0; j < var_count(); ++j) {
            const Rational& a = tab_[i][static_cast<size_t>(j)];
            if (a != 0) z[static_cast<size_t>(j)] -= cb * a;
        }
    }
    return z;
}

void BoundedSimplex::check_dual_feasible(const std::vector<Rational>& z) const {
    for (int j = 0; j < var_count(); ++j) {
        if (in_basis_[static_cast<size_t>(j)]) continue;
        if (at_upper_[static_cast<size_t>(j)] ? z[static_cast<size_t>(j)] > 0
                                              : z[static_cast<size_t>(j)] < 0)
            throw Error("simplex: dual feasibility lost");
    }
}

int BoundedSimplex::add_row(const std::vector<std::pair<int, Rational>>& coeffs, const Rational& rhs) {
    int row_id = static_cast<int>(rows_.size());
    Row row;
    row.coeffs = coeffs;
    row.rhs = rhs;
    rows_.push_back(row);

    // New surplus column (zero in existing rows).
    for (auto& r : tab_) r.emplace_back(0);
    in_basis_.push_back(0);
    at_upper_.push_back(0);

    // Raw row: a·x − s = rhs, then eliminate basic variables.
    std::vector<Rational> ext(static_cast<size_t>(var_count()), Rational(0));
    for (const auto& [j, a] : coeffs) {
        if (j < 0 || j >= n_) throw Error("simplex: row coefficient out of range");
        ext[static_cast<size_t>(j)] += a;
    }
    int surplus = var_count() - 1;
    ext[static_cast<size_t>(surplus)] = -1;
    Rational b = rhs;
    for (size_t i = 0; i < tab_.size(); ++i) {
        Rational f = ext[static_cast<size_t>(basis_[i])];
        if (f == 0) continue;
        for (int j = 0; j < var_count(); ++j) {
            const Rational& a = tab_[i][static_cast<size_t>(j)];
            if (a != 0) ext[static_cast<size_t>(j)] -= f * a;
        }
        b -= f * bbar_[i];
    }
    // Make the surplus the basic variable of the new row with coefficient +1.
    for (auto& a : ext) a = -a;
    b = -b;
    tab_.push_back(std::move(ext));
    bbar_.push_back(std::move(b));
    basis_.push_back(surplus);
    in_basis_[static_cast<size_t>(surplus)] = 1;
    return row_id;
}

void BoundedSimplex::pivot(int row, int entering, bool leaving_to_upper) {
    int leaving = basis_[static_cast<size_t>(row)];
    in_basis_[static_cast<size_t>(leaving)] = 0;
    at_upper_[static_cast<size_t>(leaving)] = leaving_to_upper ? 1 : 0;
    basis_[static_cast<size_t>(row)] = entering;
    in_basis_[static_cast<size_t>(entering)] = 1;
    at_upper_[static_cast<size_t>(entering)] = 0;

    auto& prow = tab_[static_cast<size_t>(row)];
    Rational p = prow[static_cast<size_t>(entering)];
    for (auto& a : prow) a /= p;
    bbar_[static_cast<size_t>(row)] /= p;
    for (size_t i = 0; i < tab_.size(); ++i) {
        if (static_cast<int>(i) == row) continue;
        Rational f = tab_[i][static_cast<size_t>(entering)];
        if (f == 0) continue;
        for (int j = 0; j < var_count(); ++j) {
            const Rational& a = prow[static_cast<size_t>(j)];
            if (a != 0) tab_[i][static_cast<size_t>(j)] -= f * a;
        }
        bbar_[i] -= f * bbar_[static_cast<size_t>(row)];
    }
    ++pivots_;
}

void BoundedSimplex::reoptimize() {
    while (true) {
        if (pivots_ > kPivotCap) throw IterationLimitError("simplex: pivot cap exceeded");
        std::vector<Rational> beta = basic_values();

        // Leaving row: Bland by basic-variable index among bound violations.
        int row = -1;
        bool above_upper = false;
        int best_var = -1;
        for (size_t i = 0; i < tab_.size(); ++i) {
            int bv = basis_[i];
            bool low = beta[i] < 0;
            bool high = has_upper(bv) && beta[i] > upper_of(bv);
            if (!low && !high) continue;
            if (best_var < 0 || bv < best_var) {
                best_var = bv;
                row = static_cast<int>(i);
                above_upper = high;
            }
        }
        if (row < 0) break;

        std::vector<Rational> z = reduced_costs();
        check_dual_feasible(z);

        // Entering: dual ratio test, Bland smallest index on ties.
        const auto& arow = tab_[static_cast<size_t>(row)];
        int entering = -1;
        Rational best_ratio;
        for (int j = 0; j < var_count(); ++j) {
            if (in_basis_[static_cast<size_t>(j)]) continue;
            const Rational& a = arow[static_cast<size_t>(j)];
            if (a == 0) continue;
            bool upper = at_upper_[static_cast<size_t>(j)] != 0;
            bool ok = above_upper ? (!upper && a > 0) || (upper && a < 0)
                                  : (!upper && a < 0) || (upper && a > 0);
            if (!ok) continue;
            Rational ratio = z[static_cast<size_t>(j)] / a;
            if (ratio < 0) ratio = -ratio;
            if (entering < 0 || ratio < best_ratio) {
                entering = j;
                best_ratio = ratio;
            }
        }
        if (entering < 0) throw InfeasibleError("restricted problem infeasible within bounds");
        pivot(row, entering, above_upper);
    }
    refresh_solution();
}

void BoundedSimplex::refresh_solution() {
    std::vector<Rational> beta = basic_values();
    for (int j = 0; j < n_; ++j)
        if (!in_basis_[static_cast<size_t>(j)]) x_[static_cast<size_t>(j)] = nonbasic_value(j);
    for (size_t i = 0; i < tab_.size(); ++i)
        if (basis_[i] < n_) x_[static_cast<size_t>(basis_[i])] = beta[i];
}

Rational BoundedSimplex::objective() const {
    Rational obj(0);
    for (int j = 0; j < n_; ++j) obj += cost_[static_cast<size_t>(j)] * x_[static_cast<size_t>(j)];
    return obj;
}

int BoundedSimplex::fractional_count() const {
    int c = 0;
    for (int j = 0; j < n_; ++j) {
        const Rational& v = x_[static_cast<size_t>(j)];
        if (v > 0 && v < upper_of(j)) ++c;
    }
    return c;
}

}  // namespace kaug
