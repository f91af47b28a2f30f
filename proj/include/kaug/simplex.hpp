#ifndef KAUG_SIMPLEX_HPP
#define KAUG_SIMPLEX_HPP

#include "kaug/rational.hpp"

#include <utility>
#include <vector>

namespace kaug {

/// Exact-rational simplex for
///     min c^T x   s.t.   a_i · x >= b_i  (i = 1..m),   0 <= x_j <= u_j,
/// with nonnegative costs. Rows are added incrementally; each `reoptimize`
/// restores optimality with dual pivots (the all-zero start is optimal for
/// the empty row set, and appending a row keeps the basis dual-feasible).
/// Bland's smallest-index rule on both sides guards against cycling.
class BoundedSimplex {
public:
    BoundedSimplex(std::vector<Rational> costs, std::vector<Rational> upper);

    /// Appends a row sum(coeffs) >= rhs; does not reoptimize.
    int add_row(const std::vector<std::pair<int, Rational>>& coeffs, const Rational& rhs);

    /// Dual simplex to optimality. Throws InfeasibleError when the rows are
    /// unsatisfiable within the bounds, IterationLimitError past the cap.
    void reoptimize();

    const std::vector<Rational>& solution() const { return x_; }
    Rational objective() const;
    int row_count() const { return static_cast<int>(rows_.size()); }
    int structural_count() const { return n_; }
    long pivot_count() const { return pivots_; }

    /// Number of structural variables strictly between their bounds
    /// (at a basic solution this never exceeds the row count).
    int fractional_count() const;

    struct Row {
        std::vector<std::pair<int, Rational>> coeffs;
        Rational rhs;
    };
    const std::vector<Row>& rows() const { return rows_; }

private:
    int n_ = 0;                      // structural variables
    std::vector<Rational> cost_;     // size n_
    std::vector<Rational> upper_;    // size n_
    std::vector<Row> rows_;

    // Tableau over all variables (structural then one surplus per row):
    // tab_[i] has n_ + m entries, bbar_[i] the transformed rhs.
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> bbar_;
    std::vector<int> basis_;         // variable index per row
    std::vector<char> in_basis_;     // per variable
    std::vector<char> at_upper_;     // per nonbasic variable
    std::vector<Rational> x_;        // structural solution cache

    long pivots_ = 0;
    static constexpr long kPivotCap = 2'000'000;

    int var_count() const { return n_ + static_cast<int>(rows_.size()); }
    bool has_upper(int j) const { return j < n_; }
    const Rational& upper_of(int j) const { return upper_[static_cast<size_t>(j)]; }
    Rational nonbasic_value(int j) const;
    std::vector<Rational> basic_values() const;
    std::vector<Rational> reduced_costs() const;
    void pivot(int row, int entering, bool leaving_to_upper);
    void refresh_solution();
    void check_dual_feasible(const std::vector<Rational>& z) const;
};

}  // namespace kaug

#endif
