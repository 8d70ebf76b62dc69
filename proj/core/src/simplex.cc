#include <algorithm>

#include "usc/cell.h"
#include "usc/error.h"

namespace usc {

// Dense tableau in equality form: rows[i] · vars = rhs[i], basis[i] is the
// basic variable of row i. Column layout: original x, then slack/surplus,
// then artificials. The objective row stores reduced costs and -z.
struct CellLp::Tableau {
  std::size_t n = 0;        // original variables
  std::size_t columns = 0;  // all variables
  std::size_t first_artificial = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::vector<Rational> reduced;
  Rational neg_objective;

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = rows[r][c];
    if (piv != Rational(1)) {
      for (auto& v : rows[r]) {
        if (!v.is_zero()) v /= piv;
      }
      rhs[r] /= piv;
    }
    const auto& prow = rows[r];
    auto eliminate = [&](std::vector<Rational>& row, Rational& b) {
      if (row[c].is_zero()) return;
      const Rational factor = row[c];
      for (std::size_t j = 0; j < columns; ++j) {
        if (!prow[j].is_zero()) row[j] -= factor * prow[j];
      }
      if (!rhs[r].is_zero()) b -= factor * rhs[r];
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i], rhs[i]);
    }
    eliminate(reduced, neg_objective);
    basis[r] = c;
  }

  // Loads cost vector `cost` (length `columns`) as the objective.
  void set_objective(const std::vector<Rational>& cost) {
    reduced = cost;
    neg_objective = Rational(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < columns; ++j) {
        if (!rows[i][j].is_zero()) reduced[j] -= cb * rows[i][j];
      }
      neg_objective -= cb * rhs[i];
    }
  }

  // Maximizes with Bland's rule over columns [0, limit).
  void optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows.size()) {
        throw Error(ErrorCode::kInvalidArgument, "unbounded LP inside the unit box");
      }
      pivot(leave, enter);
    }
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (basis[i] < n) x[basis[i]] = rhs[i];
    }
    return x;
  }
};

CellLp::CellLp(const Cell& cell) : tableau_(std::make_unique<Tableau>()) {
  Tableau& t = *tableau_;
  const std::size_t n = cell.dim();
  t.n = n;

  // Each input row: coefficients, rhs, kind. x <= 1 rows come first;
  // x >= 0 is native to the standard form.
  struct Row {
    const std::vector<Rational>* coefficients;
    std::size_t unit = 0;  // when coefficients is null: e_unit
    Rational bound;
    ConstraintKind kind;
  };
  std::vector<Row> input;
  for (std::size_t i = 0; i < n; ++i) {
    input.push_back({nullptr, i, Rational(1), ConstraintKind::kLessEqual});
  }
  for (const auto& c : cell.constraints()) {
    input.push_back({&c.coefficients, 0, c.bound, c.kind});
  }

  const std::size_t m = input.size();
  std::size_t slacks = 0, artificials = 0;
  for (const auto& r : input) {
    if (r.kind == ConstraintKind::kLessEqual) {
      ++slacks;
      if (r.bound.sign() < 0) ++artificials;
    } else {
      ++artificials;
    }
  }
  t.first_artificial = n + slacks;
  t.columns = n + slacks + artificials;
  t.rows.assign(m, std::vector<Rational>(t.columns));
  t.rhs.resize(m);
  t.basis.resize(m);

  std::size_t next_slack = n, next_art = t.first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = input[i];
    auto& row = t.rows[i];
    if (r.coefficients) {
      std::copy(r.coefficients->begin(), r.coefficients->end(), row.begin());
    } else {
      row[r.unit] = Rational(1);
    }
    t.rhs[i] = r.bound;
    std::size_t slack = t.columns;
    if (r.kind == ConstraintKind::kLessEqual) {
      slack = next_slack++;
      row[slack] = Rational(1);
    }
    if (t.rhs[i].sign() < 0) {
      for (auto& v : row) v = -v;
      t.rhs[i] = -t.rhs[i];
    }
    if (r.kind == ConstraintKind::kLessEqual && row[slack].sign() > 0) {
      t.basis[i] = slack;
    } else {
      const std::size_t art = next_art++;
      row[art] = Rational(1);
      t.basis[i] = art;
    }
  }

  std::vector<Rational> cost(t.columns);
  for (std::size_t j = t.first_artificial; j < t.columns; ++j) cost[j] = Rational(-1);
  t.set_objective(cost);
  t.optimize(t.columns);
  if (!t.neg_objective.is_zero()) {
    tableau_.reset();
    return;
  }

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < t.first_artificial) {
      ++i;
      continue;
    }
    std::size_t col = t.first_artificial;
    for (std::size_t j = 0; j < t.first_artificial; ++j) {
      if (!t.rows[i][j].is_zero()) {
        col = j;
        break;
      }
    }
    if (col == t.first_artificial) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }
  witness_ = t.point();
}

CellLp::~CellLp() = default;
CellLp::CellLp(CellLp&&) noexcept = default;
CellLp& CellLp::operator=(CellLp&&) noexcept = default;

bool CellLp::feasible() const { return tableau_ != nullptr; }

const std::vector<Rational>& CellLp::witness() const {
  if (!tableau_) throw Error(ErrorCode::kInfeasible, "cell is empty");
  return witness_;
}

CellLp::Optimum CellLp::maximize(std::span<const Rational> objective) const {
  if (!tableau_) throw Error(ErrorCode::kInfeasible, "cell is empty");
  if (objective.size() != tableau_->n) {
    throw Error(ErrorCode::kDimensionMismatch, "objective length does not match cell");
  }
  Tableau t = *tableau_;
  std::vector<Rational> cost(t.columns);
  std::copy(objective.begin(), objective.end(), cost.begin());
  t.set_objective(cost);
  t.optimize(t.first_artificial);
  return {-t.neg_objective, t.point()};
}

CellLp::Optimum CellLp::minimize(std::span<const Rational> objective) const {
  std::vector<Rational> negated(objective.begin(), objective.end());
  for (auto& v : negated) v = -v;
  Optimum opt = maximize(negated);
  opt.value = -opt.value;
  return opt;
}

}  // namespace usc
