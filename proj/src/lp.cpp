#include "coxcheck/polyhedra.hpp"

#include <stdexcept>
#include <utility>

namespace coxcheck {

LPProblem LPProblem::nonnegative(std::size_t vars) {
  LPProblem p;
  p.a = RatMatrix(0, vars);
  p.c = RatVector(vars);
  p.lower.assign(vars, Rational(0));
  p.upper.assign(vars, std::nullopt);
  return p;
}

void LPProblem::add_row(std::span<const Rational> coefficients, const Rational& rhs) {
  if (coefficients.size() != variables()) throw std::invalid_argument("add_row: wrong length");
  RatMatrix grown(a.rows() + 1, variables());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) grown(i, j) = a(i, j);
  for (std::size_t j = 0; j < coefficients.size(); ++j) grown(a.rows(), j) = coefficients[j];
  a = std::move(grown);
  b.push_back(rhs);
}

namespace {

void check_shape(const LPProblem& p) {
  const std::size_t n = p.c.size();
  if (p.a.cols() != n || p.a.rows() != p.b.size() || p.lower.size() != n || p.upper.size() != n)
    throw std::invalid_argument("lp_solve: inconsistent problem dimensions");
}

bool empty_box(const LPProblem& p) {
  for (std::size_t j = 0; j < p.c.size(); ++j)
    if (p.lower[j] && p.upper[j] && *p.lower[j] > *p.upper[j]) return true;
  return false;
}

// How an original variable is expressed through nonnegative tableau columns.
enum class VarKind { shifted, flipped, split };
struct VarMap {
  VarKind kind;
  std::size_t col;     // primary column
  std::size_t neg = 0; // negative part for split variables
  Rational anchor;     // lower bound (shifted) or upper bound (flipped)
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows + 1, cols + 1), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
  Rational& rhs(std::size_t i) { return t_(i, t_.cols() - 1); }
  Rational& cost(std::size_t j) { return t_(t_.rows() - 1, j); }
  Rational& value() { return t_(t_.rows() - 1, t_.cols() - 1); }
  std::size_t rows() const { return t_.rows() - 1; }
  std::size_t cols() const { return t_.cols() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t e) {
    Rational inv = 1 / t_(r, e);
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, e) == 0) continue;
      Rational f = t_(i, e);
      for (std::size_t j = 0; j < t_.cols(); ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = e;
  }

  // Bland's rule over columns [0, eligible). Returns false when unbounded.
  bool run(std::size_t eligible) {
    for (;;) {
      std::size_t e = eligible;
      for (std::size_t j = 0; j < eligible; ++j)
        if (cost(j) < 0) {
          e = j;
          break;
        }
      if (e == eligible) return true;
      std::size_t r = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (at(i, e) <= 0) continue;
        Rational ratio = rhs(i) / at(i, e);
        if (r == rows() || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == rows()) return false;
      pivot(r, e);
    }
  }

 private:
  RatMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool satisfies(const LPProblem& p, std::span<const Rational> x) {
  check_shape(p);
  if (x.size() != p.c.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (p.lower[j] && x[j] < *p.lower[j]) return false;
    if (p.upper[j] && x[j] > *p.upper[j]) return false;
  }
  for (std::size_t i = 0; i < p.a.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += p.a(i, j) * x[j];
    if (s != p.b[i]) return false;
  }
  return true;
}

bool verify_infeasibility(const LPProblem& p, std::span<const Rational> y) {
  check_shape(p);
  if (empty_box(p)) return true;
  if (y.size() != p.a.rows()) return false;
  // max of (y^T a) x over the box must fall short of y^T b
  Rational bound = 0, target = 0;
  for (std::size_t i = 0; i < y.size(); ++i) target += y[i] * p.b[i];
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    Rational z = 0;
    for (std::size_t i = 0; i < y.size(); ++i) z += y[i] * p.a(i, j);
    if (z > 0) {
      if (!p.upper[j]) return false;
      bound += z * *p.upper[j];
    } else if (z < 0) {
      if (!p.lower[j]) return false;
      bound += z * *p.lower[j];
    }
  }
  return bound < target;
}

LPResult lp_solve(const LPProblem& p) {
  check_shape(p);
  const std::size_t n = p.c.size();
  LPResult result;
  if (empty_box(p)) {
    result.status = LPStatus::infeasible;
    result.farkas = RatVector(p.a.rows());
    return result;
  }

  // Column layout of the standard form.
  std::vector<VarMap> vars(n);
  std::size_t ncols = 0;
  std::vector<std::pair<std::size_t, Rational>> bound_rows;  // column, width
  for (std::size_t j = 0; j < n; ++j) {
    if (p.lower[j]) {
      vars[j] = {VarKind::shifted, ncols++, 0, *p.lower[j]};
      if (p.upper[j]) bound_rows.emplace_back(vars[j].col, *p.upper[j] - *p.lower[j]);
    } else if (p.upper[j]) {
      vars[j] = {VarKind::flipped, ncols++, 0, *p.upper[j]};
    } else {
      vars[j] = {VarKind::split, ncols, ncols + 1, Rational(0)};
      ncols += 2;
    }
  }
  std::vector<std::size_t> slack_col(bound_rows.size());
  for (auto& s : slack_col) s = ncols++;

  const std::size_t m = p.a.rows();
  const std::size_t rows = m + bound_rows.size();
  const std::size_t art0 = ncols;
  Tableau tab(rows, ncols + rows);

  RatVector cost(ncols);
  for (std::size_t j = 0; j < n; ++j) {
    switch (vars[j].kind) {
      case VarKind::shifted: cost[vars[j].col] = p.c[j]; break;
      case VarKind::flipped: cost[vars[j].col] = -p.c[j]; break;
      case VarKind::split:
        cost[vars[j].col] = p.c[j];
        cost[vars[j].neg] = -p.c[j];
        break;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational rhs = p.b[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& aij = p.a(i, j);
      if (aij == 0) continue;
      switch (vars[j].kind) {
        case VarKind::shifted:
          tab.at(i, vars[j].col) = aij;
          rhs -= aij * vars[j].anchor;
          break;
        case VarKind::flipped:
          tab.at(i, vars[j].col) = -aij;
          rhs -= aij * vars[j].anchor;
          break;
        case VarKind::split:
          tab.at(i, vars[j].col) = aij;
          tab.at(i, vars[j].neg) = -aij;
          break;
      }
    }
    tab.rhs(i) = rhs;
  }
  for (std::size_t k = 0; k < bound_rows.size(); ++k) {
    tab.at(m + k, bound_rows[k].first) = 1;
    tab.at(m + k, slack_col[k]) = 1;
    tab.rhs(m + k) = bound_rows[k].second;
  }

  // Phase 1: artificial basis, rows sign-normalised to a nonnegative right side.
  std::vector<int> sign(rows, 1);
  for (std::size_t i = 0; i < rows; ++i) {
    if (tab.rhs(i) < 0) {
      sign[i] = -1;
      for (std::size_t j = 0; j < ncols; ++j) tab.at(i, j) = -tab.at(i, j);
      tab.rhs(i) = -tab.rhs(i);
    }
    tab.at(i, art0 + i) = 1;
    tab.basis()[i] = art0 + i;
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += tab.at(i, j);
    tab.cost(j) = -s;
  }
  {
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += tab.rhs(i);
    tab.value() = -s;
  }
  tab.run(ncols + rows);  // phase 1 is bounded below by zero

  if (tab.value() != 0) {
    result.status = LPStatus::infeasible;
    result.farkas.resize(m);
    // Phase-1 duals: reduced cost of artificial i is 1 - y_i.
    for (std::size_t i = 0; i < m; ++i) result.farkas[i] = sign[i] * (1 - tab.cost(art0 + i));
    if (!verify_infeasibility(p, result.farkas))
      throw std::logic_error("lp_solve: infeasibility certificate failed verification");
    return result;
  }

  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < rows; ++i) {
    if (tab.basis()[i] < art0) continue;
    for (std::size_t j = 0; j < ncols; ++j)
      if (tab.at(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2.
  for (std::size_t j = 0; j < ncols + rows; ++j) tab.cost(j) = j < ncols ? cost[j] : Rational(0);
  tab.value() = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t bcol = tab.basis()[i];
    if (bcol >= art0 || cost[bcol] == 0) continue;
    Rational f = cost[bcol];
    for (std::size_t j = 0; j < ncols + rows; ++j) tab.cost(j) -= f * tab.at(i, j);
    tab.value() -= f * tab.rhs(i);
  }
  if (!tab.run(ncols)) {
    result.status = LPStatus::unbounded;
    return result;
  }

  RatVector z(ncols);
  for (std::size_t i = 0; i < rows; ++i)
    if (tab.basis()[i] < ncols) z[tab.basis()[i]] = tab.rhs(i);
  result.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (vars[j].kind) {
      case VarKind::shifted: result.x[j] = vars[j].anchor + z[vars[j].col]; break;
      case VarKind::flipped: result.x[j] = vars[j].anchor - z[vars[j].col]; break;
      case VarKind::split: result.x[j] = z[vars[j].col] - z[vars[j].neg]; break;
    }
  }
  if (!satisfies(p, result.x)) throw std::logic_error("lp_solve: optimal point fails substitution");
  result.status = LPStatus::optimal;
  result.objective = dot(p.c, result.x);
  return result;
}

}  // namespace coxcheck
