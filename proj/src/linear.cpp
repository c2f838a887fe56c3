#include "framegeo/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace framegeo {

void LinearSystem::add_row(std::vector<Rat> coeffs, Rat rhs) {
  if (coeffs.size() != unknowns.size())
    throw std::invalid_argument("LinearSystem: row has wrong number of coefficients");
  rows.push_back(Row{std::move(coeffs), std::move(rhs)});
}

const Rat& LinearSolution::value_of(const LinearSystem& sys, const std::string& unknown) const {
  const auto it = std::find(sys.unknowns.begin(), sys.unknowns.end(), unknown);
  if (it == sys.unknowns.end() || values.empty()) throw std::invalid_argument("value_of: unknown not solved");
  return values[static_cast<std::size_t>(it - sys.unknowns.begin())];
}

LinearSolution solve_exact(const LinearSystem& sys) {
  if (sys.rows.empty()) throw std::invalid_argument("solve_exact: system has no rows");
  const std::size_t m = sys.rows.size();
  const std::size_t n = sys.unknowns.size();

  // Augmented matrix, reduced to row echelon form with exact pivots.
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (sys.rows[i].coeffs.size() != n) throw std::invalid_argument("solve_exact: ragged row");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = sys.rows[i].coeffs[j];
    a[i][n] = sys.rows[i].rhs;
  }

  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(a[row], a[pivot]);
    const Rat inv_p = Rat(1) / a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv_p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (std::size_t j = col; j <= n; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }

  for (std::size_t r = row; r < m; ++r)
    if (!a[r][n].is_zero()) return LinearSolution{SolveStatus::Inconsistent, {}, {}};

  LinearSolution sol;
  sol.values.assign(n, Rat(0));
  sol.is_free.assign(n, true);
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    const auto col = static_cast<std::size_t>(pivot_col_of_row[r]);
    sol.is_free[col] = false;
    sol.values[col] = a[r][n];  // free unknowns were taken as 0
  }
  sol.status = (pivot_col_of_row.size() == n) ? SolveStatus::Unique : SolveStatus::Underdetermined;
  if (sol.status == SolveStatus::Unique) sol.is_free.assign(n, false);
  return sol;
}

}  // namespace framegeo
