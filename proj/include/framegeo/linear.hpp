#pragma once

#include <string>
#include <vector>

#include "framegeo/rat.hpp"

namespace framegeo {

/// Exact linear system: one coefficient per named unknown in every row.
struct LinearSystem {
  struct Row {
    std::vector<Rat> coeffs;
    Rat rhs;
  };

  std::vector<std::string> unknowns;
  std::vector<Row> rows;

  void add_row(std::vector<Rat> coeffs, Rat rhs);
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  /// One value per unknown. For Underdetermined this is the particular
  /// solution with all free unknowns set to 0; empty for Inconsistent.
  std::vector<Rat> values;
  /// Pivot/free description, parallel to unknowns (Underdetermined only).
  std::vector<bool> is_free;

  const Rat& value_of(const LinearSystem& sys, const std::string& unknown) const;
};

/// Exact Gaussian elimination over the rationals. Requires at least one row.
LinearSolution solve_exact(const LinearSystem& sys);

}  // namespace framegeo
