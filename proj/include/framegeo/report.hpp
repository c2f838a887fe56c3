#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framegeo/soliton.hpp"

namespace framegeo {

/// Engine-vs-published-table comparison rows, attached when the input is structurally
/// the builtin heisenberg5 (whose printed tables are internally inconsistent).
struct Discrepancies {
  struct ConnectionRow {
    int i, j;                  // 0-based; nabla_{e_i} e_j
    std::vector<Rat> paper;    // printed value
    std::vector<Rat> engine;   // Koszul value
  };
  struct RicciRow {
    int i;  // diagonal entry
    Rat paper;
    Rat engine;
  };
  std::vector<ConnectionRow> connection;
  std::vector<RicciRow> ricci;
};

struct Report {
  FrameManifold manifold;
  PseudoProjectiveParams params;
  StructureClass structure;
  Connection conn;
  CurvaturePack pack;
  std::vector<IdentityCheck> identity_suite;  // empty unless Sasakian
  std::vector<ConditionReport> conditions;
  std::vector<std::pair<std::string, SolitonSolution>> solitons;  // all named variants
  EinsteinClass einstein_ricci;
  EinsteinClass einstein_star;
  TheoremReport theorems;
  std::optional<Discrepancies> discrepancies;
};

Report build_report(const FrameManifold& m, const PseudoProjectiveParams& params);

enum class ReportFormat { Text, Json };

/// Deterministic rendering: identical input bytes produce identical output
/// bytes. Every rational is rendered exactly in both formats.
std::string render_report(const Report& report, ReportFormat format);

/// "e3", "-e3", "2 e3", "e1 - 2 e3", "0": a frame combination.
std::string combo_str(std::span<const Rat> v);

/// lambda as an affine expression in p, e.g. "5 + (1/2)(p + 2/5)".
std::string lambda_str(const SolitonSolution& sol, int dim, bool conformal);

std::string render_soliton_text(const std::string& variant, const SolitonSolution& sol, const FrameManifold& m,
                                bool sasakian);

}  // namespace framegeo
