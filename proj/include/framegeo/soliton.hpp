#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framegeo/derived.hpp"

namespace framegeo {

enum class TensorChoice { Ricci, StarRicci };

/// One member of the soliton-equation family, unified as
///   Lie_V g + 2T + 2*lambda_shifted*g + 2*mu*eta(x)eta = 0,
/// T = S or S*, with lambda_shifted = lambda - 1/2 (p + 2/dim) for the
/// conformal members and lambda otherwise. Variants without the eta term fix
/// mu = 0. The named variants are:
///   ricci                (T = S,  non-conformal, no eta term)
///   eta-ricci            (T = S,  non-conformal, eta term)
///   conformal-eta-ricci  (T = S,  conformal,     eta term)
///   star-ricci           (T = S*, non-conformal, no eta term)
///   star-conformal-eta   (T = S*, conformal,     eta term)
struct SolitonVariant {
  TensorChoice tensor_choice = TensorChoice::StarRicci;
  bool conformal = true;
  bool eta_term = true;
  std::optional<Tensor> potential;  // defaults to xi

  static SolitonVariant from_name(std::string_view name);  // throws std::invalid_argument
  static const std::vector<std::string>& names();
};

enum class SolitonStatus { Unique, Parametric, None };

struct SolitonSolution {
  SolitonStatus status = SolitonStatus::None;
  Rat lambda_shifted;
  Rat mu;
  /// lambda = lambda_constant + lambda_p_coeff * p (the conformal shift folded in).
  Rat lambda_constant;
  Rat lambda_p_coeff;
  /// The lambda + mu constraint in shifted variables: lambda_shifted + mu = 0.
  bool constraint_3_7 = false;
  std::vector<std::string> free_unknowns;  // Parametric only
};

/// Residual tensor of the unified soliton equation at given constants.
Tensor soliton_residual(const FrameManifold& m, const CurvaturePack& pack, const Connection& conn,
                        const SolitonVariant& variant, const Rat& lambda_shifted, const Rat& mu);

/// Stacks all dim^2 residual equations and solves exactly for the constants.
SolitonSolution solve_soliton(const FrameManifold& m, const CurvaturePack& pack, const Connection& conn,
                              const SolitonVariant& variant);

enum class EinsteinKind { Einstein, EtaEinstein, StarEinstein, StarEtaEinstein, None };

struct EinsteinClass {
  EinsteinKind kind = EinsteinKind::None;
  Rat alpha;
  Rat beta;
};

/// Least-structure exact fits T = alpha g, then T = alpha g + beta eta(x)eta,
/// for T = S and T = S*.
std::pair<EinsteinClass, EinsteinClass> classify_einstein(const FrameManifold& m, const CurvaturePack& pack);

struct TheoremEntry {
  std::string id;  // "3.1" .. "4.11"
  std::string statement;
  bool hypothesis_holds = false;
  enum class Conclusion { Holds, Fails, NotApplicable } conclusion = Conclusion::NotApplicable;
  std::string details;

  bool violation() const { return hypothesis_holds && conclusion == Conclusion::Fails; }
};

struct TheoremReport {
  std::vector<TheoremEntry> entries;
  bool has_violation() const;
};

/// Mechanically checks Theorems 3.1-4.10 and Corollaries 4.2-4.11: evaluates
/// each hypothesis (Sasakian structure + unique star-conformal-eta soliton +
/// the stated curvature condition) and, where it holds, the concluded
/// constants in shifted variables or the concluded Einstein form.
TheoremReport verify_theorems(const FrameManifold& m, const CurvaturePack& pack, const Connection& conn,
                              const PseudoProjectiveParams& params);

}  // namespace framegeo
