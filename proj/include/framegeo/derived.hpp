#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framegeo/curvature.hpp"

namespace framegeo {

struct PseudoProjectiveParams {
  Rat a{1};
  Rat b{1};
  std::optional<Rat> r_override;  // the r(g) = -1 reporting convention
};

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ConditionReport {
  std::string kind;
  bool holds = false;
  std::string witness;  // first nonzero component, empty when holds
  std::optional<std::string> derived_constraint;
  std::vector<NamedCheck> consistency;  // contraction identities (phi-flatness on Sasakian inputs)
};

/// H(X,Y)Z = R(X,Y)Z - 1/(n-2) [g(Y,Z)QX - g(X,Z)QY + S(Y,Z)X - S(X,Z)Y], n = dim.
/// Throws std::invalid_argument for dim <= 2.
Tensor conharmonic(const FrameManifold& m, const CurvaturePack& pack);

/// P(X,Y)Z = R(X,Y)Z - 1/(n-1) [g(Y,Z)QX - g(X,Z)QY], n = dim.
Tensor projective(const FrameManifold& m, const CurvaturePack& pack);

/// Pbar(X,Y)Z = a R(X,Y)Z + b [S(Y,Z)X - S(X,Z)Y]
///              - (r/n)(a/(n-1) + b) [g(Y,Z)X - g(X,Z)Y], n = dim.
/// r comes from the pack unless params.r_override is set.
/// Throws std::invalid_argument when a = 0 or b = 0.
Tensor pseudo_projective(const FrameManifold& m, const CurvaturePack& pack, const PseudoProjectiveParams& params);

enum class DerivationKind { RXiDotS, SXiDotR, PbarXiDotS };

/// Evaluates the derivation condition tensor over all basis tuples:
///   R(xi,X).S:    S(R(xi,X)Y, Z) + S(Y, R(xi,X)Z)              (triples)
///   S(xi,X).R:    the published eight-term expansion, verbatim  (quadruples)
///   Pbar(xi,X).S: S(Pbar(xi,X)Y, Z) + S(Y, Pbar(xi,X)Z)        (triples)
/// params is required for the Pbar kind.
ConditionReport derivation_condition(const FrameManifold& m, const CurvaturePack& pack, DerivationKind kind,
                                     const PseudoProjectiveParams* params = nullptr);

enum class FlatnessKind { Conharmonic, Projective };

/// phi-flatness: g(T(phi X, phi Y) phi Z, phi W) = 0 over all basis
/// quadruples, T = H or P. On Sasakian inputs the report also carrries the
/// contraction identities (4.33)-(4.37) as consistency sub-checks.
ConditionReport phi_flatness(const FrameManifold& m, const CurvaturePack& pack, FlatnessKind kind);

namespace serial {
/// Plain-loop reference for the quadruple-scan condition kernels.
ConditionReport derivation_condition(const FrameManifold& m, const CurvaturePack& pack, DerivationKind kind,
                                     const PseudoProjectiveParams* params = nullptr);
}  // namespace serial

}  // namespace framegeo
