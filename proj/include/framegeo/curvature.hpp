#pragma once

#include <string>
#include <vector>

#include "framegeo/connection.hpp"
#include "framegeo/manifold.hpp"
#include "framegeo/tensor.hpp"

namespace framegeo {

/// All curvature objects of a frame manifold. The Riemann tensor is stored as
/// a (1,3) tensor with riemann.at({l,i,j,k}) = component l of R(e_i,e_j)e_k,
/// where R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
struct CurvaturePack {
  Tensor riemann;     // (1,3)
  Tensor ricci;       // (0,2) S(e_j,e_k) = trace of X -> R(X,e_j)e_k
  Rat scalar;         // r = tr Q
  Tensor q;           // (1,1) Ricci operator, S(X,Y) = g(QX,Y)
  Tensor star_ricci;  // (0,2) S*(X,Y) = 1/2 trace(Z -> phi R(X, phi Y) Z)

  /// Components of R(e_i, e_j) e_k.
  std::vector<Rat> r_vec(int i, int j, int k) const;
};

Tensor riemann(const FrameManifold& m, const Connection& conn);
/// S, Q and r from a Riemann tensor.
void ricci(const FrameManifold& m, const Tensor& riemann, Tensor& s_out, Tensor& q_out, Rat& r_out);
Tensor star_ricci(const FrameManifold& m, const Tensor& riemann);
/// Convenience: everything at once.
CurvaturePack curvature_pack(const FrameManifold& m, const Connection& conn);

struct NablaRicci {
  Tensor nabla_s;  // (0,3): at({i,j,k}) = (nabla_{e_i} S)(e_j, e_k)
  Tensor cyclic;   // (0,3): cyclic sum over (i,j,k)
};
NablaRicci nabla_ricci(const FrameManifold& m, const Connection& conn, const Tensor& s);

/// (Lie_V g)(e_i,e_j) = g(nabla_{e_i} V, e_j) + g(e_i, nabla_{e_j} V) for a
/// constant-coefficient vector V.
Tensor lie_derivative_metric(const FrameManifold& m, const Connection& conn, const Tensor& v);

struct IdentityCheck {
  std::string id;           // e.g. "2.6"
  std::string description;  // rendered identity
  bool required = true;     // "2.7" is reported but not required
  bool pass = false;
  std::string witness;
};

/// Checks the Sasakian frame identities exactly on all basis tuples.
/// Meaningful on manifolds classified Sasakian; "2.7" (the constant-curvature
/// form) is included for reporting but not required.
std::vector<IdentityCheck> sasakian_identity_suite(const FrameManifold& m, const Connection& conn,
                                                   const CurvaturePack& pack);

/// Plain-loop reference implementations, kept for testing the parallel
/// kernels and as independent oracles (the Riemann reference goes through
/// frame-derivative matrices rather than per-component sums).
namespace serial {
Tensor riemann(const FrameManifold& m, const Connection& conn);
Tensor ricci(const FrameManifold& m, const Tensor& riemann);
Tensor star_ricci(const FrameManifold& m, const Tensor& riemann);
}  // namespace serial

}  // namespace framegeo
