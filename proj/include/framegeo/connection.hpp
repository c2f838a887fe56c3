#pragma once

#include "framegeo/manifold.hpp"
#include "framegeo/tensor.hpp"

namespace framegeo {

/// Levi-Civita connection coefficients on the frame:
/// nabla_{e_i} e_j = sum_k gamma^k_ij e_k, stored as gamma.at({k, i, j}).
struct Connection {
  Tensor gamma;  // (1,2)

  /// Components of nabla_{e_i} v for a constant-coefficient vector v.
  std::vector<Rat> derive(int i, std::span<const Rat> v) const;
};

/// Koszul's formula on a frame with constant metric components:
/// 2 sum_l gamma^l_ij g_lk = -g(e_i,[e_j,e_k]) - g(e_j,[e_i,e_k]) + g(e_k,[e_i,e_j]).
/// The result is torsion-free and metric-compatible.
Connection levi_civita(const FrameManifold& m);

}  // namespace framegeo
