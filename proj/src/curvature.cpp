#include "framegeo/curvature.hpp"

#include <sstream>

#include "framegeo/parallel.hpp"

namespace framegeo {

namespace {

std::string e_name(int i) { return "e" + std::to_string(i + 1); }

}  // namespace

std::vector<Rat> CurvaturePack::r_vec(int i, int j, int k) const {
  const int n = riemann.dim();
  std::vector<Rat> out(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) out[static_cast<std::size_t>(l)] = riemann.at({l, i, j, k});
  return out;
}

Tensor riemann(const FrameManifold& m, const Connection& conn) {
  const int n = m.dim;
  Tensor r(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower});
  const std::int64_t total = static_cast<std::int64_t>(n) * n * n * n;
  parallel_for(total, [&](std::int64_t flat) {
    int rem = static_cast<int>(flat);
    const int k = rem % n;
    rem /= n;
    const int j = rem % n;
    rem /= n;
    const int i = rem % n;
    const int l = rem / n;
    Rat sum(0);
    for (int mm = 0; mm < n; ++mm) {
      sum += conn.gamma.at({mm, j, k}) * conn.gamma.at({l, i, mm});
      sum -= conn.gamma.at({mm, i, k}) * conn.gamma.at({l, j, mm});
      sum -= m.c.at({mm, i, j}) * conn.gamma.at({l, mm, k});
    }
    r.flat(static_cast<std::size_t>(flat)) = sum;
  });
  return r;
}

void ricci(const FrameManifold& m, const Tensor& riemann, Tensor& s_out, Tensor& q_out, Rat& r_out) {
  // S(Y,Z) = trace of X -> R(X,Y)Z, i.e. the (first upper, X) contraction.
  s_out = contract(riemann, 0, 1);
  const int n = m.dim;
  const Tensor ginv = invert_metric(m.g);
  q_out = Tensor(n, {Slot::Upper, Slot::Lower});
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) {
      Rat sum(0);
      for (int mm = 0; mm < n; ++mm) sum += ginv.at({l, mm}) * s_out.at({mm, j});
      q_out.at({l, j}) = sum;
    }
  r_out = Rat(0);
  for (int i = 0; i < n; ++i) r_out += q_out.at({i, i});
}

Tensor star_ricci(const FrameManifold& m, const Tensor& riemann) {
  const int n = m.dim;
  Tensor s(n, {Slot::Lower, Slot::Lower});
  const Rat half(1, 2);
  parallel_for(static_cast<std::int64_t>(n) * n, [&](std::int64_t flat) {
    const int j = static_cast<int>(flat % n);
    const int i = static_cast<int>(flat / n);
    // 1/2 trace of Z -> phi(R(e_i, phi e_j) Z)
    Rat tr(0);
    for (int mm = 0; mm < n; ++mm) {
      const Rat& pm = m.phi.at({mm, j});
      if (pm.is_zero()) continue;
      for (int z = 0; z < n; ++z)
        for (int l = 0; l < n; ++l) {
          const Rat& rl = riemann.at({l, i, mm, z});
          if (rl.is_zero()) continue;
          tr += pm * rl * m.phi.at({z, l});
        }
    }
    s.at({i, j}) = half * tr;
  });
  return s;
}

CurvaturePack curvature_pack(const FrameManifold& m, const Connection& conn) {
  CurvaturePack pack;
  pack.riemann = riemann(m, conn);
  ricci(m, pack.riemann, pack.ricci, pack.q, pack.scalar);
  pack.star_ricci = star_ricci(m, pack.riemann);
  return pack;
}

NablaRicci nabla_ricci(const FrameManifold& m, const Connection& conn, const Tensor& s) {
  const int n = m.dim;
  NablaRicci out{Tensor(n, {Slot::Lower, Slot::Lower, Slot::Lower}),
                 Tensor(n, {Slot::Lower, Slot::Lower, Slot::Lower})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // Frame derivative of the constant components vanishes.
        Rat sum(0);
        for (int mm = 0; mm < n; ++mm) {
          sum -= conn.gamma.at({mm, i, j}) * s.at({mm, k});
          sum -= conn.gamma.at({mm, i, k}) * s.at({j, mm});
        }
        out.nabla_s.at({i, j, k}) = sum;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.cyclic.at({i, j, k}) =
            out.nabla_s.at({i, j, k}) + out.nabla_s.at({j, k, i}) + out.nabla_s.at({k, i, j});
  return out;
}

Tensor lie_derivative_metric(const FrameManifold& m, const Connection& conn, const Tensor& v) {
  const int n = m.dim;
  std::vector<Rat> vv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vv[static_cast<std::size_t>(i)] = v.at({i});
  std::vector<std::vector<Rat>> dv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dv[static_cast<std::size_t>(i)] = conn.derive(i, vv);
  Tensor lie(n, {Slot::Lower, Slot::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lie.at({i, j}) = m.inner(dv[static_cast<std::size_t>(i)], m.basis(j)) +
                       m.inner(m.basis(i), dv[static_cast<std::size_t>(j)]);
  return lie;
}

std::vector<IdentityCheck> sasakian_identity_suite(const FrameManifold& m, const Connection& conn,
                                                   const CurvaturePack& pack) {
  const int n = m.dim;
  const int two_n = m.dim - 1;  // 2n in the 2n+1 convention
  std::vector<IdentityCheck> checks;
  std::vector<Rat> xi_v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});

  {
    IdentityCheck c{"2.6", "∇_X ξ = -φX", true, true, ""};
    for (int i = 0; i < n && c.pass; ++i) {
      const auto lhs = conn.derive(i, xi_v);
      const auto rhs = m.apply_phi(m.basis(i));
      for (int l = 0; l < n; ++l)
        if (!(lhs[static_cast<std::size_t>(l)] + rhs[static_cast<std::size_t>(l)]).is_zero()) {
          c.pass = false;
          c.witness = "∇_{" + e_name(i) + "} ξ ≠ -φ" + e_name(i);
          break;
        }
    }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"2.7", "R(X,Y)Z = g(Y,Z)X - g(X,Z)Y (constant-curvature form; not required)", false, true, ""};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int k = 0; k < n && c.pass; ++k)
          for (int l = 0; l < n; ++l) {
            Rat rhs = m.g.at({j, k}) * (l == i ? Rat(1) : Rat(0)) - m.g.at({i, k}) * (l == j ? Rat(1) : Rat(0));
            if (!(pack.riemann.at({l, i, j, k}) == rhs)) {
              c.pass = false;
              c.witness = "R(" + e_name(i) + "," + e_name(j) + ")" + e_name(k) + " differs in component " + e_name(l);
              break;
            }
          }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"2.8", "R(X,Y)ξ = η(Y)X - η(X)Y", true, true, ""};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int l = 0; l < n; ++l) {
          Rat lhs(0);
          for (int k = 0; k < n; ++k) lhs += m.xi.at({k}) * pack.riemann.at({l, i, j, k});
          const Rat rhs = m.eta.at({j}) * (l == i ? Rat(1) : Rat(0)) - m.eta.at({i}) * (l == j ? Rat(1) : Rat(0));
          if (!(lhs == rhs)) {
            c.pass = false;
            c.witness = "R(" + e_name(i) + "," + e_name(j) + ")ξ differs in component " + e_name(l);
            break;
          }
        }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"2.9", "R(ξ,X)Y = g(X,Y)ξ - η(Y)X", true, true, ""};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int l = 0; l < n; ++l) {
          Rat lhs(0);
          for (int mm = 0; mm < n; ++mm) lhs += m.xi.at({mm}) * pack.riemann.at({l, mm, i, j});
          const Rat rhs = m.g.at({i, j}) * m.xi.at({l}) - m.eta.at({j}) * (l == i ? Rat(1) : Rat(0));
          if (!(lhs == rhs)) {
            c.pass = false;
            c.witness = "R(ξ," + e_name(i) + ")" + e_name(j) + " differs in component " + e_name(l);
            break;
          }
        }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"2.10", "η(R(X,Y)Z) = g(Y,Z)η(X) - g(X,Z)η(Y)", true, true, ""};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n && c.pass; ++j)
        for (int k = 0; k < n; ++k) {
          Rat lhs(0);
          for (int l = 0; l < n; ++l) lhs += m.eta.at({l}) * pack.riemann.at({l, i, j, k});
          const Rat rhs = m.g.at({j, k}) * m.eta.at({i}) - m.g.at({i, k}) * m.eta.at({j});
          if (!(lhs == rhs)) {
            c.pass = false;
            c.witness = "η(R(" + e_name(i) + "," + e_name(j) + ")" + e_name(k) + ") = " + lhs.str() + " ≠ " + rhs.str();
            break;
          }
        }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"2.11", "(∇_X η)Y = -g(φX, Y)", true, true, ""};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n; ++j) {
        // (nabla_X eta)(Y) = -eta(nabla_X Y) for constant eta components.
        Rat lhs(0);
        for (int k = 0; k < n; ++k) lhs -= m.eta.at({k}) * conn.gamma.at({k, i, j});
        const Rat rhs = -m.inner(m.apply_phi(m.basis(i)), m.basis(j));
        if (!(lhs == rhs)) {
          c.pass = false;
          c.witness = "(∇_{" + e_name(i) + "} η)" + e_name(j) + " = " + lhs.str() + " ≠ " + rhs.str();
          break;
        }
      }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"2.12", "£_ξ g = 0", true, true, ""};
    const Tensor lie = lie_derivative_metric(m, conn, m.xi);
    if (const auto bad = lie.first_nonzero()) {
      c.pass = false;
      c.witness = "(£_ξ g)(" + e_name((*bad)[0]) + "," + e_name((*bad)[1]) + ") = " + lie.at(*bad).str() + " ≠ 0";
    }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"3.6", "S(X,ξ) = 2n η(X)", true, true, ""};
    for (int i = 0; i < n; ++i) {
      Rat lhs(0);
      for (int k = 0; k < n; ++k) lhs += m.xi.at({k}) * pack.ricci.at({i, k});
      const Rat rhs = Rat(two_n) * m.eta.at({i});
      if (!(lhs == rhs)) {
        c.pass = false;
        c.witness = "S(" + e_name(i) + ",ξ) = " + lhs.str() + " ≠ " + rhs.str();
        break;
      }
    }
    checks.push_back(c);
  }
  {
    IdentityCheck c{"3.3", "S* = S - (2n-1)g - η⊗η", true, true, ""};
    for (int i = 0; i < n && c.pass; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat rhs = pack.ricci.at({i, j}) - Rat(two_n - 1) * m.g.at({i, j}) - m.eta.at({i}) * m.eta.at({j});
        if (!(pack.star_ricci.at({i, j}) == rhs)) {
          c.pass = false;
          c.witness = "S*(" + e_name(i) + "," + e_name(j) + ") = " + pack.star_ricci.at({i, j}).str() + " ≠ " + rhs.str();
          break;
        }
      }
    checks.push_back(c);
  }
  return checks;
}

namespace serial {

Tensor riemann(const FrameManifold& m, const Connection& conn) {
  const int n = m.dim;
  using Mat = std::vector<std::vector<Rat>>;
  const auto zero_mat = [n] { return Mat(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))); };
  // A_i: the matrix of nabla_{e_i} acting on frame components (column m = nabla_{e_i} e_m).
  std::vector<Mat> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = zero_mat();
    for (int l = 0; l < n; ++l)
      for (int mm = 0; mm < n; ++mm) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)][static_cast<std::size_t>(mm)] = conn.gamma.at({l, i, mm});
  }
  const auto mul = [n, &zero_mat](const Mat& x, const Mat& y) {
    Mat out = zero_mat();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) continue;
        for (int j = 0; j < n; ++j)
          out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
    return out;
  };
  Tensor r(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // R(e_i, e_j) = A_i A_j - A_j A_i - sum_m C^m_ij A_m as an endomorphism.
      Mat rij = mul(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
      const Mat ba = mul(a[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(i)]);
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
          rij[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] -= ba[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
          for (int mm = 0; mm < n; ++mm)
            rij[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] -=
                m.c.at({mm, i, j}) * conn.gamma.at({l, mm, k});
        }
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) r.at({l, i, j, k}) = rij[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
    }
  return r;
}

Tensor ricci(const FrameManifold& m, const Tensor& riemann) {
  const int n = m.dim;
  const Tensor ginv = invert_metric(m.g);
  Tensor s(n, {Slot::Lower, Slot::Lower});
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // S(Y,Z) = sum_i g(R(e_i,Y)Z, e_i) against the g-dual basis.
      Rat sum(0);
      for (int i = 0; i < n; ++i)
        for (int w = 0; w < n; ++w) {
          if (ginv.at({i, w}).is_zero()) continue;
          Rat inner(0);
          for (int l = 0; l < n; ++l) inner += m.g.at({l, w}) * riemann.at({l, i, j, k});
          sum += ginv.at({i, w}) * inner;
        }
      s.at({j, k}) = sum;
    }
  return s;
}

Tensor star_ricci(const FrameManifold& m, const Tensor& riemann) {
  const int n = m.dim;
  Tensor s(n, {Slot::Lower, Slot::Lower});
  const Rat half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat tr(0);
      for (int z = 0; z < n; ++z)
        for (int mm = 0; mm < n; ++mm)
          for (int l = 0; l < n; ++l) tr += m.phi.at({z, l}) * riemann.at({l, i, mm, z}) * m.phi.at({mm, j});
      s.at({i, j}) = half * tr;
    }
  return s;
}

}  // namespace serial

}  // namespace framegeo
