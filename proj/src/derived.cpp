#include "framegeo/derived.hpp"

#include <stdexcept>

#include "framegeo/parallel.hpp"

namespace framegeo {

namespace {

std::string e_name(int i) { return "e" + std::to_string(i + 1); }

Rat delta(int a, int b) { return a == b ? Rat(1) : Rat(0); }

// Sasakian test without a connection (K-contact is not needed for it).
bool sasakian_quick(const FrameManifold& m) {
  if (!validate_almost_contact(m).pass) return false;
  const Tensor deta = exterior_derivative_eta(m);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      if (!(deta.at({i, j}) == m.inner(m.basis(i), m.apply_phi(m.basis(j))))) return false;
  const Tensor nij = nijenhuis(m);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      for (int k = 0; k < m.dim; ++k)
        if (!(Rat(2) * deta.at({i, j}) * m.xi.at({k}) + nij.at({k, i, j})).is_zero()) return false;
  return true;
}

std::string triple_witness(const Tensor& cond) {
  const auto bad = cond.first_nonzero();
  if (!bad) return "";
  return "at (X,Y,Z)=(" + e_name((*bad)[0]) + "," + e_name((*bad)[1]) + "," + e_name((*bad)[2]) +
         "): value " + cond.at(*bad).str();
}

// S(Pbar/R(xi, e_x) e_y, e_z) + S(e_y, .. e_z) over all triples, for a (1,3)
// curvature-like tensor T.
Tensor xi_derivation_on_ricci(const FrameManifold& m, const CurvaturePack& pack, const Tensor& t) {
  const int n = m.dim;
  Tensor cond(n, {Slot::Lower, Slot::Lower, Slot::Lower});
  parallel_for(static_cast<std::int64_t>(n) * n * n, [&](std::int64_t flat) {
    int rem = static_cast<int>(flat);
    const int z = rem % n;
    rem /= n;
    const int y = rem % n;
    const int x = rem / n;
    Rat sum(0);
    for (int l = 0; l < n; ++l) {
      // component l of T(xi, e_x) e_y resp. e_z
      Rat ty(0), tz(0);
      for (int mm = 0; mm < n; ++mm) {
        if (m.xi.at({mm}).is_zero()) continue;
        ty += m.xi.at({mm}) * t.at({l, mm, x, y});
        tz += m.xi.at({mm}) * t.at({l, mm, x, z});
      }
      sum += ty * pack.ricci.at({l, z});
      sum += tz * pack.ricci.at({y, l});
    }
    cond.at({x, y, z}) = sum;
  });
  return cond;
}

// The eight-term expansion of the S(xi,X).R condition, exactly as published,
// as a vector-valued tensor indexed (l, x, y, z, w).
Tensor s_xi_dot_r_tensor(const FrameManifold& m, const CurvaturePack& pack) {
  const int n = m.dim;
  const Tensor& r = pack.riemann;
  const Tensor& s = pack.ricci;

  // S(xi, e_a) and the xi-contractions of R.
  std::vector<Rat> s_xi(static_cast<std::size_t>(n), Rat(0));
  Tensor r_xi_first(n, {Slot::Upper, Slot::Lower, Slot::Lower});   // R(xi, e_z) e_w
  Tensor r_xi_second(n, {Slot::Upper, Slot::Lower, Slot::Lower});  // R(e_y, xi) e_w
  Tensor r_xi_arg(n, {Slot::Upper, Slot::Lower, Slot::Lower});     // R(e_y, e_z) xi
  for (int a = 0; a < n; ++a)
    for (int mm = 0; mm < n; ++mm) s_xi[static_cast<std::size_t>(a)] += m.xi.at({mm}) * s.at({mm, a});
  for (int l = 0; l < n; ++l)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        Rat v1(0), v2(0), v3(0);
        for (int mm = 0; mm < n; ++mm) {
          const Rat& x = m.xi.at({mm});
          if (x.is_zero()) continue;
          v1 += x * r.at({l, mm, p, q});
          v2 += x * r.at({l, p, mm, q});
          v3 += x * r.at({l, p, q, mm});
        }
        r_xi_first.at({l, p, q}) = v1;
        r_xi_second.at({l, p, q}) = v2;
        r_xi_arg.at({l, p, q}) = v3;
      }

  Tensor cond(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower, Slot::Lower});
  parallel_for(static_cast<std::int64_t>(n) * n * n * n, [&](std::int64_t flat) {
    int rem = static_cast<int>(flat);
    const int w = rem % n;
    rem /= n;
    const int z = rem % n;
    rem /= n;
    const int y = rem % n;
    const int x = rem / n;
    // scalars shared by all components
    Rat s_x_r(0);  // S(e_x, R(e_y,e_z)e_w)
    Rat s_xi_r(0); // S(xi, R(e_y,e_z)e_w)
    for (int l = 0; l < n; ++l) {
      const Rat& rl = r.at({l, y, z, w});
      if (rl.is_zero()) continue;
      s_x_r += s.at({x, l}) * rl;
      s_xi_r += s_xi[static_cast<std::size_t>(l)] * rl;
    }
    for (int l = 0; l < n; ++l) {
      Rat v = s_x_r * m.xi.at({l});
      v -= s_xi_r * delta(l, x);
      v += s.at({x, y}) * r_xi_first.at({l, z, w});
      v -= s_xi[static_cast<std::size_t>(y)] * r.at({l, x, z, w});
      v += s.at({x, z}) * r_xi_second.at({l, y, w});
      v -= s_xi[static_cast<std::size_t>(z)] * r.at({l, y, x, w});
      v += s.at({x, w}) * r_xi_arg.at({l, y, z});
      v -= s_xi[static_cast<std::size_t>(w)] * r.at({l, y, z, x});
      cond.at({l, x, y, z, w}) = v;
    }
  });
  return cond;
}

// Contracts slot s of a rank-4 all-lower tensor with the phi matrix:
// out(..., i at s, ...) = sum_a t(..., a at s, ...) phi^a_i.
Tensor transform_slot_by_phi(const FrameManifold& m, const Tensor& t, int s) {
  const int n = m.dim;
  Tensor out(n, t.valence());
  parallel_for(static_cast<std::int64_t>(out.size()), [&](std::int64_t flat) {
    std::vector<int> idx = out.unflatten(static_cast<std::size_t>(flat));
    const int i = idx[static_cast<std::size_t>(s)];
    Rat sum(0);
    for (int a = 0; a < n; ++a) {
      const Rat& p = m.phi.at({a, i});
      if (p.is_zero()) continue;
      idx[static_cast<std::size_t>(s)] = a;
      sum += p * t.at(idx);
    }
    out.flat(static_cast<std::size_t>(flat)) = sum;
  });
  return out;
}

// g(T(phi ., phi .) phi ., phi .) for a (1,3) tensor T, indexed (i,j,k,w):
// lower the value slot against g(., phi .), then run phi through the three
// argument slots one at a time.
Tensor phi_box(const FrameManifold& m, const Tensor& t) {
  const int n = m.dim;
  // G(l, w) = g(e_l, phi e_w)
  Tensor g_phi(n, {Slot::Lower, Slot::Lower});
  for (int l = 0; l < n; ++l)
    for (int w = 0; w < n; ++w) {
      Rat sum(0);
      for (int d = 0; d < n; ++d) sum += m.g.at({l, d}) * m.phi.at({d, w});
      g_phi.at({l, w}) = sum;
    }
  Tensor lowered(n, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Lower});
  parallel_for(static_cast<std::int64_t>(lowered.size()), [&](std::int64_t flat) {
    const std::vector<int> idx = lowered.unflatten(static_cast<std::size_t>(flat));
    const int i = idx[0], j = idx[1], k = idx[2], w = idx[3];
    Rat sum(0);
    for (int l = 0; l < n; ++l) {
      const Rat& tl = t.at({l, i, j, k});
      if (tl.is_zero()) continue;
      sum += tl * g_phi.at({l, w});
    }
    lowered.flat(static_cast<std::size_t>(flat)) = sum;
  });
  return transform_slot_by_phi(m, transform_slot_by_phi(m, transform_slot_by_phi(m, lowered, 0), 1), 2);
}

std::vector<NamedCheck> contraction_identities(const FrameManifold& m, const CurvaturePack& pack) {
  const int n = m.dim;
  const int two_n = n - 1;
  const Tensor ginv = invert_metric(m.g);
  std::vector<NamedCheck> out;

  std::vector<std::vector<Rat>> phi_e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) phi_e[static_cast<std::size_t>(i)] = m.apply_phi(m.basis(i));
  const auto s_of = [&](std::span<const Rat> u, std::span<const Rat> v) {
    Rat sum(0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) sum += u[static_cast<std::size_t>(a)] * pack.ricci.at({a, b}) * v[static_cast<std::size_t>(b)];
    return sum;
  };
  const auto r_of = [&](std::span<const Rat> u, std::span<const Rat> v, std::span<const Rat> w) {
    std::vector<Rat> res(static_cast<std::size_t>(n), Rat(0));
    for (int a = 0; a < n; ++a) {
      if (u[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (v[static_cast<std::size_t>(b)].is_zero()) continue;
        const Rat f = u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
        for (int c = 0; c < n; ++c) {
          if (w[static_cast<std::size_t>(c)].is_zero()) continue;
          for (int l = 0; l < n; ++l) res[static_cast<std::size_t>(l)] += f * w[static_cast<std::size_t>(c)] * pack.riemann.at({l, a, b, c});
        }
      }
    }
    return res;
  };

  {
    Rat sum(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!ginv.at({i, j}).is_zero())
          sum += ginv.at({i, j}) * m.inner(phi_e[static_cast<std::size_t>(i)], phi_e[static_cast<std::size_t>(j)]);
    const bool ok = sum == Rat(two_n);
    out.push_back({"4.33 Σ g(φe_i,φe_i) = 2n", ok, ok ? "" : "got " + sum.str() + ", expected " + std::to_string(two_n)});
  }
  {
    Rat sum(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!ginv.at({i, j}).is_zero())
          sum += ginv.at({i, j}) * s_of(phi_e[static_cast<std::size_t>(i)], phi_e[static_cast<std::size_t>(j)]);
    const Rat expected = pack.scalar - Rat(two_n);
    const bool ok = sum == expected;
    out.push_back({"4.34 Σ S(φe_i,φe_i) = r - 2n", ok, ok ? "" : "got " + sum.str() + ", expected " + expected.str()});
  }
  {
    NamedCheck c{"4.35 Σ g(φe_i,φZ)g(φY,φe_i) = g(φY,φZ)", true, ""};
    for (int y = 0; y < n && c.pass; ++y)
      for (int z = 0; z < n; ++z) {
        Rat sum(0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (!ginv.at({i, j}).is_zero())
              sum += ginv.at({i, j}) * m.inner(phi_e[static_cast<std::size_t>(i)], phi_e[static_cast<std::size_t>(z)]) *
                     m.inner(phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(j)]);
        if (!(sum == m.inner(phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(z)]))) {
          c.pass = false;
          c.witness = "fails at (Y,Z)=(" + e_name(y) + "," + e_name(z) + ")";
          break;
        }
      }
    out.push_back(c);
  }
  {
    NamedCheck c{"4.36 Σ g(φe_i,φZ)S(φY,φe_i) = S(φY,φZ)", true, ""};
    for (int y = 0; y < n && c.pass; ++y)
      for (int z = 0; z < n; ++z) {
        Rat sum(0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (!ginv.at({i, j}).is_zero())
              sum += ginv.at({i, j}) * m.inner(phi_e[static_cast<std::size_t>(i)], phi_e[static_cast<std::size_t>(z)]) *
                     s_of(phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(j)]);
        if (!(sum == s_of(phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(z)]))) {
          c.pass = false;
          c.witness = "fails at (Y,Z)=(" + e_name(y) + "," + e_name(z) + ")";
          break;
        }
      }
    out.push_back(c);
  }
  {
    NamedCheck c{"4.37 Σ g(R(φe_i,φY)φZ,φe_i) = S(φY,φZ) - g(φY,φZ)", true, ""};
    for (int y = 0; y < n && c.pass; ++y)
      for (int z = 0; z < n; ++z) {
        Rat sum(0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (ginv.at({i, j}).is_zero()) continue;
            const auto rv = r_of(phi_e[static_cast<std::size_t>(i)], phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(z)]);
            sum += ginv.at({i, j}) * m.inner(rv, phi_e[static_cast<std::size_t>(j)]);
          }
        const Rat expected = s_of(phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(z)]) -
                             m.inner(phi_e[static_cast<std::size_t>(y)], phi_e[static_cast<std::size_t>(z)]);
        if (!(sum == expected)) {
          c.pass = false;
          c.witness = "fails at (Y,Z)=(" + e_name(y) + "," + e_name(z) + ")";
          break;
        }
      }
    out.push_back(c);
  }
  return out;
}

}  // namespace

Tensor conharmonic(const FrameManifold& m, const CurvaturePack& pack) {
  const int n = m.dim;
  if (n <= 2) throw std::invalid_argument("conharmonic: undefined for dim <= 2 (divisor n-2)");
  const Rat f = Rat(1) / Rat(n - 2);
  Tensor h = pack.riemann;
  parallel_for(static_cast<std::int64_t>(h.size()), [&](std::int64_t flat) {
    const auto idx = h.unflatten(static_cast<std::size_t>(flat));
    const int l = idx[0], i = idx[1], j = idx[2], k = idx[3];
    Rat corr = m.g.at({j, k}) * pack.q.at({l, i}) - m.g.at({i, k}) * pack.q.at({l, j}) +
               pack.ricci.at({j, k}) * delta(l, i) - pack.ricci.at({i, k}) * delta(l, j);
    h.flat(static_cast<std::size_t>(flat)) -= f * corr;
  });
  return h;
}

Tensor projective(const FrameManifold& m, const CurvaturePack& pack) {
  const int n = m.dim;
  if (n <= 1) throw std::invalid_argument("projective: undefined for dim <= 1 (divisor n-1)");
  const Rat f = Rat(1) / Rat(n - 1);
  Tensor p = pack.riemann;
  parallel_for(static_cast<std::int64_t>(p.size()), [&](std::int64_t flat) {
    const auto idx = p.unflatten(static_cast<std::size_t>(flat));
    const int l = idx[0], i = idx[1], j = idx[2], k = idx[3];
    p.flat(static_cast<std::size_t>(flat)) -= f * (m.g.at({j, k}) * pack.q.at({l, i}) - m.g.at({i, k}) * pack.q.at({l, j}));
  });
  return p;
}

Tensor pseudo_projective(const FrameManifold& m, const CurvaturePack& pack, const PseudoProjectiveParams& params) {
  if (params.a.is_zero() || params.b.is_zero())
    throw std::invalid_argument("pseudo_projective: a and b must be nonzero");
  const int n = m.dim;
  const Rat r_used = params.r_override.value_or(pack.scalar);
  const Rat wedge_coeff = (r_used / Rat(n)) * (params.a / Rat(n - 1) + params.b);
  Tensor p(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower});
  parallel_for(static_cast<std::int64_t>(p.size()), [&](std::int64_t flat) {
    const auto idx = p.unflatten(static_cast<std::size_t>(flat));
    const int l = idx[0], i = idx[1], j = idx[2], k = idx[3];
    Rat v = params.a * pack.riemann.at({l, i, j, k});
    v += params.b * (pack.ricci.at({j, k}) * delta(l, i) - pack.ricci.at({i, k}) * delta(l, j));
    v -= wedge_coeff * (m.g.at({j, k}) * delta(l, i) - m.g.at({i, k}) * delta(l, j));
    p.flat(static_cast<std::size_t>(flat)) = v;
  });
  return p;
}

ConditionReport derivation_condition(const FrameManifold& m, const CurvaturePack& pack, DerivationKind kind,
                                     const PseudoProjectiveParams* params) {
  ConditionReport rep;
  switch (kind) {
    case DerivationKind::RXiDotS: {
      rep.kind = "R(ξ,X)·S = 0";
      const Tensor cond = xi_derivation_on_ricci(m, pack, pack.riemann);
      rep.holds = cond.is_zero();
      if (!rep.holds) rep.witness = triple_witness(cond);
      return rep;
    }
    case DerivationKind::PbarXiDotS: {
      rep.kind = "P̄(ξ,X)·S = 0";
      if (params == nullptr) throw std::invalid_argument("derivation_condition: params required for the P̄ kind");
      const Tensor pbar = pseudo_projective(m, pack, *params);
      const Tensor cond = xi_derivation_on_ricci(m, pack, pbar);
      rep.holds = cond.is_zero();
      if (!rep.holds) rep.witness = triple_witness(cond);
      return rep;
    }
    case DerivationKind::SXiDotR: {
      rep.kind = "S(ξ,X)·R = 0";
      const Tensor cond = s_xi_dot_r_tensor(m, pack);
      rep.holds = cond.is_zero();
      if (!rep.holds) {
        const auto bad = *cond.first_nonzero();
        rep.witness = "at (X,Y,Z,W)=(" + e_name(bad[1]) + "," + e_name(bad[2]) + "," + e_name(bad[3]) + "," +
                      e_name(bad[4]) + "): component " + e_name(bad[0]) + " = " + cond.at(bad).str();
      }
      return rep;
    }
  }
  throw std::logic_error("derivation_condition: unreachable");
}

ConditionReport phi_flatness(const FrameManifold& m, const CurvaturePack& pack, FlatnessKind kind) {
  ConditionReport rep;
  const Tensor t = (kind == FlatnessKind::Conharmonic) ? conharmonic(m, pack) : projective(m, pack);
  rep.kind = (kind == FlatnessKind::Conharmonic) ? "φ-conharmonically flat" : "φ-projectively flat";
  const Tensor box = phi_box(m, t);
  rep.holds = box.is_zero();
  if (!rep.holds) {
    const auto bad = *box.first_nonzero();
    const char* tn = (kind == FlatnessKind::Conharmonic) ? "H" : "P";
    rep.witness = std::string("g(") + tn + "(φ" + e_name(bad[0]) + ",φ" + e_name(bad[1]) + ")φ" + e_name(bad[2]) +
                  ",φ" + e_name(bad[3]) + ") = " + box.at(bad).str();
  }
  if (sasakian_quick(m)) rep.consistency = contraction_identities(m, pack);
  return rep;
}

namespace serial {

ConditionReport derivation_condition(const FrameManifold& m, const CurvaturePack& pack, DerivationKind kind,
                                     const PseudoProjectiveParams* params) {
  const int n = m.dim;
  ConditionReport rep;
  const auto t_xi = [&](const Tensor& t, int x, int y) {
    // T(xi, e_x) e_y component vector
    std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
    for (int l = 0; l < n; ++l)
      for (int mm = 0; mm < n; ++mm) v[static_cast<std::size_t>(l)] += m.xi.at({mm}) * t.at({l, mm, x, y});
    return v;
  };
  const auto s_vec = [&](std::span<const Rat> u, int z) {
    Rat sum(0);
    for (int l = 0; l < n; ++l) sum += u[static_cast<std::size_t>(l)] * pack.ricci.at({l, z});
    return sum;
  };

  if (kind == DerivationKind::RXiDotS || kind == DerivationKind::PbarXiDotS) {
    Tensor t = pack.riemann;
    if (kind == DerivationKind::PbarXiDotS) {
      if (params == nullptr) throw std::invalid_argument("derivation_condition: params required for the P̄ kind");
      t = pseudo_projective(m, pack, *params);
      rep.kind = "P̄(ξ,X)·S = 0";
    } else {
      rep.kind = "R(ξ,X)·S = 0";
    }
    Tensor cond(n, {Slot::Lower, Slot::Lower, Slot::Lower});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          cond.at({x, y, z}) = s_vec(t_xi(t, x, y), z) + s_vec(t_xi(t, x, z), y);
    rep.holds = cond.is_zero();
    if (!rep.holds) rep.witness = triple_witness(cond);
    return rep;
  }

  rep.kind = "S(ξ,X)·R = 0";
  const Tensor& r = pack.riemann;
  const auto r_vec = [&](std::span<const Rat> u, std::span<const Rat> v, std::span<const Rat> w) {
    std::vector<Rat> res(static_cast<std::size_t>(n), Rat(0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const Rat f = u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)] * w[static_cast<std::size_t>(c)];
          if (f.is_zero()) continue;
          for (int l = 0; l < n; ++l) res[static_cast<std::size_t>(l)] += f * r.at({l, a, b, c});
        }
    return res;
  };
  const auto s_of = [&](std::span<const Rat> u, std::span<const Rat> v) {
    Rat sum(0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) sum += u[static_cast<std::size_t>(a)] * pack.ricci.at({a, b}) * v[static_cast<std::size_t>(b)];
    return sum;
  };
  std::vector<Rat> xi_v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});

  Tensor cond(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower, Slot::Lower});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const auto ex = m.basis(x), ey = m.basis(y), ez = m.basis(z), ew = m.basis(w);
          const auto ryzw = r_vec(ey, ez, ew);
          std::vector<Rat> val(static_cast<std::size_t>(n), Rat(0));
          const auto axpy = [&](const Rat& f, std::span<const Rat> v) {
            for (int l = 0; l < n; ++l) val[static_cast<std::size_t>(l)] += f * v[static_cast<std::size_t>(l)];
          };
          axpy(s_of(ex, ryzw), xi_v);
          axpy(-s_of(xi_v, ryzw), ex);
          axpy(s_of(ex, ey), r_vec(xi_v, ez, ew));
          axpy(-s_of(xi_v, ey), r_vec(ex, ez, ew));
          axpy(s_of(ex, ez), r_vec(ey, xi_v, ew));
          axpy(-s_of(xi_v, ez), r_vec(ey, ex, ew));
          axpy(s_of(ex, ew), r_vec(ey, ez, xi_v));
          axpy(-s_of(xi_v, ew), r_vec(ey, ez, ex));
          for (int l = 0; l < n; ++l) cond.at({l, x, y, z, w}) = val[static_cast<std::size_t>(l)];
        }
  rep.holds = cond.is_zero();
  if (!rep.holds) {
    const auto bad = *cond.first_nonzero();
    rep.witness = "at (X,Y,Z,W)=(" + e_name(bad[1]) + "," + e_name(bad[2]) + "," + e_name(bad[3]) + "," +
                  e_name(bad[4]) + "): component " + e_name(bad[0]) + " = " + cond.at(bad).str();
  }
  return rep;
}

}  // namespace serial

}  // namespace framegeo
