#include <doctest.h>

#include <algorithm>
#include <random>

#include "framegeo/builtins.hpp"
#include "framegeo/report.hpp"
#include "random_manifold.hpp"

using namespace framegeo;

namespace {

// First Bianchi, curvature symmetries, Ricci symmetry, torsion-freeness,
// metric compatibility; exact on every valid input.
void check_classical_invariants(const FrameManifold& m) {
  const int n = m.dim;
  const Connection conn = levi_civita(m);
  const Tensor r = riemann(m, conn);
  Tensor s(n, {Slot::Lower, Slot::Lower});
  Tensor q(n, {Slot::Upper, Slot::Lower});
  Rat scalar;
  ricci(m, r, s, q, scalar);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(s.at({i, j}) == s.at({j, i}));
      for (int k = 0; k < n; ++k) {
        CHECK(conn.gamma.at({k, i, j}) - conn.gamma.at({k, j, i}) == m.c.at({k, i, j}));
        Rat compat(0);
        for (int mm = 0; mm < n; ++mm)
          compat += conn.gamma.at({mm, k, i}) * m.g.at({mm, j}) + conn.gamma.at({mm, k, j}) * m.g.at({i, mm});
        CHECK(compat == Rat(0));
        // First Bianchi on every triple and component.
        for (int l = 0; l < n; ++l)
          CHECK((r.at({l, i, j, k}) + r.at({l, j, k, i}) + r.at({l, k, i, j})).is_zero());
      }
    }

  // Lowered tensor symmetries on all quadruples.
  const auto low = [&](int i, int j, int k, int w) {
    Rat sum(0);
    for (int l = 0; l < n; ++l) sum += m.g.at({l, w}) * r.at({l, i, j, k});
    return sum;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          const Rat v = low(i, j, k, w);
          CHECK(v == -low(j, i, k, w));
          CHECK(v == -low(i, j, w, k));
          CHECK(v == low(k, w, i, j));
        }

  // Trace consistency for the identity metric.
  if (m.g == Tensor::identity_metric(n)) {
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += s.at({i, i});
    CHECK(tr == scalar);
  }
}

}  // namespace

TEST_CASE("classical invariants on random metric Lie algebras") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    const int dim = 3 + 2 * static_cast<int>(rng() % 2);
    check_classical_invariants(testing::random_metric_lie_algebra(rng, dim, iter % 3 == 0));
  }
}

TEST_CASE("dEta is antisymmetric on random inputs") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 20; ++iter) {
    const FrameManifold m = testing::random_metric_lie_algebra(rng, 5, false);
    const Tensor d = exterior_derivative_eta(m);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(d.at({i, j}) == -d.at({j, i}));
  }
}

TEST_CASE("Sasakian inputs satisfy nabla xi = -phi and the soliton 3.4 form") {
  for (const char* name : {"heisenberg5", "sphere3", "heisenberg3"}) {
    const FrameManifold m = builtin_manifold(name);
    const Connection conn = levi_civita(m);
    std::vector<Rat> xi_v(static_cast<std::size_t>(m.dim));
    for (int i = 0; i < m.dim; ++i) xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});
    for (int i = 0; i < m.dim; ++i) {
      const auto d = conn.derive(i, xi_v);
      const auto p = m.apply_phi(m.basis(i));
      for (int l = 0; l < m.dim; ++l)
        CHECK(d[static_cast<std::size_t>(l)] == -p[static_cast<std::size_t>(l)]);
    }

    const CurvaturePack pack = curvature_pack(m, conn);
    const SolitonSolution sol = solve_soliton(m, pack, conn, SolitonVariant::from_name("star-conformal-eta"));
    REQUIRE(sol.status == SolitonStatus::Unique);
    CHECK((sol.lambda_shifted + sol.mu).is_zero());  // Eq (3.7) in shifted form
    // S = (2n - 1 - lambda_shifted) g - (mu - 1) eta (x) eta.
    const Rat alpha = Rat(m.dim - 1) - Rat(1) - sol.lambda_shifted;
    const Rat beta = -(sol.mu - Rat(1));
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        CHECK(pack.ricci.at({i, j}) == alpha * m.g.at({i, j}) + beta * m.eta.at({i}) * m.eta.at({j}));
    // S(X, xi) = 2n eta(X).
    for (int i = 0; i < m.dim; ++i) {
      Rat sxi(0);
      for (int k = 0; k < m.dim; ++k) sxi += m.xi.at({k}) * pack.ricci.at({i, k});
      CHECK(sxi == Rat(m.dim - 1) * m.eta.at({i}));
    }
  }
}

TEST_CASE("classification and soliton results are invariant under basis permutation") {
  std::mt19937_64 rng(4242);
  for (const char* name : {"heisenberg5", "sphere3", "abelian5"}) {
    const FrameManifold m = builtin_manifold(name);
    std::vector<int> perm(static_cast<std::size_t>(m.dim));
    for (int i = 0; i < m.dim; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const FrameManifold pm = testing::permute_manifold(m, perm);
      const Connection conn = levi_civita(m);
      const Connection pconn = levi_civita(pm);
      const StructureClass sc = classify_contact(m, conn);
      const StructureClass psc = classify_contact(pm, pconn);
      CHECK(sc.almost_contact_metric.pass == psc.almost_contact_metric.pass);
      CHECK(sc.contact_metric.pass == psc.contact_metric.pass);
      CHECK(sc.k_contact.pass == psc.k_contact.pass);
      CHECK(sc.normal.pass == psc.normal.pass);
      CHECK(sc.sasakian.pass == psc.sasakian.pass);

      const CurvaturePack pack = curvature_pack(m, conn);
      const CurvaturePack ppack = curvature_pack(pm, pconn);
      for (const auto& vname : SolitonVariant::names()) {
        const SolitonVariant var = SolitonVariant::from_name(vname);
        const SolitonSolution a = solve_soliton(m, pack, conn, var);
        const SolitonSolution b = solve_soliton(pm, ppack, pconn, var);
        CHECK(a.status == b.status);
        if (a.status == SolitonStatus::Unique) {
          CHECK(a.lambda_shifted == b.lambda_shifted);
          CHECK(a.mu == b.mu);
        }
      }

      const PseudoProjectiveParams params{Rat(1), Rat(1), std::nullopt};
      const TheoremReport ta = verify_theorems(m, pack, conn, params);
      const TheoremReport tb = verify_theorems(pm, ppack, pconn, params);
      REQUIRE(ta.entries.size() == tb.entries.size());
      for (std::size_t e = 0; e < ta.entries.size(); ++e) {
        CHECK(ta.entries[e].hypothesis_holds == tb.entries[e].hypothesis_holds);
        CHECK(ta.entries[e].conclusion == tb.entries[e].conclusion);
      }
    }
  }
}

TEST_CASE("identity suite holds on permuted Sasakian inputs") {
  const FrameManifold m = builtin_manifold("heisenberg5");
  std::vector<int> perm = {3, 0, 4, 2, 1};
  const FrameManifold pm = testing::permute_manifold(m, perm);
  const Connection conn = levi_civita(pm);
  const CurvaturePack pack = curvature_pack(pm, conn);
  CHECK(classify_contact(pm, conn).sasakian.pass);
  for (const auto& c : sasakian_identity_suite(pm, conn, pack)) {
    if (c.id == "2.7") continue;
    INFO(c.id, " ", c.witness);
    CHECK(c.pass);
  }
}
