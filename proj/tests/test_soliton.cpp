#include <doctest.h>

#include "framegeo/builtins.hpp"
#include "framegeo/soliton.hpp"

using namespace framegeo;

namespace {

struct Setup {
  FrameManifold m;
  Connection conn;
  CurvaturePack pack;
};

Setup setup(const char* name) {
  Setup s{builtin_manifold(name), {}, {}};
  s.conn = levi_civita(s.m);
  s.pack = curvature_pack(s.m, s.conn);
  return s;
}

}  // namespace

TEST_CASE("variant names") {
  CHECK(SolitonVariant::names().size() == 5);
  CHECK(SolitonVariant::from_name("ricci").tensor_choice == TensorChoice::Ricci);
  CHECK_FALSE(SolitonVariant::from_name("ricci").eta_term);
  CHECK_FALSE(SolitonVariant::from_name("eta-ricci").conformal);
  CHECK(SolitonVariant::from_name("eta-ricci").eta_term);
  CHECK(SolitonVariant::from_name("conformal-eta-ricci").conformal);
  CHECK(SolitonVariant::from_name("star-ricci").tensor_choice == TensorChoice::StarRicci);
  CHECK(SolitonVariant::from_name("star-conformal-eta").conformal);
  CHECK_THROWS_AS(SolitonVariant::from_name("nope"), std::invalid_argument);
}

TEST_CASE("heisenberg5 star-conformal-eta residual and solve") {
  const Setup s = setup("heisenberg5");
  const SolitonVariant var = SolitonVariant::from_name("star-conformal-eta");
  // S* = -5g + 5 eta(x)eta and Lie_xi g = 0, so (5, -5) zeroes the residual.
  CHECK(soliton_residual(s.m, s.pack, s.conn, var, Rat(5), Rat(-5)).is_zero());
  const Tensor at_zero = soliton_residual(s.m, s.pack, s.conn, var, Rat(0), Rat(0));
  CHECK_FALSE(at_zero.is_zero());
  CHECK(at_zero.at({0, 0}) == Rat(-10));  // 2 S*(e1,e1)

  const SolitonSolution sol = solve_soliton(s.m, s.pack, s.conn, var);
  REQUIRE(sol.status == SolitonStatus::Unique);
  CHECK(sol.lambda_shifted == Rat(5));
  CHECK(sol.mu == Rat(-5));
  CHECK(sol.constraint_3_7);
  // lambda = 5 + (1/2)(p + 2/5) = 26/5 + (1/2)p.
  CHECK(sol.lambda_constant == Rat(26, 5));
  CHECK(sol.lambda_p_coeff == Rat(1, 2));
}

TEST_CASE("sphere3 star-conformal-eta") {
  const Setup s = setup("sphere3");
  const SolitonSolution sol = solve_soliton(s.m, s.pack, s.conn, SolitonVariant::from_name("star-conformal-eta"));
  REQUIRE(sol.status == SolitonStatus::Unique);
  CHECK(sol.lambda_shifted == Rat(-1));
  CHECK(sol.mu == Rat(1));
  CHECK(sol.constraint_3_7);
  // lambda = (1/2)(p + 2/3) - 1.
  CHECK(sol.lambda_constant == Rat(-2, 3));
  CHECK(sol.lambda_p_coeff == Rat(1, 2));
}

TEST_CASE("heisenberg3 star-conformal-eta") {
  const Setup s = setup("heisenberg3");
  const SolitonSolution sol = solve_soliton(s.m, s.pack, s.conn, SolitonVariant::from_name("star-conformal-eta"));
  REQUIRE(sol.status == SolitonStatus::Unique);
  CHECK(sol.lambda_shifted == Rat(3));
  CHECK(sol.mu == Rat(-3));
  CHECK(sol.constraint_3_7);
}

TEST_CASE("abelian5 solves trivially for every variant") {
  const Setup s = setup("abelian5");
  for (const auto& name : SolitonVariant::names()) {
    const SolitonSolution sol = solve_soliton(s.m, s.pack, s.conn, SolitonVariant::from_name(name));
    REQUIRE(sol.status == SolitonStatus::Unique);
    CHECK(sol.lambda_shifted == Rat(0));
    CHECK(sol.mu == Rat(0));
    CHECK(soliton_residual(s.m, s.pack, s.conn, SolitonVariant::from_name(name), sol.lambda_shifted, sol.mu).is_zero());
  }
}

TEST_CASE("variants without the eta term are unsolvable on heisenberg5") {
  const Setup s = setup("heisenberg5");
  CHECK(solve_soliton(s.m, s.pack, s.conn, SolitonVariant::from_name("ricci")).status == SolitonStatus::None);
  CHECK(solve_soliton(s.m, s.pack, s.conn, SolitonVariant::from_name("star-ricci")).status == SolitonStatus::None);
  // With the eta term the Ricci variant fits S = -2g + 6 eta(x)eta.
  const SolitonSolution eta_sol = solve_soliton(s.m, s.pack, s.conn, SolitonVariant::from_name("eta-ricci"));
  REQUIRE(eta_sol.status == SolitonStatus::Unique);
  CHECK(eta_sol.lambda_shifted == Rat(2));
  CHECK(eta_sol.mu == Rat(-6));
}

TEST_CASE("solve/residual round-trip on all builtins and variants") {
  for (const char* name : {"heisenberg5", "sphere3", "heisenberg3", "abelian5"}) {
    const Setup s = setup(name);
    for (const auto& vname : SolitonVariant::names()) {
      const SolitonVariant var = SolitonVariant::from_name(vname);
      const SolitonSolution sol = solve_soliton(s.m, s.pack, s.conn, var);
      if (sol.status == SolitonStatus::Unique)
        CHECK(soliton_residual(s.m, s.pack, s.conn, var, sol.lambda_shifted, sol.mu).is_zero());
    }
  }
}

TEST_CASE("custom potential vector") {
  const Setup s = setup("heisenberg5");
  SolitonVariant var = SolitonVariant::from_name("star-conformal-eta");
  var.potential = Tensor(5, {Slot::Upper});
  var.potential->at({0}) = Rat(1);  // V = e1: Lie_V g is nonzero, no constant solution
  CHECK(solve_soliton(s.m, s.pack, s.conn, var).status == SolitonStatus::None);
}

TEST_CASE("Einstein classification") {
  {
    const Setup s = setup("sphere3");
    const auto [ricci, star] = classify_einstein(s.m, s.pack);
    CHECK(ricci.kind == EinsteinKind::Einstein);
    CHECK(ricci.alpha == Rat(2));
    CHECK(star.kind == EinsteinKind::StarEtaEinstein);
    CHECK(star.alpha == Rat(1));
    CHECK(star.beta == Rat(-1));
  }
  {
    const Setup s = setup("heisenberg5");
    const auto [ricci, star] = classify_einstein(s.m, s.pack);
    CHECK(ricci.kind == EinsteinKind::EtaEinstein);
    CHECK(ricci.alpha == Rat(-2));
    CHECK(ricci.beta == Rat(6));
    CHECK(star.kind == EinsteinKind::StarEtaEinstein);
    CHECK(star.alpha == Rat(-5));
    CHECK(star.beta == Rat(5));
  }
  {
    const Setup s = setup("abelian5");
    const auto [ricci, star] = classify_einstein(s.m, s.pack);
    CHECK(ricci.kind == EinsteinKind::Einstein);
    CHECK(ricci.alpha == Rat(0));
    CHECK(star.kind == EinsteinKind::StarEinstein);
    CHECK(star.alpha == Rat(0));
  }
}

TEST_CASE("theorem harness on sphere3") {
  const Setup s = setup("sphere3");
  const TheoremReport rep = verify_theorems(s.m, s.pack, s.conn, PseudoProjectiveParams{Rat(1), Rat(1), std::nullopt});
  CHECK_FALSE(rep.has_violation());
  const auto find = [&](const char* id) -> const TheoremEntry& {
    for (const auto& e : rep.entries)
      if (e.id == id) return e;
    throw std::logic_error("missing theorem entry");
  };
  CHECK(find("3.1").hypothesis_holds);
  CHECK(find("3.1").conclusion == TheoremEntry::Conclusion::Holds);
  CHECK(find("3.2").hypothesis_holds);  // S = 2g is parallel
  CHECK(find("3.2").conclusion == TheoremEntry::Conclusion::Holds);
  CHECK(find("4.1").hypothesis_holds);
  CHECK(find("4.1").conclusion == TheoremEntry::Conclusion::Holds);
  CHECK(find("4.2").conclusion == TheoremEntry::Conclusion::Holds);  // S = 2n g with n = 1
  CHECK_FALSE(find("4.3").hypothesis_holds);  // printed eight-term form is nonzero here
  CHECK(find("4.5").hypothesis_holds);        // Pbar == 0
  CHECK(find("4.5").conclusion == TheoremEntry::Conclusion::Holds);
  CHECK_FALSE(find("4.7").hypothesis_holds);  // not phi-conharmonically flat
  CHECK(find("4.10").hypothesis_holds);
  CHECK(find("4.10").conclusion == TheoremEntry::Conclusion::Holds);
  CHECK(find("4.11").conclusion == TheoremEntry::Conclusion::Holds);
}

TEST_CASE("theorem harness on heisenberg5") {
  const Setup s = setup("heisenberg5");
  const TheoremReport rep = verify_theorems(s.m, s.pack, s.conn, PseudoProjectiveParams{Rat(1), Rat(1), std::nullopt});
  CHECK_FALSE(rep.has_violation());
  const auto find = [&](const char* id) -> const TheoremEntry& {
    for (const auto& e : rep.entries)
      if (e.id == id) return e;
    throw std::logic_error("missing theorem entry");
  };
  CHECK(find("3.1").hypothesis_holds);
  CHECK(find("3.1").conclusion == TheoremEntry::Conclusion::Holds);
  CHECK_FALSE(find("3.2").hypothesis_holds);  // nabla S != 0
  CHECK_FALSE(find("4.1").hypothesis_holds);
  CHECK_FALSE(find("4.3").hypothesis_holds);
  CHECK_FALSE(find("4.5").hypothesis_holds);
  CHECK_FALSE(find("4.7").hypothesis_holds);
  CHECK_FALSE(find("4.10").hypothesis_holds);
}

TEST_CASE("violation flag semantics") {
  TheoremEntry e{"0.0", "synthetic", true, TheoremEntry::Conclusion::Fails, ""};
  CHECK(e.violation());
  e.hypothesis_holds = false;  // a failed conclusion without its hypothesis is not a violation
  CHECK_FALSE(e.violation());
  e.hypothesis_holds = true;
  e.conclusion = TheoremEntry::Conclusion::NotApplicable;
  CHECK_FALSE(e.violation());
  TheoremReport rep;
  rep.entries.push_back(e);
  CHECK_FALSE(rep.has_violation());
  rep.entries.push_back(TheoremEntry{"0.1", "synthetic", true, TheoremEntry::Conclusion::Fails, ""});
  CHECK(rep.has_violation());
}

TEST_CASE("theorem harness on a non-Sasakian input marks everything not applicable") {
  const Setup s = setup("abelian5");
  const TheoremReport rep = verify_theorems(s.m, s.pack, s.conn, PseudoProjectiveParams{Rat(1), Rat(1), std::nullopt});
  CHECK_FALSE(rep.has_violation());
  for (const auto& e : rep.entries) {
    CHECK_FALSE(e.hypothesis_holds);
    CHECK(e.conclusion == TheoremEntry::Conclusion::NotApplicable);
  }
}
