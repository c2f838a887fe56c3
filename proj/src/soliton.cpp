#include "framegeo/soliton.hpp"

#include <stdexcept>

#include "framegeo/linear.hpp"

namespace framegeo {

namespace {

const Tensor& choice_tensor(const CurvaturePack& pack, TensorChoice c) {
  return c == TensorChoice::Ricci ? pack.ricci : pack.star_ricci;
}

Tensor potential_of(const FrameManifold& m, const SolitonVariant& v) {
  if (v.potential) {
    if (v.potential->dim() != m.dim || v.potential->rank() != 1)
      throw std::invalid_argument("soliton: potential has wrong shape");
    return *v.potential;
  }
  return m.xi;
}

/// T = alpha g (+ beta eta(x)eta) exact fit.
EinsteinClass fit_einstein(const FrameManifold& m, const Tensor& t, bool star) {
  const int n = m.dim;
  {
    LinearSystem sys;
    sys.unknowns = {"alpha"};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sys.add_row({m.g.at({i, j})}, t.at({i, j}));
    const LinearSolution sol = solve_exact(sys);
    if (sol.status == SolveStatus::Unique)
      return {star ? EinsteinKind::StarEinstein : EinsteinKind::Einstein, sol.values[0], Rat(0)};
  }
  {
    LinearSystem sys;
    sys.unknowns = {"alpha", "beta"};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sys.add_row({m.g.at({i, j}), m.eta.at({i}) * m.eta.at({j})}, t.at({i, j}));
    const LinearSolution sol = solve_exact(sys);
    if (sol.status == SolveStatus::Unique)
      return {star ? EinsteinKind::StarEtaEinstein : EinsteinKind::EtaEinstein, sol.values[0], sol.values[1]};
  }
  return {EinsteinKind::None, Rat(0), Rat(0)};
}

}  // namespace

SolitonVariant SolitonVariant::from_name(std::string_view name) {
  if (name == "ricci") return {TensorChoice::Ricci, false, false, std::nullopt};
  if (name == "eta-ricci") return {TensorChoice::Ricci, false, true, std::nullopt};
  if (name == "conformal-eta-ricci") return {TensorChoice::Ricci, true, true, std::nullopt};
  if (name == "star-ricci") return {TensorChoice::StarRicci, false, false, std::nullopt};
  if (name == "star-conformal-eta") return {TensorChoice::StarRicci, true, true, std::nullopt};
  throw std::invalid_argument("unknown soliton variant '" + std::string(name) + "'");
}

const std::vector<std::string>& SolitonVariant::names() {
  static const std::vector<std::string> names = {"ricci", "eta-ricci", "conformal-eta-ricci", "star-ricci",
                                                 "star-conformal-eta"};
  return names;
}

Tensor soliton_residual(const FrameManifold& m, const CurvaturePack& pack, const Connection& conn,
                        const SolitonVariant& variant, const Rat& lambda_shifted, const Rat& mu) {
  const int n = m.dim;
  const Tensor lie = lie_derivative_metric(m, conn, potential_of(m, variant));
  const Tensor& t = choice_tensor(pack, variant.tensor_choice);
  Tensor res(n, {Slot::Lower, Slot::Lower});
  const Rat two(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = lie.at({i, j}) + two * t.at({i, j}) + two * lambda_shifted * m.g.at({i, j});
      if (variant.eta_term) v += two * mu * m.eta.at({i}) * m.eta.at({j});
      res.at({i, j}) = v;
    }
  return res;
}

SolitonSolution solve_soliton(const FrameManifold& m, const CurvaturePack& pack, const Connection& conn,
                              const SolitonVariant& variant) {
  const int n = m.dim;
  const Tensor lie = lie_derivative_metric(m, conn, potential_of(m, variant));
  const Tensor& t = choice_tensor(pack, variant.tensor_choice);

  LinearSystem sys;
  sys.unknowns = variant.eta_term ? std::vector<std::string>{"lambda", "mu"} : std::vector<std::string>{"lambda"};
  const Rat two(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> coeffs{two * m.g.at({i, j})};
      if (variant.eta_term) coeffs.push_back(two * m.eta.at({i}) * m.eta.at({j}));
      sys.add_row(std::move(coeffs), -(lie.at({i, j}) + two * t.at({i, j})));
    }
  const LinearSolution lin = solve_exact(sys);

  SolitonSolution sol;
  switch (lin.status) {
    case SolveStatus::Inconsistent:
      sol.status = SolitonStatus::None;
      return sol;
    case SolveStatus::Underdetermined:
      sol.status = SolitonStatus::Parametric;
      for (std::size_t u = 0; u < sys.unknowns.size(); ++u)
        if (lin.is_free[u]) sol.free_unknowns.push_back(sys.unknowns[u]);
      break;
    case SolveStatus::Unique:
      sol.status = SolitonStatus::Unique;
      break;
  }
  sol.lambda_shifted = lin.values[0];
  sol.mu = variant.eta_term ? lin.values[1] : Rat(0);
  // lambda = lambda_shifted + 1/2 (p + 2/dim) for conformal members.
  sol.lambda_constant = sol.lambda_shifted;
  sol.lambda_p_coeff = Rat(0);
  if (variant.conformal) {
    sol.lambda_constant += Rat(1) / Rat(n);
    sol.lambda_p_coeff = Rat(1, 2);
  }
  sol.constraint_3_7 = (sol.lambda_shifted + sol.mu).is_zero();
  return sol;
}

std::pair<EinsteinClass, EinsteinClass> classify_einstein(const FrameManifold& m, const CurvaturePack& pack) {
  return {fit_einstein(m, pack.ricci, false), fit_einstein(m, pack.star_ricci, true)};
}

bool TheoremReport::has_violation() const {
  for (const auto& e : entries)
    if (e.violation()) return true;
  return false;
}

TheoremReport verify_theorems(const FrameManifold& m, const CurvaturePack& pack, const Connection& conn,
                              const PseudoProjectiveParams& params) {
  const int n = m.dim;
  const int two_n = n - 1;
  TheoremReport report;

  const StructureClass sc = classify_contact(m, conn);
  const bool sasakian = sc.sasakian.pass;
  const SolitonSolution sol = solve_soliton(m, pack, conn, SolitonVariant::from_name("star-conformal-eta"));
  const bool soliton_ok = sol.status == SolitonStatus::Unique;
  const bool base = sasakian && soliton_ok;
  const std::string base_blocker = !sasakian ? "manifold is not Sasakian"
                                             : "no unique star-conformal-eta soliton solution";

  const auto conclude_constants = [&](TheoremEntry& e, const Rat& mu_expect, const Rat& lambda_shift_expect) {
    if (sol.mu == mu_expect && sol.lambda_shifted == lambda_shift_expect) {
      e.conclusion = TheoremEntry::Conclusion::Holds;
      e.details += "μ = " + sol.mu.str() + ", λ̃ = " + sol.lambda_shifted.str();
    } else {
      e.conclusion = TheoremEntry::Conclusion::Fails;
      e.details += "expected μ = " + mu_expect.str() + ", λ̃ = " + lambda_shift_expect.str() + "; got μ = " +
                   sol.mu.str() + ", λ̃ = " + sol.lambda_shifted.str();
    }
  };
  const auto conclude_ricci_form = [&](TheoremEntry& e, const Rat& alpha, const Rat& beta) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat expect = alpha * m.g.at({i, j}) + beta * m.eta.at({i}) * m.eta.at({j});
        if (!(pack.ricci.at({i, j}) == expect)) {
          ok = false;
          break;
        }
      }
    e.conclusion = ok ? TheoremEntry::Conclusion::Holds : TheoremEntry::Conclusion::Fails;
    e.details += "S = " + alpha.str() + " g" + (beta.is_zero() ? "" : " + " + beta.str() + " η⊗η") +
                 (ok ? " holds" : " fails");
  };

  {
    TheoremEntry e{"3.1", "soliton ⇒ cyclic Ricci tensor", base, TheoremEntry::Conclusion::NotApplicable, ""};
    if (base) {
      const NablaRicci nr = nabla_ricci(m, conn, pack.ricci);
      if (nr.cyclic.is_zero()) {
        e.conclusion = TheoremEntry::Conclusion::Holds;
        e.details = "cyclic sum of ∇S vanishes on all triples";
      } else {
        e.conclusion = TheoremEntry::Conclusion::Fails;
        const auto bad = *nr.cyclic.first_nonzero();
        e.details = "cyclic sum nonzero at (e" + std::to_string(bad[0] + 1) + ",e" + std::to_string(bad[1] + 1) +
                    ",e" + std::to_string(bad[2] + 1) + ")";
      }
    } else {
      e.details = base_blocker;
    }
    report.entries.push_back(e);
  }
  {
    TheoremEntry e{"3.2", "∇S = 0 ⇒ μ = 1, λ̃ = -1", false, TheoremEntry::Conclusion::NotApplicable, ""};
    const bool nabla_s_zero = base && nabla_ricci(m, conn, pack.ricci).nabla_s.is_zero();
    e.hypothesis_holds = base && nabla_s_zero;
    if (e.hypothesis_holds) {
      conclude_constants(e, Rat(1), Rat(-1));
    } else {
      e.details = base ? "∇S ≠ 0" : base_blocker;
    }
    report.entries.push_back(e);
  }

  const ConditionReport r_xi_s = derivation_condition(m, pack, DerivationKind::RXiDotS);
  {
    TheoremEntry e{"4.1", "R(ξ,X)·S = 0 ⇒ μ = 1, λ̃ = -1", base && r_xi_s.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_constants(e, Rat(1), Rat(-1));
    else
      e.details = base ? "condition fails: " + r_xi_s.witness : base_blocker;
    report.entries.push_back(e);
  }
  {
    TheoremEntry e{"4.2", "R(ξ,X)·S = 0 ⇒ Einstein, S = 2n g", base && r_xi_s.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_ricci_form(e, Rat(two_n), Rat(0));
    else
      e.details = base ? "condition fails" : base_blocker;
    report.entries.push_back(e);
  }

  const ConditionReport s_xi_r = derivation_condition(m, pack, DerivationKind::SXiDotR);
  {
    TheoremEntry e{"4.3", "S(ξ,X)·R = 0 ⇒ μ = 1-4n, λ̃ = 4n-1", base && s_xi_r.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_constants(e, Rat(1 - 2 * two_n), Rat(2 * two_n - 1));
    else
      e.details = base ? "condition fails: " + s_xi_r.witness : base_blocker;
    report.entries.push_back(e);
  }
  {
    TheoremEntry e{"4.4", "S(ξ,X)·R = 0 ⇒ η-Einstein, S = -2n g + 4n η⊗η", base && s_xi_r.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_ricci_form(e, Rat(-two_n), Rat(2 * two_n));
    else
      e.details = base ? "condition fails" : base_blocker;
    report.entries.push_back(e);
  }

  {
    const ConditionReport pbar_s = derivation_condition(m, pack, DerivationKind::PbarXiDotS, &params);
    TheoremEntry e{"4.5", "P̄(ξ,X)·S = 0 ⇒ μ = 1 or r = 2n(2n+1)a/(a+2nb)", base && pbar_s.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds) {
      const Rat r_used = params.r_override.value_or(pack.scalar);
      const Rat denom = params.a + Rat(two_n) * params.b;
      const bool mu_branch = sol.mu == Rat(1);
      const bool r_branch = !denom.is_zero() && r_used * denom == Rat(two_n) * Rat(n) * params.a;
      if (mu_branch) {
        e.conclusion = TheoremEntry::Conclusion::Holds;
        e.details = "μ = 1 branch holds (λ̃ = " + sol.lambda_shifted.str() + ")";
      } else if (r_branch) {
        e.conclusion = TheoremEntry::Conclusion::Holds;
        e.details = "r-branch holds: r = " + r_used.str() + " = 2n(2n+1)a/(a+2nb)";
        if (params.r_override && *params.r_override == Rat(-1))
          e.details += "; equivalently [2n(2n+1)+1]a + 2nb = 0";
      } else {
        e.conclusion = TheoremEntry::Conclusion::Fails;
        e.details = "neither branch: μ = " + sol.mu.str() + ", r = " + r_used.str();
      }
    } else {
      e.details = base ? "condition fails: " + pbar_s.witness : base_blocker;
    }
    report.entries.push_back(e);
  }

  const ConditionReport conflat = phi_flatness(m, pack, FlatnessKind::Conharmonic);
  {
    TheoremEntry e{"4.7", "φ-conharmonically flat ⇒ μ = -2n, λ̃ = 2n", base && conflat.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_constants(e, Rat(-two_n), Rat(two_n));
    else
      e.details = base ? "not φ-conharmonically flat: " + conflat.witness : base_blocker;
    report.entries.push_back(e);
  }
  {
    TheoremEntry e{"4.8", "φ-conharmonically flat ⇒ η-Einstein, S = -g + (2n+1) η⊗η", base && conflat.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_ricci_form(e, Rat(-1), Rat(n));
    else
      e.details = base ? "not φ-conharmonically flat" : base_blocker;
    report.entries.push_back(e);
  }

  const ConditionReport proflat = phi_flatness(m, pack, FlatnessKind::Projective);
  {
    TheoremEntry e{"4.10", "φ-projectively flat ⇒ μ = 1, λ̃ = -1", base && proflat.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_constants(e, Rat(1), Rat(-1));
    else
      e.details = base ? "not φ-projectively flat: " + proflat.witness : base_blocker;
    report.entries.push_back(e);
  }
  {
    TheoremEntry e{"4.11", "φ-projectively flat ⇒ Einstein, S = 2n g", base && proflat.holds,
                   TheoremEntry::Conclusion::NotApplicable, ""};
    if (e.hypothesis_holds)
      conclude_ricci_form(e, Rat(two_n), Rat(0));
    else
      e.details = base ? "not φ-projectively flat" : base_blocker;
    report.entries.push_back(e);
  }

  return report;
}

}  // namespace framegeo
