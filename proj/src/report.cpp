#include "framegeo/report.hpp"

#include <json.hpp>

#include <sstream>

#include "framegeo/builtins.hpp"

namespace framegeo {

namespace {

using nlohmann::ordered_json;

std::string e_name(int i) { return "e" + std::to_string(i + 1); }

// The published connection table for the heisenberg5 example (rows: nabla_{e_i} e_j).
const int kPaperNabla[5][5][5] = {
    // nabla_{e1} e_j
    {{0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}},
    // nabla_{e2} e_j
    {{0, 0, -1, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}},
    // nabla_{e3} e_j
    {{0, -1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}},
    // nabla_{e4} e_j
    {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, -1}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}},
    // nabla_{e5} e_j
    {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}};

// The published Ricci diagonal for the same example.
const int kPaperRicciDiag[5] = {-2, 3, 4, 4, -1};

bool same_structure(const FrameManifold& a, const FrameManifold& b) {
  return a.dim == b.dim && a.c == b.c && a.g == b.g && a.phi == b.phi && a.xi == b.xi && a.eta == b.eta;
}

std::optional<Discrepancies> paper_discrepancies(const FrameManifold& m, const Connection& conn,
                                                 const CurvaturePack& pack) {
  if (!same_structure(m, builtin_manifold("heisenberg5"))) return std::nullopt;
  Discrepancies d;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      std::vector<Rat> paper(5), engine(5);
      bool differs = false;
      for (int l = 0; l < 5; ++l) {
        paper[static_cast<std::size_t>(l)] = Rat(kPaperNabla[i][j][l]);
        engine[static_cast<std::size_t>(l)] = conn.gamma.at({l, i, j});
        if (!(paper[static_cast<std::size_t>(l)] == engine[static_cast<std::size_t>(l)])) differs = true;
      }
      if (differs) d.connection.push_back({i, j, std::move(paper), std::move(engine)});
    }
  for (int i = 0; i < 5; ++i) {
    const Rat paper(kPaperRicciDiag[i]);
    if (!(paper == pack.ricci.at({i, i}))) d.ricci.push_back({i, paper, pack.ricci.at({i, i})});
  }
  return d;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string check_str(const CheckResult& c) {
  return c.pass ? "yes" : "no (" + c.witness + ")";
}

std::string matrix_row_str(const Tensor& t, int i) {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < t.dim(); ++j) {
    if (j) os << " ";
    os << t.at({i, j}).str();
  }
  os << "]";
  return os.str();
}

ordered_json matrix_json(const Tensor& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < t.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(t.at({i, j}).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json vector_json(const Tensor& t) {
  ordered_json v = ordered_json::array();
  for (int i = 0; i < t.dim(); ++i) v.push_back(t.at({i}).str());
  return v;
}

const char* einstein_kind_str(EinsteinKind k) {
  switch (k) {
    case EinsteinKind::Einstein: return "einstein";
    case EinsteinKind::EtaEinstein: return "eta_einstein";
    case EinsteinKind::StarEinstein: return "star_einstein";
    case EinsteinKind::StarEtaEinstein: return "star_eta_einstein";
    case EinsteinKind::None: return "none";
  }
  return "none";
}

std::string coeff_term(const Rat& c, const char* term) {
  if (c == Rat(1)) return term;
  if (c == Rat(-1)) return std::string("-") + term;
  return c.str() + " " + term;
}

std::string einstein_text(const EinsteinClass& c, const char* symbol) {
  switch (c.kind) {
    case EinsteinKind::Einstein:
    case EinsteinKind::StarEinstein:
      if (c.alpha.is_zero()) return std::string(symbol) + " = 0";
      return std::string(symbol) + " = " + coeff_term(c.alpha, "g");
    case EinsteinKind::EtaEinstein:
    case EinsteinKind::StarEtaEinstein: {
      std::string out = std::string(symbol) + " = " + coeff_term(c.alpha, "g");
      out += c.beta.sign() < 0 ? " - " + coeff_term(-c.beta, "η⊗η") : " + " + coeff_term(c.beta, "η⊗η");
      return out;
    }
    case EinsteinKind::None:
      return std::string(symbol) + ": no Einstein or η-Einstein form";
  }
  return "";
}

const char* status_str(SolitonStatus s) {
  switch (s) {
    case SolitonStatus::Unique: return "unique";
    case SolitonStatus::Parametric: return "parametric";
    case SolitonStatus::None: return "none";
  }
  return "none";
}

const char* conclusion_str(TheoremEntry::Conclusion c) {
  switch (c) {
    case TheoremEntry::Conclusion::Holds: return "HOLDS";
    case TheoremEntry::Conclusion::Fails: return "FAILS";
    case TheoremEntry::Conclusion::NotApplicable: return "n/a";
  }
  return "n/a";
}

}  // namespace

std::string combo_str(std::span<const Rat> v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Rat& c = v[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c == Rat(-1))
        os << "-";
      else if (!(c == Rat(1)))
        os << c.str() << " ";
      first = false;
    } else {
      if (c.sign() < 0) {
        os << " - ";
        const Rat a = -c;
        if (!(a == Rat(1))) os << a.str() << " ";
      } else {
        os << " + ";
        if (!(c == Rat(1))) os << c.str() << " ";
      }
    }
    os << "e" << (k + 1);
  }
  if (first) return "0";
  return os.str();
}

std::string lambda_str(const SolitonSolution& sol, int dim, bool conformal) {
  if (!conformal) return sol.lambda_shifted.str();
  std::string shift = "(1/2)(p + 2/" + std::to_string(dim) + ")";
  if (sol.lambda_shifted.is_zero()) return shift;
  return sol.lambda_shifted.str() + " + " + shift;
}

std::string render_soliton_text(const std::string& variant, const SolitonSolution& sol, const FrameManifold& m,
                                bool sasakian) {
  std::ostringstream os;
  os << variant << ": " << status_str(sol.status);
  const SolitonVariant var = SolitonVariant::from_name(variant);
  if (sol.status == SolitonStatus::Unique) {
    os << ": λ̃ = " << sol.lambda_shifted.str() << ", μ = " << sol.mu.str();
    os << "; λ = " << lambda_str(sol, m.dim, var.conformal);
    if (sasakian && var.conformal && var.tensor_choice == TensorChoice::StarRicci) {
      os << "; λ+μ = (1/2)(p + 2/" << m.dim << "): " << (sol.constraint_3_7 ? "satisfied" : "violated");
    }
  } else if (sol.status == SolitonStatus::Parametric) {
    os << ": free unknowns";
    for (const auto& u : sol.free_unknowns) os << " " << u;
  }
  return os.str();
}

Report build_report(const FrameManifold& m, const PseudoProjectiveParams& params) {
  Report r;
  r.manifold = m;
  r.params = params;
  r.conn = levi_civita(m);
  r.structure = classify_contact(m, r.conn);
  r.pack = curvature_pack(m, r.conn);
  if (r.structure.sasakian.pass) r.identity_suite = sasakian_identity_suite(m, r.conn, r.pack);
  r.conditions.push_back(derivation_condition(m, r.pack, DerivationKind::RXiDotS));
  r.conditions.push_back(derivation_condition(m, r.pack, DerivationKind::SXiDotR));
  r.conditions.push_back(derivation_condition(m, r.pack, DerivationKind::PbarXiDotS, &params));
  r.conditions.push_back(phi_flatness(m, r.pack, FlatnessKind::Conharmonic));
  r.conditions.push_back(phi_flatness(m, r.pack, FlatnessKind::Projective));
  for (const auto& name : SolitonVariant::names())
    r.solitons.emplace_back(name, solve_soliton(m, r.pack, r.conn, SolitonVariant::from_name(name)));
  std::tie(r.einstein_ricci, r.einstein_star) = classify_einstein(m, r.pack);
  r.theorems = verify_theorems(m, r.pack, r.conn, params);
  r.discrepancies = paper_discrepancies(m, r.conn, r.pack);
  return r;
}

namespace {

std::string render_text(const Report& r) {
  const FrameManifold& m = r.manifold;
  const int n = m.dim;
  std::ostringstream os;

  os << "== Manifold ==\n";
  os << "name: " << m.name << "\n";
  os << "dimension: " << n << " (2n+1 with n = " << m.paper_n() << ")\n";
  os << "brackets (nonzero, i < j):\n";
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto br = m.bracket(i, j);
      bool nonzero = false;
      for (const Rat& c : br)
        if (!c.is_zero()) nonzero = true;
      if (!nonzero) continue;
      any = true;
      os << "  [" << e_name(i) << ", " << e_name(j) << "] = " << combo_str(br) << "\n";
    }
  if (!any) os << "  (none; abelian)\n";
  if (m.g == Tensor::identity_metric(n)) {
    os << "metric: identity\n";
  } else {
    os << "metric:\n";
    for (int i = 0; i < n; ++i) os << "  " << matrix_row_str(m.g, i) << "\n";
  }
  os << "phi columns (φ(e_j)):\n";
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = m.phi.at({i, j});
    os << "  φ" << e_name(j) << " = " << combo_str(col) << "\n";
  }
  {
    std::vector<Rat> xi_v(static_cast<std::size_t>(n)), eta_v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});
      eta_v[static_cast<std::size_t>(i)] = m.eta.at({i});
    }
    os << "xi = " << combo_str(xi_v) << "\n";
    os << "eta components = " << combo_str(eta_v) << " (as covector)\n";
  }

  os << "\n== Structure classification ==\n";
  os << "almost contact metric: " << check_str(r.structure.almost_contact_metric) << "\n";
  os << "contact metric: " << check_str(r.structure.contact_metric) << "\n";
  os << "K-contact: " << check_str(r.structure.k_contact) << "\n";
  os << "normal: " << check_str(r.structure.normal) << "\n";
  os << "sasakian: " << check_str(r.structure.sasakian) << "\n";

  os << "\n== Levi-Civita connection (nonzero) ==\n";
  any = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> v(static_cast<std::size_t>(n));
      bool nonzero = false;
      for (int l = 0; l < n; ++l) {
        v[static_cast<std::size_t>(l)] = r.conn.gamma.at({l, i, j});
        if (!v[static_cast<std::size_t>(l)].is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      any = true;
      os << "  ∇_{" << e_name(i) << "} " << e_name(j) << " = " << combo_str(v) << "\n";
    }
  if (!any) os << "  (flat: all Γ = 0)\n";

  os << "\n== Curvature ==\n";
  os << "nonzero R(e_i,e_j)e_k (i < j):\n";
  any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto v = r.pack.r_vec(i, j, k);
        bool nonzero = false;
        for (const Rat& c : v)
          if (!c.is_zero()) nonzero = true;
        if (!nonzero) continue;
        any = true;
        os << "  R(" << e_name(i) << "," << e_name(j) << ")" << e_name(k) << " = " << combo_str(v) << "\n";
      }
  if (!any) os << "  (zero curvature)\n";
  os << "Ricci S:\n";
  for (int i = 0; i < n; ++i) os << "  " << matrix_row_str(r.pack.ricci, i) << "\n";
  for (int i = 0; i < n; ++i) os << "S(" << e_name(i) << "," << e_name(i) << ") = " << r.pack.ricci.at({i, i}).str() << "\n";
  os << "scalar curvature r = " << r.pack.scalar.str() << "\n";
  os << "star-Ricci S*:\n";
  for (int i = 0; i < n; ++i) os << "  " << matrix_row_str(r.pack.star_ricci, i) << "\n";

  if (!r.identity_suite.empty()) {
    os << "\n== Sasakian identity suite ==\n";
    for (const auto& c : r.identity_suite) {
      os << "(" << c.id << ") " << c.description << ": " << (c.pass ? "pass" : "fail");
      if (!c.pass) os << " (" << c.witness << ")";
      if (!c.required) os << " [informational]";
      os << "\n";
    }
  }

  os << "\n== Curvature conditions ==\n";
  os << "(pseudo-projective parameters: a = " << r.params.a.str() << ", b = " << r.params.b.str();
  if (r.params.r_override) os << ", r override = " << r.params.r_override->str();
  os << ")\n";
  for (const auto& c : r.conditions) {
    os << c.kind << ": " << (c.holds ? "holds" : "fails");
    if (!c.holds) os << " (" << c.witness << ")";
    os << "\n";
    for (const auto& sub : c.consistency) {
      os << "  " << sub.name << ": " << (sub.pass ? "pass" : "fail");
      if (!sub.pass) os << " (" << sub.witness << ")";
      os << "\n";
    }
  }

  os << "\n== Soliton solutions ==\n";
  for (const auto& [name, sol] : r.solitons)
    os << render_soliton_text(name, sol, m, r.structure.sasakian.pass) << "\n";

  os << "\n== Einstein classification ==\n";
  os << einstein_kind_str(r.einstein_ricci.kind) << ": " << einstein_text(r.einstein_ricci, "S") << "\n";
  os << einstein_kind_str(r.einstein_star.kind) << ": " << einstein_text(r.einstein_star, "S*") << "\n";

  os << "\n== Theorems ==\n";
  for (const auto& e : r.theorems.entries) {
    os << "Thm " << e.id << " (" << e.statement << "): hypothesis " << (e.hypothesis_holds ? "HOLDS" : "fails")
       << ", conclusion " << conclusion_str(e.conclusion);
    if (!e.details.empty()) os << " — " << e.details;
    if (e.violation()) os << " [VIOLATION]";
    os << "\n";
  }

  if (r.discrepancies) {
    os << "\n== Paper discrepancies (printed tables vs engine) ==\n";
    os << "connection entries:\n";
    for (const auto& row : r.discrepancies->connection)
      os << "  ∇_{" << e_name(row.i) << "} " << e_name(row.j) << ": paper " << combo_str(row.paper) << ", engine "
         << combo_str(row.engine) << "\n";
    os << "Ricci diagonal entries:\n";
    for (const auto& row : r.discrepancies->ricci)
      os << "  S(" << e_name(row.i) << "," << e_name(row.i) << "): paper " << row.paper.str() << ", engine "
         << row.engine.str() << "\n";
  }
  return os.str();
}

ordered_json soliton_json(const std::string& name, const SolitonSolution& sol, const FrameManifold& m) {
  ordered_json j;
  j["variant"] = name;
  j["status"] = status_str(sol.status);
  if (sol.status != SolitonStatus::None) {
    j["lambda_shifted"] = sol.lambda_shifted.str();
    j["mu"] = sol.mu.str();
    j["lambda_constant"] = sol.lambda_constant.str();
    j["lambda_p_coefficient"] = sol.lambda_p_coeff.str();
    j["constraint_3_7"] = sol.constraint_3_7;
  }
  if (sol.status == SolitonStatus::Parametric) j["free_unknowns"] = sol.free_unknowns;
  (void)m;
  return j;
}

ordered_json render_json_doc(const Report& r) {
  const FrameManifold& m = r.manifold;
  const int n = m.dim;
  ordered_json j;

  ordered_json jm;
  jm["name"] = m.name;
  jm["dimension"] = n;
  ordered_json jbr = ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj) {
      const auto br = m.bracket(i, jj);
      ordered_json coeffs;
      for (int k = 0; k < n; ++k)
        if (!br[static_cast<std::size_t>(k)].is_zero()) coeffs[std::to_string(k + 1)] = br[static_cast<std::size_t>(k)].str();
      if (!coeffs.empty()) jbr.push_back(ordered_json{{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  jm["brackets"] = jbr;
  jm["metric"] = matrix_json(m.g);
  jm["phi"] = matrix_json(m.phi);
  jm["xi"] = vector_json(m.xi);
  jm["eta"] = vector_json(m.eta);
  j["manifold"] = jm;

  ordered_json js;
  const auto flag = [](const CheckResult& c) {
    ordered_json f;
    f["pass"] = c.pass;
    if (!c.pass) f["witness"] = c.witness;
    return f;
  };
  js["almost_contact_metric"] = flag(r.structure.almost_contact_metric);
  js["contact_metric"] = flag(r.structure.contact_metric);
  js["k_contact"] = flag(r.structure.k_contact);
  js["normal"] = flag(r.structure.normal);
  js["sasakian"] = flag(r.structure.sasakian);
  j["structure"] = js;

  ordered_json jconn = ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int l = 0; l < n; ++l)
        if (!r.conn.gamma.at({l, i, jj}).is_zero())
          jconn.push_back(ordered_json{{"i", i + 1}, {"j", jj + 1}, {"k", l + 1}, {"value", r.conn.gamma.at({l, i, jj}).str()}});
  j["connection_nonzero"] = jconn;

  ordered_json jcurv;
  ordered_json jriem = ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        const auto v = r.pack.r_vec(i, jj, k);
        ordered_json comps;
        for (int l = 0; l < n; ++l)
          if (!v[static_cast<std::size_t>(l)].is_zero()) comps[std::to_string(l + 1)] = v[static_cast<std::size_t>(l)].str();
        if (!comps.empty()) jriem.push_back(ordered_json{{"i", i + 1}, {"j", jj + 1}, {"k", k + 1}, {"components", comps}});
      }
  jcurv["riemann_nonzero"] = jriem;
  jcurv["ricci"] = matrix_json(r.pack.ricci);
  jcurv["scalar"] = r.pack.scalar.str();
  jcurv["star_ricci"] = matrix_json(r.pack.star_ricci);
  j["curvature"] = jcurv;

  ordered_json jsuite = ordered_json::array();
  for (const auto& c : r.identity_suite) {
    ordered_json e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["required"] = c.required;
    e["pass"] = c.pass;
    if (!c.pass) e["witness"] = c.witness;
    jsuite.push_back(e);
  }
  j["identity_suite"] = jsuite;

  ordered_json jcond = ordered_json::array();
  for (const auto& c : r.conditions) {
    ordered_json e;
    e["kind"] = c.kind;
    e["holds"] = c.holds;
    if (!c.holds) e["witness"] = c.witness;
    if (!c.consistency.empty()) {
      ordered_json subs = ordered_json::array();
      for (const auto& s : c.consistency) {
        ordered_json se;
        se["name"] = s.name;
        se["pass"] = s.pass;
        if (!s.pass) se["witness"] = s.witness;
        subs.push_back(se);
      }
      e["consistency"] = subs;
    }
    jcond.push_back(e);
  }
  j["conditions"] = jcond;
  j["parameters"] = ordered_json{{"a", r.params.a.str()}, {"b", r.params.b.str()}};
  if (r.params.r_override) j["parameters"]["r_override"] = r.params.r_override->str();

  ordered_json jsol;
  for (const auto& [name, sol] : r.solitons) jsol[name] = soliton_json(name, sol, m);
  j["solitons"] = jsol;

  ordered_json jein;
  {
    ordered_json e;
    e["kind"] = einstein_kind_str(r.einstein_ricci.kind);
    if (r.einstein_ricci.kind != EinsteinKind::None) {
      e["alpha"] = r.einstein_ricci.alpha.str();
      if (r.einstein_ricci.kind == EinsteinKind::EtaEinstein) e["beta"] = r.einstein_ricci.beta.str();
    }
    jein["ricci"] = e;
    if (r.einstein_ricci.kind == EinsteinKind::Einstein) j["einstein"] = ordered_json{{"alpha", r.einstein_ricci.alpha.str()}};
  }
  {
    ordered_json e;
    e["kind"] = einstein_kind_str(r.einstein_star.kind);
    if (r.einstein_star.kind != EinsteinKind::None) {
      e["alpha"] = r.einstein_star.alpha.str();
      if (r.einstein_star.kind == EinsteinKind::StarEtaEinstein) e["beta"] = r.einstein_star.beta.str();
    }
    jein["star_ricci"] = e;
  }
  j["einstein_classification"] = jein;

  ordered_json jthm = ordered_json::array();
  for (const auto& e : r.theorems.entries) {
    ordered_json t;
    t["id"] = e.id;
    t["statement"] = e.statement;
    t["hypothesis_holds"] = e.hypothesis_holds;
    t["conclusion"] = conclusion_str(e.conclusion);
    t["details"] = e.details;
    t["violation"] = e.violation();
    jthm.push_back(t);
  }
  j["theorems"] = jthm;

  if (r.discrepancies) {
    ordered_json jd;
    ordered_json jc = ordered_json::array();
    for (const auto& row : r.discrepancies->connection) {
      ordered_json pv = ordered_json::array(), ev = ordered_json::array();
      for (const Rat& c : row.paper) pv.push_back(c.str());
      for (const Rat& c : row.engine) ev.push_back(c.str());
      jc.push_back(ordered_json{{"i", row.i + 1}, {"j", row.j + 1}, {"paper", pv}, {"engine", ev}});
    }
    jd["connection"] = jc;
    ordered_json jr = ordered_json::array();
    for (const auto& row : r.discrepancies->ricci)
      jr.push_back(ordered_json{{"i", row.i + 1}, {"paper", row.paper.str()}, {"engine", row.engine.str()}});
    jd["ricci_diagonal"] = jr;
    j["paper_discrepancies"] = jd;
  }
  return j;
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Text) return render_text(report);
  return render_json_doc(report).dump(2) + "\n";
}

}  // namespace framegeo
