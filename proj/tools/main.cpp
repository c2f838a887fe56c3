#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "framegeo/builtins.hpp"
#include "framegeo/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw framegeo::ParseError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

framegeo::Rat parse_rat_flag(const std::string& text, const char* flag) {
  try {
    return framegeo::Rat::parse(text);
  } catch (const std::invalid_argument&) {
    throw framegeo::ParseError(flag, "expected a rational like 2 or -1/3, got '" + text + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact tensor calculus on homogeneous frame manifolds"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string variant = "star-conformal-eta";
  std::string a_text = "1", b_text = "1", r_override_text;
  std::string example_name;

  CLI::App* validate = app.add_subcommand("validate", "parse a manifold file and print its classification");
  validate->add_option("path", path, "manifold file")->required();

  CLI::App* report = app.add_subcommand("report", "full curvature/soliton/theorem report");
  report->add_option("path", path, "manifold file")->required();
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--a", a_text, "pseudo-projective constant a (rational, nonzero)");
  report->add_option("--b", b_text, "pseudo-projective constant b (rational, nonzero)");
  report->add_option("--r-override", r_override_text, "use this scalar curvature in the pseudo-projective tensor");

  CLI::App* soliton = app.add_subcommand("soliton", "solve one soliton variant");
  soliton->add_option("path", path, "manifold file")->required();
  soliton->add_option("--variant", variant, "ricci|eta-ricci|conformal-eta-ricci|star-ricci|star-conformal-eta");
  soliton->add_option("--a", a_text, "accepted for interface compatibility; unused");
  soliton->add_option("--b", b_text, "accepted for interface compatibility; unused");

  CLI::App* check = app.add_subcommand("check-theorems", "mechanically verify the theorem suite");
  check->add_option("path", path, "manifold file")->required();
  check->add_option("--a", a_text, "pseudo-projective constant a");
  check->add_option("--b", b_text, "pseudo-projective constant b");
  check->add_option("--r-override", r_override_text, "use this scalar curvature in the pseudo-projective branch");

  CLI::App* examples = app.add_subcommand("examples", "builtin example library");
  examples->require_subcommand(1);
  CLI::App* ex_list = examples->add_subcommand("list", "list builtin example names");
  CLI::App* ex_export = examples->add_subcommand("export", "print a builtin example document");
  ex_export->add_option("name", example_name, "builtin name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*validate) {
    const framegeo::FrameManifold m = framegeo::parse_manifold(read_file(path));
    const framegeo::Connection conn = framegeo::levi_civita(m);
    const framegeo::StructureClass sc = framegeo::classify_contact(m, conn);
    const auto line = [](const char* name, const framegeo::CheckResult& c) {
      std::cout << name << ": " << (c.pass ? "yes" : "no");
      if (!c.pass) std::cout << "  (" << c.witness << ")";
      std::cout << "\n";
    };
    std::cout << "parsed '" << m.name << "' (dimension " << m.dim << ")\n";
    line("almost_contact_metric", sc.almost_contact_metric);
    line("contact_metric", sc.contact_metric);
    line("k_contact", sc.k_contact);
    line("normal", sc.normal);
    line("sasakian", sc.sasakian);
    return kExitOk;
  }

  if (*report) {
    framegeo::PseudoProjectiveParams params;
    params.a = parse_rat_flag(a_text, "--a");
    params.b = parse_rat_flag(b_text, "--b");
    if (!r_override_text.empty()) params.r_override = parse_rat_flag(r_override_text, "--r-override");
    if (params.a.is_zero() || params.b.is_zero())
      throw framegeo::ParseError("--a/--b", "pseudo-projective constants must be nonzero");
    const framegeo::FrameManifold m = framegeo::parse_manifold(read_file(path));
    const framegeo::Report rep = framegeo::build_report(m, params);
    std::cout << framegeo::render_report(rep,
                                         format == "json" ? framegeo::ReportFormat::Json : framegeo::ReportFormat::Text);
    return kExitOk;
  }

  if (*soliton) {
    const framegeo::FrameManifold m = framegeo::parse_manifold(read_file(path));
    const framegeo::SolitonVariant var = framegeo::SolitonVariant::from_name(variant);
    const framegeo::Connection conn = framegeo::levi_civita(m);
    const framegeo::CurvaturePack pack = framegeo::curvature_pack(m, conn);
    const framegeo::SolitonSolution sol = framegeo::solve_soliton(m, pack, conn, var);
    const bool sasakian = framegeo::classify_contact(m, conn).sasakian.pass;
    std::cout << framegeo::render_soliton_text(variant, sol, m, sasakian) << "\n";
    return kExitOk;
  }

  if (*check) {
    framegeo::PseudoProjectiveParams params;
    params.a = parse_rat_flag(a_text, "--a");
    params.b = parse_rat_flag(b_text, "--b");
    if (!r_override_text.empty()) params.r_override = parse_rat_flag(r_override_text, "--r-override");
    if (params.a.is_zero() || params.b.is_zero())
      throw framegeo::ParseError("--a/--b", "pseudo-projective constants must be nonzero");
    const framegeo::FrameManifold m = framegeo::parse_manifold(read_file(path));
    const framegeo::Connection conn = framegeo::levi_civita(m);
    const framegeo::CurvaturePack pack = framegeo::curvature_pack(m, conn);
    const framegeo::TheoremReport rep = framegeo::verify_theorems(m, pack, conn, params);
    for (const auto& e : rep.entries) {
      std::cout << "Thm " << e.id << ": hypothesis " << (e.hypothesis_holds ? "HOLDS" : "fails") << ", conclusion ";
      switch (e.conclusion) {
        case framegeo::TheoremEntry::Conclusion::Holds: std::cout << "HOLDS"; break;
        case framegeo::TheoremEntry::Conclusion::Fails: std::cout << "FAILS"; break;
        case framegeo::TheoremEntry::Conclusion::NotApplicable: std::cout << "n/a"; break;
      }
      if (!e.details.empty()) std::cout << " — " << e.details;
      if (e.violation()) std::cout << " [VIOLATION]";
      std::cout << "\n";
    }
    return rep.has_violation() ? kExitViolation : kExitOk;
  }

  if (*examples) {
    if (*ex_list) {
      for (const auto& ex : framegeo::builtin_examples()) std::cout << ex.name << "\n";
      return kExitOk;
    }
    if (*ex_export) {
      const framegeo::BuiltinExample* ex = framegeo::find_builtin(example_name);
      if (ex == nullptr) throw framegeo::ParseError("examples export", "unknown builtin '" + example_name + "'");
      std::cout << ex->document;
      return kExitOk;
    }
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const framegeo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}
