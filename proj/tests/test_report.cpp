#include <doctest.h>

#include <json.hpp>

#include "framegeo/builtins.hpp"
#include "framegeo/report.hpp"

using namespace framegeo;

namespace {

Report report_of(const char* name) {
  return build_report(builtin_manifold(name), PseudoProjectiveParams{Rat(1), Rat(1), std::nullopt});
}

}  // namespace

TEST_CASE("combo rendering") {
  CHECK(combo_str(std::vector<Rat>{Rat(0), Rat(0), Rat(2)}) == "2 e3");
  CHECK(combo_str(std::vector<Rat>{Rat(1), Rat(0), Rat(-2)}) == "e1 - 2 e3");
  CHECK(combo_str(std::vector<Rat>{Rat(-1), Rat(1, 2)}) == "-e1 + 1/2 e2");
  CHECK(combo_str(std::vector<Rat>{Rat(0), Rat(0)}) == "0");
}

TEST_CASE("heisenberg5 text report carries the headline values") {
  const std::string text = render_report(report_of("heisenberg5"), ReportFormat::Text);
  CHECK(text.find("sasakian: yes") != std::string::npos);
  CHECK(text.find("∇_{e1} e2 = e3") != std::string::npos);
  CHECK(text.find("S(e1,e1) = -2") != std::string::npos);
  CHECK(text.find("S(e3,e3) = 4") != std::string::npos);
  CHECK(text.find("scalar curvature r = -4") != std::string::npos);
  CHECK(text.find("λ̃ = 5, μ = -5") != std::string::npos);
  CHECK(text.find("λ = 5 + (1/2)(p + 2/5)") != std::string::npos);
  CHECK(text.find("λ+μ = (1/2)(p + 2/5): satisfied") != std::string::npos);
  CHECK(text.find("Paper discrepancies") != std::string::npos);
  CHECK(text.find("[VIOLATION]") == std::string::npos);
}

TEST_CASE("discrepancy section lists exactly the three connection rows and three Ricci rows") {
  const Report rep = report_of("heisenberg5");
  REQUIRE(rep.discrepancies.has_value());
  const auto& d = *rep.discrepancies;
  REQUIRE(d.connection.size() == 3);
  // nabla_{e3} e4: paper 0, engine -e5
  CHECK(d.connection[0].i == 2);
  CHECK(d.connection[0].j == 3);
  CHECK(combo_str(d.connection[0].paper) == "0");
  CHECK(combo_str(d.connection[0].engine) == "-e5");
  // nabla_{e5} e3: paper 0, engine e4
  CHECK(d.connection[1].i == 4);
  CHECK(d.connection[1].j == 2);
  CHECK(combo_str(d.connection[1].engine) == "e4");
  // nabla_{e5} e4: paper 0, engine -e3
  CHECK(d.connection[2].i == 4);
  CHECK(d.connection[2].j == 3);
  CHECK(combo_str(d.connection[2].engine) == "-e3");

  REQUIRE(d.ricci.size() == 3);
  CHECK(d.ricci[0].i == 1);  // S(e2,e2): paper 3, engine -2
  CHECK(d.ricci[0].paper == Rat(3));
  CHECK(d.ricci[0].engine == Rat(-2));
  CHECK(d.ricci[1].i == 3);  // S(e4,e4): paper 4, engine -2
  CHECK(d.ricci[2].i == 4);  // S(e5,e5): paper -1, engine -2
  CHECK(d.ricci[2].paper == Rat(-1));
}

TEST_CASE("no discrepancy section off heisenberg5") {
  CHECK_FALSE(report_of("sphere3").discrepancies.has_value());
  CHECK_FALSE(report_of("abelian5").discrepancies.has_value());
}

TEST_CASE("reports are byte-deterministic") {
  for (const char* name : {"heisenberg5", "sphere3", "abelian5"}) {
    const std::string t1 = render_report(report_of(name), ReportFormat::Text);
    const std::string t2 = render_report(report_of(name), ReportFormat::Text);
    CHECK(t1 == t2);
    const std::string j1 = render_report(report_of(name), ReportFormat::Json);
    const std::string j2 = render_report(report_of(name), ReportFormat::Json);
    CHECK(j1 == j2);
  }
}

TEST_CASE("json report round-trips rationals and carries the einstein section") {
  const std::string text = render_report(report_of("sphere3"), ReportFormat::Json);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["einstein"]["alpha"] == "2");
  CHECK(j["curvature"]["scalar"] == "6");
  CHECK(j["structure"]["sasakian"]["pass"] == true);
  CHECK(j["solitons"]["star-conformal-eta"]["lambda_shifted"] == "-1");
  CHECK(j["solitons"]["star-conformal-eta"]["mu"] == "1");

  // Every rational string in the curvature matrices parses back identically.
  const Report rep = report_of("heisenberg5");
  const nlohmann::json jh = nlohmann::json::parse(render_report(rep, ReportFormat::Json));
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      const Rat back = Rat::parse(jh["curvature"]["ricci"][i][k].get<std::string>());
      CHECK(back == rep.pack.ricci.at({i, k}));
      const Rat back_star = Rat::parse(jh["curvature"]["star_ricci"][i][k].get<std::string>());
      CHECK(back_star == rep.pack.star_ricci.at({i, k}));
    }
  const Rat lam = Rat::parse(jh["solitons"]["star-conformal-eta"]["lambda_constant"].get<std::string>());
  CHECK(lam == Rat(26, 5));
}

TEST_CASE("builtin documents re-parse and export losslessly") {
  CHECK(builtin_examples().size() == 4);
  for (const auto& ex : builtin_examples()) {
    const FrameManifold m = parse_manifold(ex.document);
    CHECK(m.name == ex.name);
  }
  const BuiltinExample* h5 = find_builtin("heisenberg5");
  REQUIRE(h5 != nullptr);
  CHECK(h5->document.find("\"i\": 1, \"j\": 2") != std::string::npos);
  CHECK(find_builtin("nope") == nullptr);
  const BuiltinExample* ab = find_builtin("abelian5");
  CHECK(ab->document.find("\"brackets\": []") != std::string::npos);
}

TEST_CASE("the json manifold echo is itself a valid manifold document") {
  for (const char* name : {"heisenberg5", "sphere3", "abelian5"}) {
    const FrameManifold m = builtin_manifold(name);
    const nlohmann::json j =
        nlohmann::json::parse(render_report(build_report(m, PseudoProjectiveParams{}), ReportFormat::Json));
    const FrameManifold back = parse_manifold(j["manifold"].dump());
    CHECK(back.dim == m.dim);
    CHECK(back.c == m.c);
    CHECK(back.g == m.g);
    CHECK(back.phi == m.phi);
    CHECK(back.xi == m.xi);
    CHECK(back.eta == m.eta);
  }
}

TEST_CASE("abelian report shows flat sections and no suite") {
  const Report rep = report_of("abelian5");
  CHECK(rep.identity_suite.empty());
  const std::string text = render_report(rep, ReportFormat::Text);
  CHECK(text.find("(zero curvature)") != std::string::npos);
  CHECK(text.find("(flat: all Γ = 0)") != std::string::npos);
  CHECK(text.find("contact metric: no") != std::string::npos);
}
