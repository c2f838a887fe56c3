#include "framegeo/manifold.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <utility>

#include "framegeo/connection.hpp"

namespace framegeo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& location, const std::string& message) {
  throw ParseError(location, message);
}

Rat parse_rat(const json& v, const std::string& location) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return Rat::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(location, e.what());
    }
  }
  fail(location, "expected an integer or a rational string \"p/q\"");
}

void check_fields(const json& obj, const std::set<std::string>& allowed, const std::string& location) {
  for (const auto& item : obj.items())
    if (!allowed.contains(item.key())) fail(location, "unknown field '" + item.key() + "'");
}

Tensor parse_matrix(const json& v, int dim, std::vector<Slot> valence, const std::string& location) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    fail(location, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  Tensor t(dim, std::move(valence));
  for (int i = 0; i < dim; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    const std::string row_loc = location + "[" + std::to_string(i + 1) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(row_loc, "expected a row of length " + std::to_string(dim));
    for (int j = 0; j < dim; ++j)
      t.at({i, j}) = parse_rat(row[static_cast<std::size_t>(j)], row_loc + "[" + std::to_string(j + 1) + "]");
  }
  return t;
}

Tensor parse_vector(const json& v, int dim, Slot slot, const std::string& location) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    fail(location, "expected an array of length " + std::to_string(dim));
  Tensor t(dim, {slot});
  for (int i = 0; i < dim; ++i)
    t.at({i}) = parse_rat(v[static_cast<std::size_t>(i)], location + "[" + std::to_string(i + 1) + "]");
  return t;
}

// Leading principal minors must all be positive (exact Sylvester test).
void check_positive_definite(const Tensor& g, const std::string& location) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(g.at({i, j}) == g.at({j, i})))
        fail(location, "metric not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(k), std::vector<Rat>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.at({i, j});
    Rat det(1);
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int pivot = -1;
      for (int row = col; row < k; ++row)
        if (!a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
          pivot = row;
          break;
        }
      if (pivot < 0) {
        singular = true;
        break;
      }
      if (pivot != col) {
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        det = -det;
      }
      det *= a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int row = col + 1; row < k; ++row) {
        const Rat f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                      a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int j = col; j < k; ++j)
          a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
              f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
    if (singular || det.sign() <= 0)
      fail(location, "metric not positive definite (leading " + std::to_string(k) + "x" + std::to_string(k) +
                         " minor is not positive)");
  }
}

void check_jacobi(const FrameManifold& m) {
  const int n = m.dim;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        for (int k = 0; k < n; ++k) {
          Rat sum(0);
          const auto term = [&](int a, int b, int c) {
            Rat s(0);
            for (int mm = 0; mm < n; ++mm) s += m.c.at({mm, a, b}) * m.c.at({k, mm, c});
            return s;
          };
          sum += term(i, j, l);
          sum += term(j, l, i);
          sum += term(l, i, j);
          if (!sum.is_zero())
            fail("brackets", "Jacobi identity violated for (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                 ", e" + std::to_string(l + 1) + ") in component e" + std::to_string(k + 1));
        }
}

std::string vec_str(std::span<const Rat> v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<Rat> FrameManifold::bracket(int i, int j) const {
  std::vector<Rat> out(static_cast<std::size_t>(dim), Rat(0));
  for (int k = 0; k < dim; ++k) out[static_cast<std::size_t>(k)] = c.at({k, i, j});
  return out;
}

Rat FrameManifold::inner(std::span<const Rat> u, std::span<const Rat> v) const {
  Rat sum(0);
  for (int i = 0; i < dim; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      const Rat& gij = g.at({i, j});
      if (gij.is_zero()) continue;
      sum += u[static_cast<std::size_t>(i)] * gij * v[static_cast<std::size_t>(j)];
    }
  }
  return sum;
}

std::vector<Rat> FrameManifold::apply_phi(std::span<const Rat> v) const {
  std::vector<Rat> out(static_cast<std::size_t>(dim), Rat(0));
  for (int r = 0; r < dim; ++r)
    for (int s = 0; s < dim; ++s) out[static_cast<std::size_t>(r)] += phi.at({r, s}) * v[static_cast<std::size_t>(s)];
  return out;
}

Rat FrameManifold::eta_of(std::span<const Rat> v) const {
  Rat sum(0);
  for (int i = 0; i < dim; ++i) sum += eta.at({i}) * v[static_cast<std::size_t>(i)];
  return sum;
}

std::vector<Rat> FrameManifold::basis(int i) const {
  std::vector<Rat> out(static_cast<std::size_t>(dim), Rat(0));
  out[static_cast<std::size_t>(i)] = Rat(1);
  return out;
}

FrameManifold parse_manifold(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    fail("document", e.what());
  }
  if (!doc.is_object()) fail("document", "top level must be an object");
  check_fields(doc, {"name", "dimension", "metric", "brackets", "phi", "xi", "eta"}, "document");
  for (const char* required : {"name", "dimension", "brackets", "phi", "xi"})
    if (!doc.contains(required)) fail("document", std::string("missing field '") + required + "'");

  FrameManifold m;
  if (!doc["name"].is_string()) fail("name", "expected a string");
  m.name = doc["name"].get<std::string>();

  if (!doc["dimension"].is_number_integer()) fail("dimension", "expected an integer");
  const auto dim64 = doc["dimension"].get<std::int64_t>();
  if (dim64 < 1 || dim64 > 64) fail("dimension", "dimension out of supported range");
  m.dim = static_cast<int>(dim64);
  if (m.dim % 2 == 0) fail("dimension", "dimension must be odd (= 2n+1)");

  m.c = Tensor(m.dim, {Slot::Upper, Slot::Lower, Slot::Lower});
  if (!doc["brackets"].is_array()) fail("brackets", "expected an array of bracket entries");
  std::set<std::pair<int, int>> seen;
  int entry_no = 0;
  for (const json& entry : doc["brackets"]) {
    const std::string loc = "brackets[" + std::to_string(entry_no + 1) + "]";
    ++entry_no;
    if (!entry.is_object()) fail(loc, "expected an object {i, j, coeffs}");
    check_fields(entry, {"i", "j", "coeffs"}, loc);
    for (const char* required : {"i", "j", "coeffs"})
      if (!entry.contains(required)) fail(loc, std::string("missing field '") + required + "'");
    if (!entry["i"].is_number_integer() || !entry["j"].is_number_integer()) fail(loc, "i and j must be integers");
    const int i = entry["i"].get<int>();
    const int j = entry["j"].get<int>();
    if (i < 1 || i > m.dim || j < 1 || j > m.dim) fail(loc, "index out of range 1.." + std::to_string(m.dim));
    if (i >= j)
      fail(loc, "bracket entries must have i < j (the (j,i) bracket is implied by antisymmetry); got (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    if (!seen.insert({i, j}).second)
      fail(loc, "duplicate bracket entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (!entry["coeffs"].is_object()) fail(loc + ".coeffs", "expected an object {\"k\": rational, ...}");
    for (const auto& item : entry["coeffs"].items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(item.key(), &used);
        if (used != item.key().size()) throw std::invalid_argument("");
      } catch (...) {
        fail(loc + ".coeffs", "key '" + item.key() + "' is not an index");
      }
      if (k < 1 || k > m.dim) fail(loc + ".coeffs", "index " + std::to_string(k) + " out of range");
      const Rat v = parse_rat(item.value(), loc + ".coeffs[\"" + item.key() + "\"]");
      m.c.at({k - 1, i - 1, j - 1}) = v;
      m.c.at({k - 1, j - 1, i - 1}) = -v;
    }
  }

  if (doc.contains("metric")) {
    m.g = parse_matrix(doc["metric"], m.dim, {Slot::Lower, Slot::Lower}, "metric");
  } else {
    m.g = Tensor::identity_metric(m.dim);
  }
  check_positive_definite(m.g, "metric");

  m.phi = parse_matrix(doc["phi"], m.dim, {Slot::Upper, Slot::Lower}, "phi");
  m.xi = parse_vector(doc["xi"], m.dim, Slot::Upper, "xi");

  Tensor eta_default(m.dim, {Slot::Lower});
  for (int i = 0; i < m.dim; ++i) {
    Rat sum(0);
    for (int j = 0; j < m.dim; ++j) sum += m.g.at({i, j}) * m.xi.at({j});
    eta_default.at({i}) = sum;
  }
  if (doc.contains("eta")) {
    m.eta = parse_vector(doc["eta"], m.dim, Slot::Lower, "eta");
    if (!(m.eta == eta_default))
      fail("eta", "explicit eta disagrees with g(., xi); remove it or fix the metric/xi");
  } else {
    m.eta = eta_default;
  }

  check_jacobi(m);
  return m;
}

CheckResult validate_almost_contact(const FrameManifold& m) {
  const int n = m.dim;
  // phi^2 = -I + xi (x) eta
  for (int j = 0; j < n; ++j) {
    const auto phi2 = m.apply_phi(m.apply_phi(m.basis(j)));
    for (int r = 0; r < n; ++r) {
      Rat expect = m.xi.at({r}) * m.eta.at({j});
      if (r == j) expect -= Rat(1);
      if (!(phi2[static_cast<std::size_t>(r)] == expect))
        return {false, "φ²(e" + std::to_string(j + 1) + ") = " + vec_str(phi2) + " ≠ -e" + std::to_string(j + 1) +
                           " + η(e" + std::to_string(j + 1) + ")ξ"};
    }
  }
  // eta(xi) = 1
  {
    std::vector<Rat> xi_v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});
    const Rat exi = m.eta_of(xi_v);
    if (!(exi == Rat(1))) return {false, "η(ξ) = " + exi.str() + " ≠ 1"};
    // phi xi = 0
    const auto pxi = m.apply_phi(xi_v);
    for (int r = 0; r < n; ++r)
      if (!pxi[static_cast<std::size_t>(r)].is_zero()) return {false, "φξ = " + vec_str(pxi) + " ≠ 0"};
  }
  // eta o phi = 0
  for (int j = 0; j < n; ++j) {
    const Rat v = m.eta_of(m.apply_phi(m.basis(j)));
    if (!v.is_zero()) return {false, "η(φe" + std::to_string(j + 1) + ") = " + v.str() + " ≠ 0"};
  }
  // g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y); g(X, phi Y) = -g(phi X, Y); g(X, xi) = eta(X)
  std::vector<Rat> xi_v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});
  for (int i = 0; i < n; ++i) {
    const auto ei = m.basis(i);
    const Rat gxi = m.inner(ei, xi_v);
    if (!(gxi == m.eta.at({i})))
      return {false, "g(e" + std::to_string(i + 1) + ", ξ) = " + gxi.str() + " ≠ η(e" + std::to_string(i + 1) + ")"};
    const auto pei = m.apply_phi(ei);
    for (int j = 0; j < n; ++j) {
      const auto ej = m.basis(j);
      const auto pej = m.apply_phi(ej);
      const Rat lhs = m.inner(pei, pej);
      const Rat rhs = m.inner(ei, ej) - m.eta.at({i}) * m.eta.at({j});
      if (!(lhs == rhs))
        return {false, "g(φe" + std::to_string(i + 1) + ", φe" + std::to_string(j + 1) + ") = " + lhs.str() +
                           " ≠ g - η⊗η value " + rhs.str()};
      const Rat anti = m.inner(ei, pej) + m.inner(pei, ej);
      if (!anti.is_zero())
        return {false, "g(e" + std::to_string(i + 1) + ", φe" + std::to_string(j + 1) + ") ≠ -g(φe" +
                           std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")"};
    }
  }
  return {true, ""};
}

Tensor exterior_derivative_eta(const FrameManifold& m) {
  Tensor d(m.dim, {Slot::Lower, Slot::Lower});
  const Rat half(1, 2);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) {
      Rat sum(0);
      for (int k = 0; k < m.dim; ++k) sum += m.c.at({k, i, j}) * m.eta.at({k});
      d.at({i, j}) = -half * sum;
    }
  return d;
}

Tensor nijenhuis(const FrameManifold& m) {
  const int n = m.dim;
  Tensor t(n, {Slot::Upper, Slot::Lower, Slot::Lower});
  // Bilinear bracket of constant-coefficient vectors.
  const auto bracket_vec = [&](std::span<const Rat> u, std::span<const Rat> v) {
    std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
    for (int a = 0; a < n; ++a) {
      if (u[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (v[static_cast<std::size_t>(b)].is_zero()) continue;
        const Rat f = u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
        for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += f * m.c.at({k, a, b});
      }
    }
    return out;
  };
  for (int i = 0; i < n; ++i) {
    const auto ei = m.basis(i);
    const auto pei = m.apply_phi(ei);
    for (int j = 0; j < n; ++j) {
      const auto ej = m.basis(j);
      const auto pej = m.apply_phi(ej);
      const auto term1 = m.apply_phi(m.apply_phi(bracket_vec(ei, ej)));  // phi^2 [X,Y]
      const auto term2 = bracket_vec(pei, pej);                          // [phi X, phi Y]
      const auto term3 = m.apply_phi(bracket_vec(pei, ej));              // phi [phi X, Y]
      const auto term4 = m.apply_phi(bracket_vec(ei, pej));              // phi [X, phi Y]
      for (int k = 0; k < n; ++k)
        t.at({k, i, j}) = term1[static_cast<std::size_t>(k)] + term2[static_cast<std::size_t>(k)] -
                          term3[static_cast<std::size_t>(k)] - term4[static_cast<std::size_t>(k)];
    }
  }
  return t;
}

StructureClass classify_contact(const FrameManifold& m, const Connection& conn) {
  StructureClass sc;
  sc.almost_contact_metric = validate_almost_contact(m);
  if (!sc.almost_contact_metric.pass) {
    const std::string w = "not an almost contact metric structure: " + sc.almost_contact_metric.witness;
    sc.contact_metric = {false, w};
    sc.k_contact = {false, w};
    sc.normal = {false, w};
    sc.sasakian = {false, w};
    return sc;
  }

  const Tensor deta = exterior_derivative_eta(m);
  sc.contact_metric = {true, ""};
  for (int i = 0; i < m.dim && sc.contact_metric.pass; ++i)
    for (int j = 0; j < m.dim; ++j) {
      const Rat rhs = m.inner(m.basis(i), m.apply_phi(m.basis(j)));
      if (!(deta.at({i, j}) == rhs)) {
        sc.contact_metric = {false, "dη(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                        ") = " + deta.at({i, j}).str() + " ≠ g(e" + std::to_string(i + 1) + ", φe" +
                                        std::to_string(j + 1) + ") = " + rhs.str()};
        break;
      }
    }

  // K-contact: xi is Killing.
  sc.k_contact = {true, ""};
  {
    std::vector<Rat> xi_v(static_cast<std::size_t>(m.dim));
    for (int i = 0; i < m.dim; ++i) xi_v[static_cast<std::size_t>(i)] = m.xi.at({i});
    for (int i = 0; i < m.dim && sc.k_contact.pass; ++i) {
      const auto di = conn.derive(i, xi_v);
      for (int j = 0; j < m.dim; ++j) {
        const auto dj = conn.derive(j, xi_v);
        const Rat lie = m.inner(di, m.basis(j)) + m.inner(m.basis(i), dj);
        if (!lie.is_zero()) {
          sc.k_contact = {false, "(£_ξ g)(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                     ") = " + lie.str() + " ≠ 0"};
          break;
        }
      }
    }
  }

  const Tensor nij = nijenhuis(m);
  sc.normal = {true, ""};
  for (int i = 0; i < m.dim && sc.normal.pass; ++i)
    for (int j = 0; j < m.dim; ++j) {
      bool ok = true;
      for (int k = 0; k < m.dim; ++k) {
        const Rat v = Rat(2) * deta.at({i, j}) * m.xi.at({k}) + nij.at({k, i, j});
        if (!v.is_zero()) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        sc.normal = {false, "2dη(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")ξ + [φ,φ](e" +
                                std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") ≠ 0"};
        break;
      }
    }

  if (sc.contact_metric.pass && sc.normal.pass) {
    sc.sasakian = {true, ""};
  } else {
    sc.sasakian = {false, !sc.contact_metric.pass ? sc.contact_metric.witness : sc.normal.witness};
  }
  return sc;
}

}  // namespace framegeo
