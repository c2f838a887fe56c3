#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "framegeo/tensor.hpp"

namespace framegeo {

struct Connection;

/// Parse/validation failure, carrying the offending document location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// A homogeneous frame manifold: a metric Lie algebra with constant structure
/// constants plus almost-contact data (phi, xi, eta), all components constant
/// on the frame e_1..e_dim.
struct FrameManifold {
  std::string name;
  int dim = 0;  // odd, = 2n+1

  Tensor c;    // (1,2): c.at({k,i,j}) with [e_i, e_j] = sum_k c^k_ij e_k
  Tensor g;    // (0,2) metric
  Tensor phi;  // (1,1): phi.at({r,s}) = component r of phi(e_s)
  Tensor xi;   // vector (one upper slot)
  Tensor eta;  // covector (one lower slot)

  int paper_n() const { return (dim - 1) / 2; }

  /// Components of [e_i, e_j] (0-based arguments).
  std::vector<Rat> bracket(int i, int j) const;
  /// g(u, v) for component vectors u, v.
  Rat inner(std::span<const Rat> u, std::span<const Rat> v) const;
  /// phi applied to a component vector.
  std::vector<Rat> apply_phi(std::span<const Rat> v) const;
  /// eta(v) for a component vector.
  Rat eta_of(std::span<const Rat> v) const;
  /// Basis vector e_i as a component vector.
  std::vector<Rat> basis(int i) const;
};

/// Parses and validates a manifold document (JSON; see README for the schema).
/// Throws ParseError with a field location on any malformed or invalid input:
/// malformed rationals, even dimension, bracket antisymmetry violations,
/// Jacobi violations, non-symmetric or non-positive-definite metrics, or an
/// explicit eta that disagrees with g(., xi).
FrameManifold parse_manifold(std::string_view document);

struct CheckResult {
  bool pass = false;
  std::string witness;  // first violated identity, empty when pass
};

/// Classification flags. Implications are enforced by construction:
/// sasakian => contact_metric => almost_contact_metric, and
/// k_contact => almost_contact_metric.
struct StructureClass {
  CheckResult almost_contact_metric;
  CheckResult contact_metric;
  CheckResult k_contact;
  CheckResult normal;
  CheckResult sasakian;
};

/// Checks the almost contact metric identities: phi^2 = -I + xi (x) eta,
/// eta(xi) = 1, eta o phi = 0, phi xi = 0, g(phi X, phi Y) = g(X,Y) -
/// eta(X)eta(Y), g(X, phi Y) = -g(phi X, Y), g(X, xi) = eta(X).
CheckResult validate_almost_contact(const FrameManifold& m);

/// d(eta)(e_i, e_j) = -1/2 sum_k c^k_ij eta_k, as an antisymmetric (0,2) tensor.
Tensor exterior_derivative_eta(const FrameManifold& m);

/// Nijenhuis tensor [phi,phi](e_i, e_j) as a (1,2) tensor (value slot first).
Tensor nijenhuis(const FrameManifold& m);

/// Full structure classification; conn must be levi_civita(m).
StructureClass classify_contact(const FrameManifold& m, const Connection& conn);

}  // namespace framegeo
