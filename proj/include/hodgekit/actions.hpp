#pragma once

#include "hodgekit/cohomology.hpp"
#include "hodgekit/structure.hpp"

#include <map>
#include <string>
#include <vector>

namespace hodgekit {

/// Contraction with a real vector field X, split by type: iota10 lowers p,
/// iota01 lowers q. Both are odd derivations.
struct Contraction {
  std::string name;
  GradedOperator iota10{{-1, 0}, Parity::odd};
  GradedOperator iota01{{0, -1}, Parity::odd};

  Operator total() const { return Operator(iota10) + Operator(iota01); }
  /// Contraction with JX: i iota10 - i iota01.
  Operator rotated() const;
};

/// Contraction on an exterior model from its values on degree-1 generators.
/// A value given for g fixes ~g to the conjugate value; unlisted generators contract to 0.
Contraction make_contraction(const ExteriorModel& model, const std::string& name,
                             const std::map<std::string, GaussianRational>& values);

/// iota10^2 = iota01^2 = {iota10, iota01} = 0; returns the failing identities.
std::vector<std::string> check_contraction(const Contraction& c);

struct LieDerivative {
  /// {d, iota} with every component.
  Operator full;
  /// The bidegree-(0,0) part when no mixed component survives, else `full`.
  Operator result;
  bool mixed = false;
  std::vector<std::string> warnings;
};

/// Cartan formula L_X = {d, iota_X}.
LieDerivative lie_derivative(const Bicomplex& b, const Contraction& c);

/// L_JX = -{d^c, iota_X}.
Operator lie_derivative_j(const Bicomplex& b, const Contraction& c);
/// {d, iota_JX}: the Cartan formula applied to the rotated field.
Operator lie_derivative_j_cartan(const Bicomplex& b, const Contraction& c);

struct HolomorphyReport {
  bool preserves_bidegree = true;
  bool commutes_with_delbar = true;
  bool commutes_with_del = true;
  std::vector<std::string> failures;
  bool ok() const { return preserves_bidegree && commutes_with_delbar && commutes_with_del; }
};

/// L must have shift (0,0) only and commute with delbar (and del when present).
HolomorphyReport holomorphy_check(const Bicomplex& b, const Operator& lie);

struct FlavorAction {
  Flavor flavor = Flavor::dolbeault;
  bool applicable = false;
  std::string reason;
  /// Keyed "p,q" (or "k" for de Rham); matrices in canonical coset bases.
  std::map<std::string, ExactMatrix> induced;
  bool is_trivial = true;
};

struct ActionVerdict {
  std::vector<FlavorAction> flavors;
  const FlavorAction& get(Flavor f) const;
  /// True when every applicable flavor is trivial.
  bool trivial() const;
};

/// Induced action on Dolbeault, Bott-Chern, Aeppli and de Rham cohomology.
/// Bigraded flavors need a holomorphic L; when L fails holomorphy they are
/// marked inapplicable. De Rham uses the full operator (a chain map by Cartan).
/// Throws PreconditionError if L is not a chain map where it must be.
ActionVerdict induced_on_cohomology(const Bicomplex& b, const Operator& lie);

struct HomotopySolution {
  GaussianRational y1, y2;
  /// "rational", "imaginary" or "gaussian": the smallest field holding y1 and y2.
  std::string field;
};

/// Solves a y2 - b y1 = 0, a y1 + b y2 = 1. Throws DegenerateSystem when
/// a = b = 0 or a^2 + b^2 = 0.
HomotopySolution homotopy_coefficients(const GaussianRational& a, const GaussianRational& b);

/// delta = b d + a d^c; asserts delta^2 = 0.
Operator delta_operator(const Bicomplex& bc, const GaussianRational& a, const GaussianRational& b);

}  // namespace hodgekit
