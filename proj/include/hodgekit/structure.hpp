#pragma once

#include "hodgekit/bicomplex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hodgekit {

/// coeff * f1 ^ f2 ^ ... ; names may carry a leading '~' for conjugates.
struct Term {
  GaussianRational coeff;
  std::vector<std::string> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

using Expression = std::vector<Term>;

struct Generator {
  std::string name;
  Bidegree type;  // (1,0) or (0,1)
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Structure equations of a left-invariant complex structure: degree-1
/// generators and their differentials. Conjugate generators are implicit.
struct StructureSpec {
  std::string name;
  int n = 0;
  std::vector<Generator> generators;
  /// Keyed by declared generator name; absent means d = 0.
  std::map<std::string, Expression> differentials;
  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

std::string conjugate_name(const std::string& name);

/// Exterior algebra on the generators and their conjugates, with the basis
/// monomials and the split differential.
struct ExteriorModel {
  Bicomplex complex;
  /// Declared generators first (in declaration order), then their conjugates.
  std::vector<Generator> generators;
  /// Basis monomials of each slot as generator bitmasks, in basis order.
  std::map<Bidegree, std::vector<std::uint32_t>> monomials;

  int generator_index(const std::string& name) const;
  /// Slot and basis index of a monomial.
  std::pair<Bidegree, std::size_t> locate(std::uint32_t mask) const;
  /// Label "a^b^c" (or "1") of a monomial.
  std::string label(std::uint32_t mask) const;
};

/// Builds the exterior model: slots from the generator types, d extended as an
/// odd derivation and split into del/delbar by output bidegree.
/// Throws InvalidModel for unknown names, right-hand sides not of degree 2,
/// (0,2)/(2,0) components that break integrability, or d^2 != 0 (naming the
/// generator and the surviving monomial).
ExteriorModel build_exterior_model(const StructureSpec& spec);

Bicomplex from_structure_equations(const StructureSpec& spec);

/// Conjugation sigma: slot (p,q) -> (q,p), sigma(v) = P * conj(v) with P a
/// signed permutation. conjugate(op) = sigma op sigma^{-1}.
class Conjugation {
 public:
  explicit Conjugation(const ExteriorModel& model);
  GradedOperator conjugate(const GradedOperator& op) const;
  Operator conjugate(const Operator& op) const;
  /// The signed permutation matrix from slot b to slot (b.q, b.p).
  const ExactMatrix& permutation(Bidegree b) const;

 private:
  const BigradedSpace* space_;
  std::map<Bidegree, ExactMatrix> perm_;
};

}  // namespace hodgekit
