#pragma once

#include "hodgekit/bigraded.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgekit {

/// Bigraded space with del (shift (1,0)) and delbar (shift (0,1)).
/// Dolbeault-only complexes set has_del = false and carry delbar alone.
struct Bicomplex {
  BigradedSpace space;
  GradedOperator del{{1, 0}, Parity::odd};
  GradedOperator delbar{{0, 1}, Parity::odd};
  bool has_del = true;

  int n() const { return space.n(); }
  /// del + delbar as one operator; throws MissingDifferential when has_del is false.
  Operator d() const;
  void require_del(const std::string& op) const;

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

struct ValidationReport {
  bool ok = true;
  /// One entry per failing (identity, source slot), in deterministic order.
  struct Failure {
    std::string identity;
    Bidegree slot;
    ExactMatrix value;
  };
  std::vector<Failure> failures;
  std::string summary() const;
};

/// Checks block shapes, del^2 = 0, delbar^2 = 0 and del delbar + delbar del = 0.
ValidationReport validate(const Bicomplex& b);

/// Single-graded complex of total degree: C^k = sum over p+q=k of the slots,
/// ordered by ascending p, with D_k = del + delbar restricted to C^k.
struct TotalComplex {
  int top_degree = 0;
  std::vector<std::size_t> dims;
  /// differential[k] : C^k -> C^{k+1}, shape dims[k+1] x dims[k].
  std::vector<ExactMatrix> differential;
  /// Offset of each slot inside its total-degree space.
  std::map<Bidegree, std::size_t> offsets;

  std::size_t dim(int k) const { return k < 0 || k > top_degree ? 0 : dims[static_cast<std::size_t>(k)]; }
  /// Zero-shaped matrices outside the degree range.
  ExactMatrix d(int k) const;
  /// Embedding of slot b into C^{p+q} (dims x slot dim).
  ExactMatrix embedding(const BigradedSpace& space, Bidegree b) const;
};

TotalComplex total_differential(const Bicomplex& b);

/// d^c = i(delbar - del): the (1,0) component is -i del, the (0,1) component i delbar.
Operator dc_operator(const Bicomplex& b);

/// Weil operator: i^(p-q) on slot (p,q).
GradedOperator weil_j(const BigradedSpace& space);
GradedOperator weil_j_inverse(const BigradedSpace& space);

/// Outcome of comparing J d J^{-1} with d^c on a concrete complex.
struct ConventionReport {
  bool conjugate_is_i_del_minus_i_delbar = false;
  bool conjugate_equals_dc = false;
  bool conjugate_equals_minus_dc = false;
  /// (-1)^k J d J applied on degree k compared against d^c.
  bool signed_variant_equals_dc = false;
  std::string note() const;
};

ConventionReport j_convention(const Bicomplex& b);

}  // namespace hodgekit
