#pragma once

#include "hodgekit/matrix.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodgekit {

struct Shift {
  int dp = 0;
  int dq = 0;
  friend auto operator<=>(const Shift&, const Shift&) = default;
  friend Shift operator+(Shift a, Shift b) { return {a.dp + b.dp, a.dq + b.dq}; }
  int total() const { return dp + dq; }
};

struct Bidegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree b, Shift s) { return {b.p + s.dp, b.q + s.dq}; }
  int total() const { return p + q; }
  std::string str() const { return std::to_string(p) + "," + std::to_string(q); }
};

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

/// Finite bigraded vector space: one labelled basis per bidegree.
class BigradedSpace {
 public:
  BigradedSpace() = default;
  explicit BigradedSpace(int n) : n_(n) {}

  int n() const { return n_; }

  /// Appends a slot; throws InvalidModel on out-of-range bidegree, a second
  /// declaration of the slot, or a label already used anywhere in the space.
  void add_slot(Bidegree b, std::vector<std::string> labels);

  std::size_t dim(Bidegree b) const;
  std::size_t total_dim() const;
  /// Dimension of the total-degree-k piece.
  std::size_t degree_dim(int k) const;
  const std::vector<std::string>& labels(Bidegree b) const;
  /// Slots with nonzero dimension, in ascending (p, q) order.
  std::vector<Bidegree> bidegrees() const;
  /// Bidegrees p + q = k with nonzero slot, ascending in p.
  std::vector<Bidegree> bidegrees_of_degree(int k) const;
  /// Location of a basis label.
  std::optional<std::pair<Bidegree, std::size_t>> find(const std::string& label) const;

  /// Unit vector of a label within its slot; throws InvalidModel when unknown.
  Vector unit(const std::string& label) const;

  friend bool operator==(const BigradedSpace&, const BigradedSpace&) = default;

 private:
  int n_ = 0;
  std::map<Bidegree, std::vector<std::string>> slots_;
};

/// Bidegree-homogeneous linear operator: blocks indexed by source slot,
/// each mapping slot b to slot b + shift. Missing blocks are zero.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(Shift shift, Parity parity) : shift_(shift), parity_(parity) {}

  Shift shift() const { return shift_; }
  Parity parity() const { return parity_; }
  const std::map<Bidegree, ExactMatrix>& blocks() const { return blocks_; }

  /// Stores the block out of `source`; zero blocks are dropped.
  void set_block(Bidegree source, ExactMatrix m);
  /// Block out of `source`, or nothing when it is zero.
  const ExactMatrix* block(Bidegree source) const;
  /// Block out of `source`, materialized as a zero matrix of the right shape if absent.
  ExactMatrix block_or_zero(const BigradedSpace& space, Bidegree source) const;

  bool is_zero() const { return blocks_.empty(); }
  GradedOperator scaled(const GaussianRational& s) const;
  GradedOperator conj() const;

  /// Throws DimensionMismatch if a block shape disagrees with the slot dimensions.
  void check_shapes(const BigradedSpace& space, const std::string& name) const;

  friend bool operator==(const GradedOperator&, const GradedOperator&) = default;

 private:
  Shift shift_{};
  Parity parity_ = Parity::even;
  std::map<Bidegree, ExactMatrix> blocks_;
};

/// Finite sum of homogeneous operators with distinct shifts.
class Operator {
 public:
  Operator() = default;
  Operator(const GradedOperator& g);  // NOLINT(google-explicit-constructor)

  const std::map<Shift, GradedOperator>& parts() const { return parts_; }
  /// Homogeneous component of the given shift (zero if absent).
  GradedOperator component(Shift s) const;
  bool is_zero() const { return parts_.empty(); }
  bool is_homogeneous() const { return parts_.size() <= 1; }
  std::optional<Parity> parity() const;

  Operator& operator+=(const Operator& o);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a += b.scaled(-1); }
  Operator scaled(const GaussianRational& s) const;

  friend bool operator==(const Operator&, const Operator&) = default;

 private:
  std::map<Shift, GradedOperator> parts_;
};

GradedOperator add(const GradedOperator& a, const GradedOperator& b);
/// a after b.
GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b);
Operator op_compose(const Operator& a, const Operator& b);
/// ab + ba.
Operator op_anticommutator(const Operator& a, const Operator& b);
/// ab - ba.
Operator op_commutator(const Operator& a, const Operator& b);
/// Graded commutator: anticommutator when both are odd, commutator otherwise.
Operator op_supercommutator(const Operator& a, const Operator& b);

/// Scalar operator: lambda(p, q) * identity on each nonzero slot.
template <class F>
GradedOperator diagonal_operator(const BigradedSpace& space, F lambda) {
  GradedOperator g({0, 0}, Parity::even);
  for (auto b : space.bidegrees()) g.set_block(b, ExactMatrix::identity(space.dim(b)) * lambda(b));
  return g;
}

GradedOperator identity_operator(const BigradedSpace& space);

/// Value of the operator on a vector sitting in a single slot, per target slot.
std::map<Bidegree, Vector> apply(const Operator& op, Bidegree source, const Vector& v);

}  // namespace hodgekit
