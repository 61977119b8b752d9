#pragma once

#include "hodgekit/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hodgekit {

/// Linear subspace of an ambient coordinate space, stored as the rows of its
/// reduced row echelon basis. Two Subspace values compare equal iff they span
/// the same subspace.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus the combination of basis rows that clears every pivot coordinate.
  /// Zero exactly when v lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;

  /// Coordinates of v in basis(); empty when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const ExactMatrix& m);
Subspace image_basis(const ExactMatrix& m);
/// Image of a subspace of the source under m.
Subspace image_of(const ExactMatrix& m, const Subspace& s);
/// Vectors of the source mapped by m into target.
Subspace preimage_of(const ExactMatrix& m, const Subspace& target);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Subquotient num/den with canonical coset representatives: the basis of the
/// span of num's rows reduced modulo den.
class Quotient {
 public:
  Quotient() = default;
  /// Throws PreconditionError unless den is contained in num.
  Quotient(Subspace num, Subspace den);

  const Subspace& numerator() const { return num_; }
  const Subspace& denominator() const { return den_; }
  std::size_t dim() const { return reps_.dim(); }
  const std::vector<Vector>& representatives() const { return reps_.basis(); }

  /// Coset coordinates of v; throws PreconditionError if v is not in num.
  Vector coordinates(const Vector& v) const;
  /// Representative of the class with the given coset coordinates.
  Vector lift(const Vector& coords) const;

 private:
  Subspace num_, den_, reps_;
};

/// Matrix of the map num_src/den_src -> num_dst/den_dst induced by t in the
/// coset bases of the two Quotients. Throws PreconditionError naming the
/// offending basis vector when t does not map numerator into numerator and
/// denominator into denominator.
ExactMatrix induced_quotient_map(const ExactMatrix& t, const Quotient& src, const Quotient& dst);
ExactMatrix induced_quotient_map(const ExactMatrix& t, const Subspace& num_src, const Subspace& den_src,
                                 const Subspace& num_dst, const Subspace& den_dst);

}  // namespace hodgekit
