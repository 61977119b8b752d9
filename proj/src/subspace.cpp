#include "hodgekit/subspace.hpp"

#include "hodgekit/errors.hpp"

namespace hodgekit {

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty() || ambient_dim == 0) return s;
  ExactMatrix m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  RowEchelon e = rref(std::move(m));
  s.pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    Vector v(ambient_dim);
    v[k] = 1;
    rows.push_back(std::move(v));
  }
  return span(ambient_dim, rows);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  Vector out = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    GaussianRational f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!basis_[r][c].is_zero()) out[c] -= f * basis_[r][c];
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace containment across ambient dimensions");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Subspace kernel_basis(const ExactMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace image_basis(const ExactMatrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

Subspace image_of(const ExactMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("image_of: subspace not in the source");
  std::vector<Vector> out;
  for (const auto& v : s.basis()) out.push_back(m * v);
  return Subspace::span(m.rows(), out);
}

Subspace preimage_of(const ExactMatrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) throw DimensionMismatch("preimage_of: subspace not in the target");
  // x with m x in target  <=>  the reduction of m x modulo target vanishes. Reduction
  // is linear, so apply it to the columns of m and take the kernel.
  ExactMatrix reduced(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector col = target.reduce(m.column(c));
    for (std::size_t r = 0; r < m.rows(); ++r) reduced(r, c) = col[r];
  }
  return kernel_basis(reduced);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace(n);
  // Pairs (a, b) with sum a_k u_k = sum b_k v_k; the common vectors are sum a_k u_k.
  ExactMatrix m(n, u.dim() + v.dim());
  for (std::size_t k = 0; k < u.dim(); ++k)
    for (std::size_t r = 0; r < n; ++r) m(r, k) = u.basis()[k][r];
  for (std::size_t k = 0; k < v.dim(); ++k)
    for (std::size_t r = 0; r < n; ++r) m(r, u.dim() + k) = -v.basis()[k][r];
  Subspace pairs = kernel_basis(m);
  std::vector<Vector> common;
  for (const auto& ab : pairs.basis()) {
    Vector x(n);
    for (std::size_t k = 0; k < u.dim(); ++k)
      if (!ab[k].is_zero())
        for (std::size_t r = 0; r < n; ++r) x[r] += ab[k] * u.basis()[k][r];
    common.push_back(std::move(x));
  }
  return Subspace::span(n, common);
}

Quotient::Quotient(Subspace num, Subspace den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.ambient_dim() != den_.ambient_dim()) throw DimensionMismatch("quotient: ambient dimensions differ");
  for (const auto& v : den_.basis())
    if (!num_.contains(v))
      throw PreconditionError("quotient: denominator vector " + to_string(v) + " is not in the numerator");
  std::vector<Vector> reduced;
  for (const auto& v : num_.basis()) reduced.push_back(den_.reduce(v));
  reps_ = Subspace::span(num_.ambient_dim(), reduced);
}

Vector Quotient::coordinates(const Vector& v) const {
  if (!num_.contains(v))
    throw PreconditionError("vector " + to_string(v) + " is not in the numerator subspace");
  auto c = reps_.coordinates(den_.reduce(v));
  if (!c) throw InternalError("coset reduction left the representative span");
  return *c;
}

Vector Quotient::lift(const Vector& coords) const {
  if (coords.size() != reps_.dim()) throw DimensionMismatch("lift: coordinate count differs from quotient dimension");
  Vector v(num_.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero())
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += coords[k] * reps_.basis()[k][c];
  return v;
}

ExactMatrix induced_quotient_map(const ExactMatrix& t, const Quotient& src, const Quotient& dst) {
  if (t.cols() != src.numerator().ambient_dim() || t.rows() != dst.numerator().ambient_dim())
    throw DimensionMismatch("induced_quotient_map: map shape " + std::to_string(t.rows()) + "x" +
                            std::to_string(t.cols()) + " does not match the subquotients");
  for (const auto& v : src.denominator().basis()) {
    if (!dst.denominator().contains(t * v))
      throw PreconditionError("induced map not well defined: denominator vector " + to_string(v) +
                              " maps to " + to_string(t * v) + ", outside the target denominator");
  }
  for (const auto& v : src.numerator().basis()) {
    if (!dst.numerator().contains(t * v))
      throw PreconditionError("induced map not well defined: numerator vector " + to_string(v) + " maps to " +
                              to_string(t * v) + ", outside the target numerator");
  }
  ExactMatrix out(dst.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    Vector image = dst.coordinates(t * src.representatives()[c]);
    for (std::size_t r = 0; r < dst.dim(); ++r) out(r, c) = image[r];
  }
  return out;
}

ExactMatrix induced_quotient_map(const ExactMatrix& t, const Subspace& num_src, const Subspace& den_src,
                                 const Subspace& num_dst, const Subspace& den_dst) {
  return induced_quotient_map(t, Quotient(num_src, den_src), Quotient(num_dst, den_dst));
}

}  // namespace hodgekit
