#include "hodgekit/bigraded.hpp"

#include "hodgekit/errors.hpp"

#include <set>

namespace hodgekit {

void BigradedSpace::add_slot(Bidegree b, std::vector<std::string> labels) {
  if (b.p < 0 || b.q < 0 || b.p > n_ || b.q > n_)
    throw InvalidModel("slot (" + b.str() + ") outside the grid of complex dimension " + std::to_string(n_));
  if (slots_.count(b)) throw InvalidModel("slot (" + b.str() + ") declared twice");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second || find(l))
      throw InvalidModel("basis label '" + l + "' is not unique");
  }
  if (!labels.empty()) slots_.emplace(b, std::move(labels));
}

std::size_t BigradedSpace::dim(Bidegree b) const {
  auto it = slots_.find(b);
  return it == slots_.end() ? 0 : it->second.size();
}

std::size_t BigradedSpace::total_dim() const {
  std::size_t s = 0;
  for (const auto& [b, l] : slots_) s += l.size();
  return s;
}

std::size_t BigradedSpace::degree_dim(int k) const {
  std::size_t s = 0;
  for (const auto& [b, l] : slots_)
    if (b.total() == k) s += l.size();
  return s;
}

const std::vector<std::string>& BigradedSpace::labels(Bidegree b) const {
  static const std::vector<std::string> kEmpty;
  auto it = slots_.find(b);
  return it == slots_.end() ? kEmpty : it->second;
}

std::vector<Bidegree> BigradedSpace::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [b, l] : slots_) out.push_back(b);
  return out;
}

std::vector<Bidegree> BigradedSpace::bidegrees_of_degree(int k) const {
  std::vector<Bidegree> out;
  for (const auto& [b, l] : slots_)
    if (b.total() == k) out.push_back(b);
  return out;
}

std::optional<std::pair<Bidegree, std::size_t>> BigradedSpace::find(const std::string& label) const {
  for (const auto& [b, l] : slots_)
    for (std::size_t k = 0; k < l.size(); ++k)
      if (l[k] == label) return std::make_pair(b, k);
  return std::nullopt;
}

Vector BigradedSpace::unit(const std::string& label) const {
  auto loc = find(label);
  if (!loc) throw InvalidModel("unknown basis label '" + label + "'");
  Vector v(dim(loc->first));
  v[loc->second] = 1;
  return v;
}

void GradedOperator::set_block(Bidegree source, ExactMatrix m) {
  if (m.is_zero()) {
    blocks_.erase(source);
    return;
  }
  blocks_[source] = std::move(m);
}

const ExactMatrix* GradedOperator::block(Bidegree source) const {
  auto it = blocks_.find(source);
  return it == blocks_.end() ? nullptr : &it->second;
}

ExactMatrix GradedOperator::block_or_zero(const BigradedSpace& space, Bidegree source) const {
  if (const auto* m = block(source)) return *m;
  return ExactMatrix(space.dim(source + shift_), space.dim(source));
}

GradedOperator GradedOperator::scaled(const GaussianRational& s) const {
  GradedOperator g(shift_, parity_);
  if (s.is_zero()) return g;
  for (const auto& [b, m] : blocks_) g.blocks_.emplace(b, m * s);
  return g;
}

GradedOperator GradedOperator::conj() const {
  GradedOperator g(shift_, parity_);
  for (const auto& [b, m] : blocks_) g.blocks_.emplace(b, m.conj());
  return g;
}

void GradedOperator::check_shapes(const BigradedSpace& space, const std::string& name) const {
  for (const auto& [b, m] : blocks_) {
    Bidegree t = b + shift_;
    if (m.cols() != space.dim(b) || m.rows() != space.dim(t))
      throw DimensionMismatch(name + " block (" + b.str() + ")->(" + t.str() + ") has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", slots have dims " +
                              std::to_string(space.dim(b)) + " and " + std::to_string(space.dim(t)));
  }
}

GradedOperator add(const GradedOperator& a, const GradedOperator& b) {
  if (a.shift() != b.shift()) throw DimensionMismatch("adding operators of different shift");
  if (a.parity() != b.parity() && !a.is_zero() && !b.is_zero())
    throw DimensionMismatch("adding operators of different parity");
  GradedOperator out(a.shift(), a.is_zero() ? b.parity() : a.parity());
  for (const auto& [s, m] : a.blocks()) out.set_block(s, m);
  for (const auto& [s, m] : b.blocks()) {
    if (const auto* x = out.block(s))
      out.set_block(s, *x + m);
    else
      out.set_block(s, m);
  }
  return out;
}

GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator out(a.shift() + b.shift(), a.parity() ^ b.parity());
  for (const auto& [s, mb] : b.blocks()) {
    if (const auto* ma = a.block(s + b.shift())) out.set_block(s, *ma * mb);
  }
  return out;
}

Operator::Operator(const GradedOperator& g) {
  if (!g.is_zero()) parts_.emplace(g.shift(), g);
}

GradedOperator Operator::component(Shift s) const {
  auto it = parts_.find(s);
  if (it != parts_.end()) return it->second;
  return GradedOperator(s, parity().value_or(Parity::even));
}

std::optional<Parity> Operator::parity() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.begin()->second.parity();
}

Operator& Operator::operator+=(const Operator& o) {
  for (const auto& [s, g] : o.parts_) {
    auto it = parts_.find(s);
    GradedOperator sum = it == parts_.end() ? g : add(it->second, g);
    if (sum.is_zero())
      parts_.erase(s);
    else
      parts_[s] = std::move(sum);
  }
  return *this;
}

Operator Operator::scaled(const GaussianRational& s) const {
  Operator out;
  if (s.is_zero()) return out;
  for (const auto& [sh, g] : parts_) out.parts_.emplace(sh, g.scaled(s));
  return out;
}

Operator op_compose(const Operator& a, const Operator& b) {
  Operator out;
  for (const auto& [sa, ga] : a.parts())
    for (const auto& [sb, gb] : b.parts()) out += Operator(op_compose(ga, gb));
  return out;
}

Operator op_anticommutator(const Operator& a, const Operator& b) { return op_compose(a, b) + op_compose(b, a); }

Operator op_commutator(const Operator& a, const Operator& b) { return op_compose(a, b) - op_compose(b, a); }

Operator op_supercommutator(const Operator& a, const Operator& b) {
  if (a.parity() == Parity::odd && b.parity() == Parity::odd) return op_anticommutator(a, b);
  return op_commutator(a, b);
}

GradedOperator identity_operator(const BigradedSpace& space) {
  return diagonal_operator(space, [](Bidegree) { return GaussianRational(1); });
}

std::map<Bidegree, Vector> apply(const Operator& op, Bidegree source, const Vector& v) {
  std::map<Bidegree, Vector> out;
  for (const auto& [s, g] : op.parts()) {
    if (const auto* m = g.block(source)) {
      Vector w = *m * v;
      if (!is_zero(w)) out.emplace(source + s, std::move(w));
    }
  }
  return out;
}

}  // namespace hodgekit
