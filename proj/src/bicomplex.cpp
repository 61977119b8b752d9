#include "hodgekit/bicomplex.hpp"

#include "hodgekit/errors.hpp"

#include <sstream>

namespace hodgekit {

Operator Bicomplex::d() const {
  require_del("d");
  return Operator(del) + Operator(delbar);
}

void Bicomplex::require_del(const std::string& op) const {
  if (!has_del) throw MissingDifferential(op);
}

std::string ValidationReport::summary() const {
  if (ok) return "all differential identities hold";
  const auto& f = failures.front();
  std::ostringstream os;
  os << f.identity << " fails on slot (" << f.slot.str() << "): " << f.value.str();
  if (failures.size() > 1) os << " (+" << failures.size() - 1 << " more)";
  return os.str();
}

namespace {

void check_zero(ValidationReport& r, const std::string& identity, const GradedOperator& g) {
  for (const auto& [b, m] : g.blocks()) {
    if (!m.is_zero()) {
      r.ok = false;
      r.failures.push_back({identity, b, m});
    }
  }
}

}  // namespace

ValidationReport validate(const Bicomplex& b) {
  ValidationReport r;
  auto shape = [&](const GradedOperator& g, const char* name, Shift expected) {
    if (g.shift() != expected) {
      r.ok = false;
      r.failures.push_back({std::string(name) + " has the wrong shift", {0, 0}, {}});
      return;
    }
    try {
      g.check_shapes(b.space, name);
    } catch (const DimensionMismatch& e) {
      r.ok = false;
      r.failures.push_back({e.what(), {0, 0}, {}});
    }
  };
  shape(b.delbar, "delbar", {0, 1});
  if (b.has_del) shape(b.del, "del", {1, 0});
  if (!r.ok) return r;

  check_zero(r, "delbar^2 = 0", op_compose(b.delbar, b.delbar));
  if (b.has_del) {
    check_zero(r, "del^2 = 0", op_compose(b.del, b.del));
    check_zero(r, "del delbar + delbar del = 0", add(op_compose(b.del, b.delbar), op_compose(b.delbar, b.del)));
  }
  return r;
}

ExactMatrix TotalComplex::d(int k) const {
  if (k >= 0 && k < top_degree) return differential[static_cast<std::size_t>(k)];
  return ExactMatrix(dim(k + 1), dim(k));
}

ExactMatrix TotalComplex::embedding(const BigradedSpace& space, Bidegree b) const {
  ExactMatrix e(dim(b.total()), space.dim(b));
  auto it = offsets.find(b);
  if (it == offsets.end()) return e;
  for (std::size_t k = 0; k < space.dim(b); ++k) e(it->second + k, k) = 1;
  return e;
}

TotalComplex total_differential(const Bicomplex& b) {
  b.require_del("total_differential");
  TotalComplex t;
  t.top_degree = 2 * b.n();
  t.dims.assign(static_cast<std::size_t>(t.top_degree + 1), 0);
  for (int k = 0; k <= t.top_degree; ++k) {
    std::size_t off = 0;
    for (auto bd : b.space.bidegrees_of_degree(k)) {
      t.offsets[bd] = off;
      off += b.space.dim(bd);
    }
    t.dims[static_cast<std::size_t>(k)] = off;
  }
  for (int k = 0; k < t.top_degree; ++k) {
    ExactMatrix m(t.dim(k + 1), t.dim(k));
    for (auto src : b.space.bidegrees_of_degree(k)) {
      for (const GradedOperator* g : {&b.del, &b.delbar}) {
        const ExactMatrix* blk = g->block(src);
        if (!blk) continue;
        std::size_t r0 = t.offsets.at(src + g->shift()), c0 = t.offsets.at(src);
        for (std::size_t r = 0; r < blk->rows(); ++r)
          for (std::size_t c = 0; c < blk->cols(); ++c) m(r0 + r, c0 + c) += (*blk)(r, c);
      }
    }
    t.differential.push_back(std::move(m));
  }
  return t;
}

Operator dc_operator(const Bicomplex& b) {
  b.require_del("dc_operator");
  const auto i = GaussianRational::i();
  return Operator(b.del.scaled(-i)) + Operator(b.delbar.scaled(i));
}

GradedOperator weil_j(const BigradedSpace& space) {
  return diagonal_operator(space, [](Bidegree b) { return i_power(b.p - b.q); });
}

GradedOperator weil_j_inverse(const BigradedSpace& space) {
  return diagonal_operator(space, [](Bidegree b) { return i_power(b.q - b.p); });
}

std::string ConventionReport::note() const {
  std::ostringstream os;
  os << "J d J^-1 " << (conjugate_is_i_del_minus_i_delbar ? "=" : "!=") << " i del - i delbar; ";
  if (conjugate_equals_dc && conjugate_equals_minus_dc)
    os << "d^c = 0 on this complex, so both sign conventions agree";
  else if (conjugate_equals_dc)
    os << "J d J^-1 = d^c with d^c = i(delbar - del)";
  else if (conjugate_equals_minus_dc)
    os << "J d J^-1 = -d^c with d^c = i(delbar - del); kernels and images are unaffected by the sign";
  else
    os << "J d J^-1 matches neither sign of d^c";
  os << "; (-1)^k J d J " << (signed_variant_equals_dc ? "=" : "!=") << " d^c";
  return os.str();
}

ConventionReport j_convention(const Bicomplex& b) {
  b.require_del("j_convention");
  const auto i = GaussianRational::i();
  Operator j = weil_j(b.space), jinv = weil_j_inverse(b.space);
  Operator conj_d = op_compose(j, op_compose(b.d(), jinv));
  Operator dc = dc_operator(b);
  ConventionReport r;
  r.conjugate_is_i_del_minus_i_delbar = conj_d == Operator(b.del.scaled(i)) + Operator(b.delbar.scaled(-i));
  r.conjugate_equals_dc = conj_d == dc;
  r.conjugate_equals_minus_dc = conj_d == dc.scaled(-1);
  Operator signed_variant = op_compose(
      op_compose(j, op_compose(b.d(), j)),
      diagonal_operator(b.space, [](Bidegree bd) { return GaussianRational(bd.total() % 2 == 0 ? 1 : -1); }));
  r.signed_variant_equals_dc = signed_variant == dc;
  return r;
}

}  // namespace hodgekit
