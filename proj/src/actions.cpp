#include "hodgekit/actions.hpp"

#include "hodgekit/errors.hpp"

#include <bit>

namespace hodgekit {

Operator Contraction::rotated() const {
  const auto i = GaussianRational::i();
  return Operator(iota10.scaled(i)) + Operator(iota01.scaled(-i));
}

Contraction make_contraction(const ExteriorModel& model, const std::string& name,
                             const std::map<std::string, GaussianRational>& values) {
  std::vector<GaussianRational> value(model.generators.size());
  std::vector<bool> given(model.generators.size(), false);
  for (const auto& [gen, v] : values) {
    int idx = model.generator_index(gen);
    int cidx = model.generator_index(conjugate_name(gen));
    if (idx < 0) throw InvalidModel("contraction " + name + ": unknown generator '" + gen + "'");
    if (given[static_cast<std::size_t>(idx)])
      throw InvalidModel("contraction " + name + ": generator '" + gen + "' given twice (conjugates are implicit)");
    value[static_cast<std::size_t>(idx)] = v;
    value[static_cast<std::size_t>(cidx)] = v.conj();
    given[static_cast<std::size_t>(idx)] = given[static_cast<std::size_t>(cidx)] = true;
  }

  Contraction c;
  c.name = name;
  const auto& space = model.complex.space;
  for (const auto& [src, masks] : model.monomials) {
    ExactMatrix m10(space.dim(src + Shift{-1, 0}), masks.size());
    ExactMatrix m01(space.dim(src + Shift{0, -1}), masks.size());
    for (std::size_t col = 0; col < masks.size(); ++col) {
      int position = 0;
      for (std::uint32_t rest = masks[col]; rest; rest &= rest - 1, ++position) {
        auto bit = static_cast<std::size_t>(std::countr_zero(rest));
        if (value[bit].is_zero()) continue;
        std::uint32_t reduced = masks[col] & ~(std::uint32_t{1} << bit);
        auto [tgt, row] = model.locate(reduced);
        GaussianRational coeff = value[bit] * GaussianRational(position % 2 ? -1 : 1);
        if (model.generators[bit].type == Bidegree{1, 0})
          m10(row, col) += coeff;
        else
          m01(row, col) += coeff;
      }
    }
    if (src.p > 0) c.iota10.set_block(src, std::move(m10));
    if (src.q > 0) c.iota01.set_block(src, std::move(m01));
  }
  return c;
}

std::vector<std::string> check_contraction(const Contraction& c) {
  std::vector<std::string> failures;
  if (!op_compose(c.iota10, c.iota10).is_zero()) failures.push_back("iota10^2 != 0");
  if (!op_compose(c.iota01, c.iota01).is_zero()) failures.push_back("iota01^2 != 0");
  if (!op_anticommutator(c.iota10, c.iota01).is_zero()) failures.push_back("{iota10, iota01} != 0");
  return failures;
}

LieDerivative lie_derivative(const Bicomplex& b, const Contraction& c) {
  c.iota10.check_shapes(b.space, "iota10");
  c.iota01.check_shapes(b.space, "iota01");
  LieDerivative out;
  out.full = op_anticommutator(b.d(), c.total());
  for (const auto& [s, g] : out.full.parts()) {
    if (s != Shift{0, 0}) {
      out.mixed = true;
      out.warnings.push_back("mixed-type component of shift (" + std::to_string(s.dp) + "," + std::to_string(s.dq) +
                             "): L_X does not preserve bidegree");
    }
  }
  out.result = out.mixed ? out.full : Operator(out.full.component({0, 0}));
  return out;
}

Operator lie_derivative_j(const Bicomplex& b, const Contraction& c) {
  return op_anticommutator(dc_operator(b), c.total()).scaled(-1);
}

Operator lie_derivative_j_cartan(const Bicomplex& b, const Contraction& c) {
  return op_anticommutator(b.d(), c.rotated());
}

HolomorphyReport holomorphy_check(const Bicomplex& b, const Operator& lie) {
  HolomorphyReport r;
  for (const auto& [s, g] : lie.parts()) {
    if (s != Shift{0, 0}) {
      r.preserves_bidegree = false;
      r.failures.push_back("component of shift (" + std::to_string(s.dp) + "," + std::to_string(s.dq) + ")");
    }
  }
  if (!op_commutator(lie, b.delbar).is_zero()) {
    r.commutes_with_delbar = false;
    r.failures.push_back("[L, delbar] != 0");
  }
  if (b.has_del && !op_commutator(lie, b.del).is_zero()) {
    r.commutes_with_del = false;
    r.failures.push_back("[L, del] != 0");
  }
  return r;
}

const FlavorAction& ActionVerdict::get(Flavor f) const {
  for (const auto& a : flavors)
    if (a.flavor == f) return a;
  throw Error("flavor " + to_string(f) + " not in verdict");
}

bool ActionVerdict::trivial() const {
  for (const auto& a : flavors)
    if (a.applicable && !a.is_trivial) return false;
  return true;
}

namespace {

FlavorAction bigraded_action(const CohomologyTable& t, const GradedOperator& l0, const BigradedSpace& space) {
  FlavorAction a;
  a.flavor = t.flavor;
  a.applicable = true;
  for (const auto& [slot, q] : t.slots) {
    ExactMatrix m;
    try {
      m = induced_quotient_map(l0.block_or_zero(space, slot), q, q);
    } catch (const PreconditionError& e) {
      throw PreconditionError("L is not a chain map for " + to_string(t.flavor) + " on slot (" + slot.str() +
                              "): " + e.what());
    }
    if (!m.is_zero()) a.is_trivial = false;
    a.induced.emplace(slot.str(), std::move(m));
  }
  return a;
}

}  // namespace

ActionVerdict induced_on_cohomology(const Bicomplex& b, const Operator& lie) {
  ActionVerdict v;
  HolomorphyReport h = holomorphy_check(b, lie);
  GradedOperator l0 = lie.component({0, 0});
  l0.check_shapes(b.space, "L");

  std::vector<CohomologyTable> tables;
  tables.push_back(dolbeault(b));
  if (b.has_del) {
    tables.push_back(bott_chern(b));
    tables.push_back(aeppli(b));
  }
  for (const auto& t : tables) {
    if (h.ok()) {
      v.flavors.push_back(bigraded_action(t, l0, b.space));
    } else {
      FlavorAction a;
      a.flavor = t.flavor;
      a.reason = "L is not holomorphic: " + h.failures.front();
      v.flavors.push_back(std::move(a));
    }
  }

  FlavorAction dr;
  dr.flavor = Flavor::derham;
  if (!b.has_del) {
    dr.reason = "complex carries only delbar";
    v.flavors.push_back(std::move(dr));
    return v;
  }
  for (const auto& [s, g] : lie.parts()) {
    if (s.total() != 0) {
      dr.reason = "L changes total degree";
      v.flavors.push_back(std::move(dr));
      return v;
    }
  }
  TotalComplex tc = total_differential(b);
  CohomologyTable drt = derham(b);
  dr.applicable = true;
  for (int k = 0; k <= tc.top_degree; ++k) {
    ExactMatrix lk(tc.dim(k), tc.dim(k));
    for (auto src : b.space.bidegrees_of_degree(k)) {
      for (const auto& [s, g] : lie.parts()) {
        const ExactMatrix* blk = g.block(src);
        if (!blk) continue;
        std::size_t r0 = tc.offsets.at(src + s), c0 = tc.offsets.at(src);
        for (std::size_t r = 0; r < blk->rows(); ++r)
          for (std::size_t c = 0; c < blk->cols(); ++c) lk(r0 + r, c0 + c) += (*blk)(r, c);
      }
    }
    const auto& q = drt.degrees.at(k);
    ExactMatrix m;
    try {
      m = induced_quotient_map(lk, q, q);
    } catch (const PreconditionError& e) {
      throw PreconditionError("L is not a chain map for de Rham in degree " + std::to_string(k) + ": " + e.what());
    }
    if (!m.is_zero()) dr.is_trivial = false;
    dr.induced.emplace(std::to_string(k), std::move(m));
  }
  v.flavors.push_back(std::move(dr));
  return v;
}

HomotopySolution homotopy_coefficients(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() && b.is_zero()) throw DegenerateSystem("a = b = 0: no operator delta = b d + a d^c exists");
  GaussianRational det = a * a + b * b;
  if (det.is_zero())
    throw DegenerateSystem("a^2 + b^2 = 0 (a = " + a.str() + ", b = " + b.str() +
                           "): the determinant -a^2 - b^2 vanishes, so the system has no unique solution");
  HomotopySolution s{a / det, b / det, {}};
  if (s.y1.is_real() && s.y2.is_real())
    s.field = "rational";
  else if (s.y1.is_imaginary() && s.y2.is_imaginary())
    s.field = "imaginary";
  else
    s.field = "gaussian";
  return s;
}

Operator delta_operator(const Bicomplex& bc, const GaussianRational& a, const GaussianRational& b) {
  bc.require_del("delta_operator");
  Operator delta = bc.d().scaled(b) + dc_operator(bc).scaled(a);
  if (!op_compose(delta, delta).is_zero()) throw InternalError("delta^2 != 0");
  return delta;
}

}  // namespace hodgekit
