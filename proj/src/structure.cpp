#include "hodgekit/structure.hpp"

#include "hodgekit/errors.hpp"

#include <bit>
#include <sstream>

namespace hodgekit {

namespace {

using Mask = std::uint32_t;
using Element = std::map<Mask, GaussianRational>;

constexpr std::size_t kMaxGenerators = 24;

/// a ^ b for basis monomials; sign 0 when they share a generator.
std::pair<int, Mask> wedge(Mask a, Mask b) {
  if (a & b) return {0, 0};
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int bit = std::countr_zero(rest);
    inversions += std::popcount(a >> (bit + 1));
  }
  return {inversions % 2 ? -1 : 1, a | b};
}

void accumulate(Element& e, Mask m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

Bidegree type_of(const std::vector<Generator>& gens, Mask m) {
  Bidegree b{0, 0};
  for (Mask rest = m; rest; rest &= rest - 1) {
    const auto& t = gens[static_cast<std::size_t>(std::countr_zero(rest))].type;
    b.p += t.p;
    b.q += t.q;
  }
  return b;
}

class Derivation {
 public:
  explicit Derivation(std::vector<Element> on_generators) : dg_(std::move(on_generators)) {}

  Element apply(Mask m) const {
    Element out;
    int position = 0;
    for (Mask rest = m; rest; rest &= rest - 1, ++position) {
      int bit = std::countr_zero(rest);
      Mask below = m & ((Mask{1} << bit) - 1);
      Mask above = m & ~((Mask{1} << (bit + 1)) - 1);
      for (const auto& [dm, c] : dg_[static_cast<std::size_t>(bit)]) {
        auto [s1, m1] = wedge(below, dm);
        if (!s1) continue;
        auto [s2, m2] = wedge(m1, above);
        if (!s2) continue;
        accumulate(out, m2, c * GaussianRational((position % 2 ? -1 : 1) * s1 * s2));
      }
    }
    return out;
  }

  Element apply(const Element& e) const {
    Element out;
    for (const auto& [m, c] : e)
      for (const auto& [m2, c2] : apply(m)) accumulate(out, m2, c * c2);
    return out;
  }

 private:
  std::vector<Element> dg_;
};

}  // namespace

std::string conjugate_name(const std::string& name) {
  return name.rfind('~', 0) == 0 ? name.substr(1) : "~" + name;
}

int ExteriorModel::generator_index(const std::string& name) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].name == name) return static_cast<int>(k);
  return -1;
}

std::pair<Bidegree, std::size_t> ExteriorModel::locate(std::uint32_t mask) const {
  Bidegree b = type_of(generators, mask);
  const auto& list = monomials.at(b);
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == mask) return {b, k};
  throw InternalError("monomial missing from its slot");
}

std::string ExteriorModel::label(std::uint32_t mask) const {
  if (mask == 0) return "1";
  std::string s;
  for (Mask rest = mask; rest; rest &= rest - 1) {
    if (!s.empty()) s += "^";
    s += generators[static_cast<std::size_t>(std::countr_zero(rest))].name;
  }
  return s;
}

ExteriorModel build_exterior_model(const StructureSpec& spec) {
  ExteriorModel model;
  for (const auto& g : spec.generators) {
    if (g.type != Bidegree{1, 0} && g.type != Bidegree{0, 1})
      throw InvalidModel("generator '" + g.name + "' must have type (1,0) or (0,1)");
    if (g.name.empty() || g.name[0] == '~') throw InvalidModel("invalid generator name '" + g.name + "'");
  }
  model.generators = spec.generators;
  for (const auto& g : spec.generators) model.generators.push_back({conjugate_name(g.name), {g.type.q, g.type.p}});
  const std::size_t count = model.generators.size();
  if (count > kMaxGenerators) throw InvalidModel("too many generators");
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (model.generators[a].name == model.generators[b].name)
        throw InvalidModel("generator '" + model.generators[a].name + "' declared twice");
  int holomorphic = 0;
  for (const auto& g : model.generators) holomorphic += g.type.p;
  if (holomorphic != spec.n)
    throw InvalidModel("model declares " + std::to_string(holomorphic) + " generators of type (1,0), but dim is " +
                       std::to_string(spec.n));

  for (const auto& [name, expr] : spec.differentials) {
    bool declared = false;
    for (const auto& g : spec.generators) declared |= g.name == name;
    if (!declared) throw InvalidModel("differential given for undeclared generator '" + name + "'");
  }

  // d on degree-1 generators; conjugates get the conjugated expression.
  std::vector<Element> dg(count);
  auto expand = [&](const Expression& expr, bool conjugate, const std::string& owner) {
    Element e;
    for (const auto& term : expr) {
      if (term.factors.size() != 2)
        throw InvalidModel("d " + owner + ": term of degree " + std::to_string(term.factors.size()) +
                           ", expected degree 2");
      Mask m = 0;
      int sign = 1;
      for (const auto& f : term.factors) {
        int idx = model.generator_index(conjugate ? conjugate_name(f) : f);
        if (idx < 0) throw InvalidModel("d " + owner + ": unknown generator '" + f + "'");
        auto [s, m2] = wedge(m, Mask{1} << idx);
        sign *= s;
        m = m2;
      }
      if (sign == 0) continue;
      accumulate(e, m, (conjugate ? term.coeff.conj() : term.coeff) * GaussianRational(sign));
    }
    return e;
  };
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    auto it = spec.differentials.find(spec.generators[k].name);
    if (it == spec.differentials.end()) continue;
    dg[k] = expand(it->second, false, spec.generators[k].name);
    dg[k + spec.generators.size()] = expand(it->second, true, spec.generators[k].name);
  }
  for (std::size_t k = 0; k < count; ++k) {
    const auto& g = model.generators[k];
    for (const auto& [m, c] : dg[k]) {
      Bidegree t = type_of(model.generators, m);
      if ((g.type.p == 1 && t == Bidegree{0, 2}) || (g.type.q == 1 && t == Bidegree{2, 0}))
        throw InvalidModel("d " + g.name + " has a component " + model.label(m) + " of type (" + t.str() +
                           "); the structure is not integrable");
    }
  }

  Derivation d(dg);
  for (std::size_t k = 0; k < count; ++k) {
    Element dd = d.apply(dg[k]);
    if (!dd.empty()) {
      std::ostringstream os;
      os << "d^2 " << model.generators[k].name << " = ";
      bool first = true;
      for (const auto& [m, c] : dd) {
        os << (first ? "" : " + ") << "(" << c << ")" << model.label(m);
        first = false;
      }
      os << " != 0; the structure equations violate the Jacobi identity";
      throw InvalidModel(os.str());
    }
  }

  BigradedSpace space(spec.n);
  const Mask limit = Mask{1} << count;
  for (Mask m = 0; m < limit; ++m) model.monomials[type_of(model.generators, m)].push_back(m);
  for (const auto& [b, masks] : model.monomials) {
    std::vector<std::string> labels;
    for (auto m : masks) labels.push_back(model.label(m));
    space.add_slot(b, std::move(labels));
  }

  GradedOperator del({1, 0}, Parity::odd), delbar({0, 1}, Parity::odd);
  for (const auto& [src, masks] : model.monomials) {
    ExactMatrix mdel(space.dim(src + Shift{1, 0}), masks.size());
    ExactMatrix mdelbar(space.dim(src + Shift{0, 1}), masks.size());
    for (std::size_t col = 0; col < masks.size(); ++col) {
      for (const auto& [m, c] : d.apply(masks[col])) {
        auto [tgt, row] = model.locate(m);
        if (tgt == src + Shift{1, 0})
          mdel(row, col) = c;
        else if (tgt == src + Shift{0, 1})
          mdelbar(row, col) = c;
        else
          throw InternalError("derivation produced a component of shift other than (1,0) or (0,1)");
      }
    }
    del.set_block(src, std::move(mdel));
    delbar.set_block(src, std::move(mdelbar));
  }
  model.complex = Bicomplex{std::move(space), std::move(del), std::move(delbar), true};
  auto report = validate(model.complex);
  if (!report.ok) throw InternalError("exterior model failed validation: " + report.summary());
  return model;
}

Bicomplex from_structure_equations(const StructureSpec& spec) { return build_exterior_model(spec).complex; }

Conjugation::Conjugation(const ExteriorModel& model) : space_(&model.complex.space) {
  const std::size_t half = model.generators.size() / 2;
  for (const auto& [b, masks] : model.monomials) {
    Bidegree swapped{b.q, b.p};
    ExactMatrix p(model.monomials.at(swapped).size(), masks.size());
    for (std::size_t col = 0; col < masks.size(); ++col) {
      Mask image = 0;
      int sign = 1;
      for (Mask rest = masks[col]; rest; rest &= rest - 1) {
        auto idx = static_cast<std::size_t>(std::countr_zero(rest));
        std::size_t partner = idx < half ? idx + half : idx - half;
        auto [s, m] = wedge(image, Mask{1} << partner);
        sign *= s;
        image = m;
      }
      auto [tgt, row] = model.locate(image);
      p(row, col) = sign;
    }
    perm_.emplace(b, std::move(p));
  }
}

const ExactMatrix& Conjugation::permutation(Bidegree b) const { return perm_.at(b); }

GradedOperator Conjugation::conjugate(const GradedOperator& op) const {
  Shift s = op.shift();
  GradedOperator out({s.dq, s.dp}, op.parity());
  for (const auto& [src, m] : op.blocks()) {
    Bidegree tgt = src + s;
    out.set_block({src.q, src.p}, perm_.at(tgt) * m.conj() * perm_.at(src).transpose());
  }
  return out;
}

Operator Conjugation::conjugate(const Operator& op) const {
  Operator out;
  for (const auto& [s, g] : op.parts()) out += Operator(conjugate(g));
  return out;
}

}  // namespace hodgekit
