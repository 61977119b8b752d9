#include "hodgekit/vaisman.hpp"

#include "hodgekit/errors.hpp"

#include <functional>

namespace hodgekit {

namespace {

void place(ExactMatrix& dst, std::size_t r0, std::size_t c0, const ExactMatrix& src) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) dst(r0 + r, c0 + c) = src(r, c);
}

std::string wedge_label(const std::vector<std::string>& thetas, const std::string& x) {
  std::string s;
  for (const auto& t : thetas) s += (s.empty() ? "" : "^") + t;
  if (x == "1") return s.empty() ? "1" : s;
  return s.empty() ? x : s + "^" + x;
}

// L_B block out of slot b, zero-shaped when absent.
ExactMatrix lefschetz_block(const BasicCohomology& basic, Bidegree b) {
  if (const auto* m = basic.lefschetz.block(b)) return *m;
  return ExactMatrix(basic.dim(b + Shift{1, 1}), basic.dim(b));
}

std::size_t hbt_dim(const BasicCohomology& basic, Bidegree b) { return basic.dim(b) + basic.dim({b.p, b.q - 1}); }

// L on H_B + theta01 H_B out of slot b: block diagonal.
ExactMatrix lefschetz_bt(const BasicCohomology& basic, Bidegree b) {
  Bidegree t = b + Shift{1, 1};
  ExactMatrix m(hbt_dim(basic, t), hbt_dim(basic, b));
  place(m, 0, 0, lefschetz_block(basic, b));
  place(m, basic.dim(t), basic.dim(b), lefschetz_block(basic, {b.p, b.q - 1}));
  return m;
}

bool in_grid(Bidegree b, int n) { return b.p >= 0 && b.q >= 0 && b.p <= n && b.q <= n; }

}  // namespace

std::size_t BasicCohomology::dim(Bidegree b) const {
  auto it = classes.find(b);
  return it == classes.end() ? 0 : it->second.size();
}

BigradedSpace BasicCohomology::space() const {
  BigradedSpace s(n - 1);
  for (const auto& [b, labels] : classes) s.add_slot(b, labels);
  return s;
}

Vector BasicCohomology::omega0() const {
  Vector one(dim({0, 0}));
  if (!one.empty()) one[0] = 1;
  return lefschetz_block(*this, {0, 0}) * one;
}

BasicCohomology make_basic(std::string name, int n, const std::map<Bidegree, int>& dims) {
  BasicCohomology basic;
  basic.name = std::move(name);
  basic.n = n;
  for (const auto& [b, k] : dims) {
    if (k < 0) throw InvalidModel("negative basic dimension at (" + b.str() + ")");
    std::vector<std::string> labels;
    if (b == Bidegree{0, 0} && k == 1) {
      labels.push_back("1");
    } else {
      for (int j = 0; j < k; ++j) labels.push_back("h(" + b.str() + ")_" + std::to_string(j));
    }
    if (!labels.empty()) basic.classes[b] = std::move(labels);
  }
  return basic;
}

void validate_basic(const BasicCohomology& basic) {
  if (basic.n < 2) throw InvalidModel("Vaisman models need complex dimension n >= 2, got " + std::to_string(basic.n));
  for (const auto& [b, labels] : basic.classes)
    if (b.p < 0 || b.q < 0 || b.p > basic.n - 1 || b.q > basic.n - 1)
      throw InvalidModel("basic class at (" + b.str() + ") outside 0 <= p,q <= n-1");
  if (basic.dim({0, 0}) != 1) throw InvalidModel("basic cohomology must have dim H^{0,0} = 1");
  if (basic.lefschetz.shift() != Shift{1, 1}) throw InvalidModel("Lefschetz operator must have shift (1,1)");
  BigradedSpace s = basic.space();
  try {
    basic.lefschetz.check_shapes(s, "lefschetz");
  } catch (const DimensionMismatch& e) {
    throw InvalidModel(e.what());
  }
  for (const auto& [b, m] : basic.lefschetz.blocks())
    if (!in_grid(b + Shift{1, 1}, basic.n - 1)) throw InvalidModel("Lefschetz block out of (" + b.str() + ") leaves the grid");
}

BasicCohomology hopf_basic(int n) {
  if (n < 2) throw InvalidModel("Hopf manifolds need complex dimension n >= 2 (LCK), got " + std::to_string(n));
  BasicCohomology basic;
  basic.name = "hopf" + std::to_string(n);
  basic.n = n;
  for (int p = 0; p <= n - 1; ++p)
    basic.classes[{p, p}] = {p == 0 ? "1" : p == 1 ? "omega0" : "omega0^" + std::to_string(p)};
  for (int p = 0; p + 1 <= n - 1; ++p) basic.lefschetz.set_block({p, p}, ExactMatrix{{1}});
  return basic;
}

TransverseLefschetz transverse_lefschetz(const BasicCohomology& basic) {
  TransverseLefschetz t;
  const int m = basic.n - 1;
  for (int k = 0; k <= 2 * m; ++k) {
    std::size_t src = 0, dst = 0, r = 0;
    for (int p = 0; p <= k; ++p) {
      Bidegree b{p, k - p};
      src += basic.dim(b);
      dst += basic.dim(b + Shift{1, 1});
      r += rank(lefschetz_block(basic, b));  // blocks act on disjoint slots
    }
    if (k <= m - 1) {
      t.injective[k] = r == src;
      t.holds = t.holds && r == src;
    }
    if (k >= m - 1) {
      t.surjective[k] = r == dst;
      t.holds = t.holds && r == dst;
    }
  }
  return t;
}

SlotLayout slot_layout(const BasicCohomology& basic, Bidegree b) {
  return {basic.dim(b), basic.dim({b.p, b.q - 1}), basic.dim({b.p - 1, b.q}), basic.dim({b.p - 1, b.q - 1})};
}

VaismanModel build_invariant_model(const BasicCohomology& basic, bool full, bool rational_normalization) {
  validate_basic(basic);
  if (full && rational_normalization)
    throw InvalidModel("the rational normalization delbar theta10 = omega0 is only available for delbar-only models");
  VaismanModel model;
  model.basic = basic;
  model.full = full;
  model.rational_normalization = rational_normalization;
  const int n = basic.n;
  const auto i = GaussianRational::i();
  const GaussianRational unit = rational_normalization ? GaussianRational(1) : i;

  BigradedSpace space(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      std::vector<std::string> labels;
      auto add = [&](Bidegree x, std::vector<std::string> thetas) {
        auto it = basic.classes.find(x);
        if (it == basic.classes.end()) return;
        for (const auto& l : it->second) labels.push_back(wedge_label(thetas, l));
      };
      add({p, q}, {});
      add({p, q - 1}, {model.theta01});
      add({p - 1, q}, {model.theta10});
      add({p - 1, q - 1}, {model.theta10, model.theta01});
      space.add_slot({p, q}, std::move(labels));
    }

  GradedOperator delbar({0, 1}, Parity::odd), del({1, 0}, Parity::odd);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Bidegree src{p, q};
      SlotLayout s = slot_layout(basic, src);
      if (s.size() == 0) continue;
      // delbar(theta10 x) = unit L x;  delbar(theta10 theta01 x) = unit theta01 L x.
      Bidegree tb{p, q + 1};
      SlotLayout t = slot_layout(basic, tb);
      ExactMatrix mb(t.size(), s.size());
      place(mb, 0, s.off_t10(), lefschetz_block(basic, {p - 1, q}) * unit);
      place(mb, t.off_t01(), s.off_t10t01(), lefschetz_block(basic, {p - 1, q - 1}) * unit);
      delbar.set_block(src, std::move(mb));
      if (full) {
        // del(theta01 x) = -i L x;  del(theta10 theta01 x) = i theta10 L x.
        Bidegree td{p + 1, q};
        SlotLayout u = slot_layout(basic, td);
        ExactMatrix md(u.size(), s.size());
        place(md, 0, s.off_t01(), lefschetz_block(basic, {p, q - 1}) * (-i));
        place(md, u.off_t10(), s.off_t10t01(), lefschetz_block(basic, {p - 1, q - 1}) * i);
        del.set_block(src, std::move(md));
      }
    }
  model.complex = Bicomplex{std::move(space), std::move(del), std::move(delbar), full};
  auto report = validate(model.complex);
  if (!report.ok) throw InternalError("invariant model failed validation: " + report.summary());
  return model;
}

bool slot_dimension_identity(const VaismanModel& model) {
  const auto& b = model.basic;
  for (int p = 0; p <= b.n; ++p)
    for (int q = 0; q <= b.n; ++q) {
      std::size_t expected = b.dim({p, q}) + b.dim({p, q - 1}) + b.dim({p - 1, q}) + b.dim({p - 1, q - 1});
      if (model.complex.space.dim({p, q}) != expected) return false;
    }
  return true;
}

ThetaCheck theta_check(const VaismanModel& model) {
  if (!model.full) throw InvalidModel("theta_check needs the full model (del and delbar)");
  const auto& sp = model.complex.space;
  const auto i = GaussianRational::i();
  Operator d = model.complex.d();
  auto image = [&](const std::string& label, const GaussianRational& scale) {
    auto loc = sp.find(label);
    if (!loc) throw InternalError("model lacks " + label);
    Vector v = sp.unit(label);
    for (auto& x : v) x *= scale;
    return apply(d, loc->first, v);
  };
  auto merge = [](std::map<Bidegree, Vector> a, const std::map<Bidegree, Vector>& b) {
    for (const auto& [k, v] : b) {
      auto [it, inserted] = a.emplace(k, v);
      if (!inserted)
        for (std::size_t j = 0; j < v.size(); ++j) it->second[j] += v[j];
    }
    std::erase_if(a, [](const auto& kv) { return is_zero(kv.second); });
    return a;
  };
  ThetaCheck c;
  c.d_theta_zero = merge(image(model.theta10, 1), image(model.theta01, 1)).empty();

  auto dthc = merge(image(model.theta10, i), image(model.theta01, -i));
  Vector w(sp.dim({1, 1}));
  Vector w0 = model.basic.omega0();
  for (std::size_t k = 0; k < w0.size(); ++k) w[k] = w0[k];
  if (dthc.size() == 1 && dthc.begin()->first == Bidegree{1, 1} && !is_zero(w)) {
    const Vector& v = dthc.begin()->second;
    std::size_t pivot = 0;
    while (w[pivot].is_zero()) ++pivot;
    c.factor = v[pivot] / w[pivot];
    c.d_theta_c_proportional = true;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!(v[k] == c.factor * w[k])) c.d_theta_c_proportional = false;
  }
  return c;
}

Contraction lee_contraction(const VaismanModel& model, const GaussianRational& c) {
  const auto& basic = model.basic;
  Contraction out;
  out.name = "lee";
  const GaussianRational cb = c.conj();
  for (int p = 0; p <= basic.n; ++p)
    for (int q = 0; q <= basic.n; ++q) {
      Bidegree src{p, q};
      SlotLayout s = slot_layout(basic, src);
      if (s.size() == 0) continue;
      if (p > 0) {
        // iota10(theta10 x) = c x;  iota10(theta10 theta01 x) = c theta01 x.
        SlotLayout t = slot_layout(basic, {p - 1, q});
        ExactMatrix m(t.size(), s.size());
        place(m, 0, s.off_t10(), ExactMatrix::identity(s.t10) * c);
        place(m, t.off_t01(), s.off_t10t01(), ExactMatrix::identity(s.t10t01) * c);
        out.iota10.set_block(src, std::move(m));
      }
      if (q > 0) {
        // iota01(theta01 x) = conj(c) x;  iota01(theta10 theta01 x) = -conj(c) theta10 x.
        SlotLayout t = slot_layout(basic, {p, q - 1});
        ExactMatrix m(t.size(), s.size());
        place(m, 0, s.off_t01(), ExactMatrix::identity(s.t01) * cb);
        place(m, t.off_t10(), s.off_t10t01(), ExactMatrix::identity(s.t10t01) * (-cb));
        out.iota01.set_block(src, std::move(m));
      }
    }
  return out;
}

ConeData build_mapping_cone(const Bicomplex& sub, const GradedOperator& f, int n,
                            const std::function<std::string(const std::string&)>& shifted_label) {
  if (sub.has_del) throw InvalidModel("build_mapping_cone expects a delbar-only complex");
  if (f.shift() != Shift{1, 1}) throw InvalidModel("cone morphism must have shift (1,1)");
  ConeData cd;
  cd.sub = sub;
  cd.f = f;
  const auto& ss = sub.space;
  auto sdim = [&](Bidegree b) { return in_grid(b, n) ? ss.dim(b) : std::size_t{0}; };
  auto sblock = [&](const GradedOperator& g, Bidegree b) {
    if (const auto* m = g.block(b)) return *m;
    return ExactMatrix(sdim(b + g.shift()), sdim(b));
  };

  BigradedSpace space(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      std::vector<std::string> labels = ss.labels({p, q});
      for (const auto& l : ss.labels({p - 1, q})) labels.push_back(shifted_label(l));
      space.add_slot({p, q}, std::move(labels));
    }

  GradedOperator delbar({0, 1}, Parity::odd);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Bidegree src{p, q}, k{p - 1, q}, tgt{p, q + 1};
      std::size_t rows = sdim(tgt) + sdim({p - 1, q + 1}), cols = sdim(src) + sdim(k);
      if (cols == 0) continue;
      ExactMatrix m(rows, cols);
      place(m, 0, 0, sblock(sub.delbar, src));
      place(m, 0, sdim(src), sblock(f, k));
      place(m, sdim(tgt), sdim(src), -sblock(sub.delbar, k));
      delbar.set_block(src, std::move(m));

      ExactMatrix inc(cols, sdim(src));
      place(inc, 0, 0, ExactMatrix::identity(sdim(src)));
      cd.inclusion.set_block(src, std::move(inc));
      ExactMatrix proj(sdim(k), cols);
      place(proj, 0, sdim(src), ExactMatrix::identity(sdim(k)));
      cd.projection.set_block(src, std::move(proj));
    }
  cd.cone = Bicomplex{std::move(space), GradedOperator({1, 0}, Parity::odd), std::move(delbar), false};
  auto report = validate(cd.cone);
  if (!report.ok) throw InternalError("cone differential does not square to zero: " + report.summary());

  // Snake construction: lift a cycle of sub(s) into the shifted summand of
  // cone(s + (1,0)), apply delbar, and pull back along the inclusion.
  CohomologyTable hs = dolbeault(sub);
  for (const auto& [s, qs] : hs.slots) {
    Bidegree lift_slot = s + Shift{1, 0}, t = s + Shift{1, 1};
    auto qt = hs.slots.find(t);
    std::size_t tdim = qt == hs.slots.end() ? 0 : qt->second.dim();
    ExactMatrix conn(tdim, qs.dim());
    if (tdim > 0 && in_grid(lift_slot, n)) {
      const auto& sp = cd.cone.space;
      ExactMatrix d = cd.cone.delbar.block_or_zero(sp, lift_slot);
      const auto* inc = cd.inclusion.block(t);
      for (std::size_t c = 0; c < qs.dim(); ++c) {
        Vector lifted(sp.dim(lift_slot));
        const Vector& rep = qs.representatives()[c];
        for (std::size_t j = 0; j < rep.size(); ++j) lifted[sdim(lift_slot) + j] = rep[j];
        Vector y = d * lifted, z;
        if (is_zero(y)) continue;
        if (!inc || !solve(*inc, y, z)) throw InternalError("connecting map: boundary not in the subcomplex");
        Vector coords = qt->second.coordinates(z);
        for (std::size_t r = 0; r < tdim; ++r) conn(r, c) = coords[r];
      }
    }
    cd.connecting.emplace(s, std::move(conn));
  }
  return cd;
}

ConeData build_mapping_cone(const Bicomplex& sub, const GradedOperator& f, int n) {
  return build_mapping_cone(sub, f, n, [](const std::string& l) { return "s(" + l + ")"; });
}

ConeData build_cone(const BasicCohomology& basic) {
  validate_basic(basic);
  const int n = basic.n;
  const BigradedSpace hb = basic.space();
  BigradedSpace space(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      std::vector<std::string> labels = hb.labels({p, q});
      for (const auto& l : hb.labels({p, q - 1})) labels.push_back(wedge_label({"theta01"}, l));
      space.add_slot({p, q}, std::move(labels));
    }
  Bicomplex sub{std::move(space), GradedOperator({1, 0}, Parity::odd), GradedOperator({0, 1}, Parity::odd), false};
  GradedOperator f({1, 1}, Parity::even);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      ExactMatrix m = lefschetz_bt(basic, {p, q}) * GaussianRational::i();
      if (!m.empty() && in_grid(Bidegree{p + 1, q + 1}, n)) f.set_block({p, q}, std::move(m));
    }
  return build_mapping_cone(sub, f, n, [](const std::string& l) { return wedge_label({"theta10"}, l); });
}

ConeLesReport verify_cone_les(const BasicCohomology& basic) {
  VaismanModel model = build_invariant_model(basic, false);
  ConeData cd = build_cone(basic);
  if (!(cd.cone == model.complex)) throw InternalError("cone of L_omega0 differs from the invariant model");
  const int n = basic.n;
  CohomologyTable hs = dolbeault(cd.sub);
  CohomologyTable hm = dolbeault(model.complex);
  auto hs_dim = [&](Bidegree b) { return hs.dim(b); };

  auto delta = [&](Bidegree s) {
    auto it = cd.connecting.find(s);
    if (it != cd.connecting.end()) return it->second;
    return ExactMatrix(hs_dim(s + Shift{1, 1}), hs_dim(s));
  };

  ConeLesReport rep;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Bidegree b{p, q}, k{p - 1, q};
      const auto& qm = hm.slots.at(b);
      ExactMatrix istar(qm.dim(), hs_dim(b));
      if (hs_dim(b) > 0 && qm.dim() > 0)
        istar = induced_quotient_map(*cd.inclusion.block(b), hs.slots.at(b), qm);
      ExactMatrix pistar(hs_dim(k), qm.dim());
      if (hs_dim(k) > 0 && qm.dim() > 0)
        pistar = induced_quotient_map(*cd.projection.block(b), qm, hs.slots.at(k));
      ExactMatrix d_in = delta({p - 1, q - 1});
      ExactMatrix d_out = delta(k);

      auto node = [&](std::string name, const ExactMatrix& in, const ExactMatrix& out, std::size_t dim) {
        LesNode nd{std::move(name), dim, rank(in), rank(out), exact_at(in, out, dim)};
        rep.exact = rep.exact && nd.exact;
        if (!nd.exact) throw InternalError("cone long exact sequence fails at " + nd.name);
        rep.nodes.push_back(std::move(nd));
      };
      node("H_Bt^{" + b.str() + "}", d_in, istar, hs_dim(b));
      node("H^{" + b.str() + "}", istar, pistar, qm.dim());
      if (p >= 1) node("H_Bt^{" + k.str() + "}[1] at (" + b.str() + ")", pistar, d_out, hs_dim(k));

      rep.les_dims[b] = hs_dim(b) - rank(d_in) + hs_dim(k) - rank(d_out);
      rep.direct_dims[b] = qm.dim();
    }
  return rep;
}

FormulaConditions formula_conditions(const BasicCohomology& basic) {
  validate_basic(basic);
  FormulaConditions c;
  const int n = basic.n;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q <= n) {
        Bidegree src{p - 1, q};
        if (rank(lefschetz_bt(basic, src)) != hbt_dim(basic, src)) {
          c.holds = false;
          c.failures.push_back("L not injective on H_Bt^{" + src.str() + "} (needed for h^{" + Bidegree{p, q}.str() + "})");
        }
      } else {
        Bidegree src{p - 1, q - 1};
        if (rank(lefschetz_bt(basic, src)) != hbt_dim(basic, {p, q})) {
          c.holds = false;
          c.failures.push_back("L not surjective onto H_Bt^{" + Bidegree{p, q}.str() + "}");
        }
      }
    }
  return c;
}

std::size_t theorem_formula(const BasicCohomology& basic, int p, int q, FormulaIndexing indexing) {
  FormulaConditions c = formula_conditions(basic);
  if (!c.holds) throw InvalidModel("closed formula not applicable: " + c.failures.front());
  if (p + q <= basic.n) return hbt_dim(basic, {p, q}) - rank(lefschetz_bt(basic, {p - 1, q - 1}));
  Bidegree src = indexing == FormulaIndexing::corrected ? Bidegree{p - 1, q} : Bidegree{p, q};
  return hbt_dim(basic, src) - rank(lefschetz_bt(basic, src));
}

CrosscheckReport crosscheck(const BasicCohomology& basic) {
  CrosscheckReport r;
  ConeLesReport les = verify_cone_les(basic);
  r.direct = les.direct_dims;
  r.les = les.les_dims;
  r.formula_applicable = formula_conditions(basic).holds;
  for (const auto& [b, h] : r.direct) {
    const std::string key = "(" + b.str() + ")";
    if (r.les.at(b) != h) r.mismatches.push_back("direct/LES differ at " + key);
    if (!r.formula_applicable) continue;
    r.formula[b] = theorem_formula(basic, b.p, b.q, FormulaIndexing::corrected);
    r.printed[b] = theorem_formula(basic, b.p, b.q, FormulaIndexing::printed);
    if (r.formula[b] != h) r.mismatches.push_back("direct/formula differ at " + key);
    if (r.printed[b] != r.formula[b])
      r.printed_diffs.push_back("h^{" + b.str() + "}: printed indexing gives " + std::to_string(r.printed[b]) +
                                ", corrected gives " + std::to_string(r.formula[b]));
  }
  return r;
}

}  // namespace hodgekit
