#include "hodgekit/cohomology.hpp"

#include "hodgekit/errors.hpp"

#include <sstream>

namespace hodgekit {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::dolbeault: return "dolbeault";
    case Flavor::anti_dolbeault: return "anti_dolbeault";
    case Flavor::derham: return "derham";
    case Flavor::bott_chern: return "bott_chern";
    case Flavor::aeppli: return "aeppli";
    case Flavor::A: return "A";
    case Flavor::B: return "B";
    case Flavor::C: return "C";
    case Flavor::C_cokernel: return "C_cokernel";
  }
  return "?";
}

std::size_t CohomologyTable::dim(Bidegree b) const {
  auto it = slots.find(b);
  return it == slots.end() ? 0 : it->second.dim();
}

std::size_t CohomologyTable::dim(int k) const {
  auto it = degrees.find(k);
  return it == degrees.end() ? 0 : it->second.dim();
}

std::map<std::string, std::size_t> CohomologyTable::dims() const {
  std::map<std::string, std::size_t> out;
  for (const auto& [b, g] : slots) out[b.str()] = g.dim();
  for (const auto& [k, g] : degrees) out[std::to_string(k)] = g.dim();
  return out;
}

std::size_t CohomologyTable::total() const {
  std::size_t s = 0;
  for (const auto& [b, g] : slots) s += g.dim();
  for (const auto& [k, g] : degrees) s += g.dim();
  return s;
}

namespace {

void require_valid(const Bicomplex& b, const char* op) {
  auto r = validate(b);
  if (!r.ok) throw InvalidModel(std::string(op) + ": invalid complex: " + r.summary());
}

// Every slot of the (n+1)x(n+1) grid, including empty ones, so tables list zeros.
std::vector<Bidegree> grid(const Bicomplex& b) {
  std::vector<Bidegree> out;
  for (int p = 0; p <= b.n(); ++p)
    for (int q = 0; q <= b.n(); ++q) out.push_back({p, q});
  return out;
}

Subspace kernel_of(const GradedOperator& g, const BigradedSpace& s, Bidegree slot) {
  return kernel_basis(g.block_or_zero(s, slot));
}

Subspace image_into(const GradedOperator& g, const BigradedSpace& s, Bidegree slot) {
  Bidegree src{slot.p - g.shift().dp, slot.q - g.shift().dq};
  if (src.p < 0 || src.q < 0) return Subspace(s.dim(slot));
  return image_basis(g.block_or_zero(s, src));
}

}  // namespace

SlotSubspaces slot_subspaces(const Bicomplex& b, Bidegree slot) {
  const auto& s = b.space;
  SlotSubspaces out;
  out.ker_delbar = kernel_of(b.delbar, s, slot);
  out.im_delbar = image_into(b.delbar, s, slot);
  if (b.has_del) {
    GradedOperator dd = op_compose(b.del, b.delbar);
    out.ker_del = kernel_of(b.del, s, slot);
    out.im_del = image_into(b.del, s, slot);
    out.ker_deldelbar = kernel_of(dd, s, slot);
    out.im_deldelbar = image_into(dd, s, slot);
  }
  return out;
}

CohomologyTable dolbeault(const Bicomplex& b) {
  require_valid(b, "dolbeault");
  CohomologyTable t{Flavor::dolbeault, {}, {}};
  for (auto slot : grid(b)) {
    auto ss = slot_subspaces(b, slot);
    t.slots.emplace(slot, Quotient(ss.ker_delbar, ss.im_delbar));
  }
  return t;
}

CohomologyTable anti_dolbeault(const Bicomplex& b) {
  b.require_del("anti_dolbeault");
  require_valid(b, "anti_dolbeault");
  CohomologyTable t{Flavor::anti_dolbeault, {}, {}};
  for (auto slot : grid(b)) {
    auto ss = slot_subspaces(b, slot);
    t.slots.emplace(slot, Quotient(ss.ker_del, ss.im_del));
  }
  return t;
}

CohomologyTable derham(const Bicomplex& b) {
  b.require_del("derham");
  require_valid(b, "derham");
  TotalComplex tc = total_differential(b);
  CohomologyTable t{Flavor::derham, {}, {}};
  for (int k = 0; k <= tc.top_degree; ++k) {
    Subspace ker = kernel_basis(tc.d(k));
    Subspace im = k == 0 ? Subspace(tc.dim(0)) : image_basis(tc.d(k - 1));
    t.degrees.emplace(k, Quotient(ker, im));
  }
  return t;
}

CohomologyTable bott_chern(const Bicomplex& b) {
  b.require_del("bott_chern");
  require_valid(b, "bott_chern");
  CohomologyTable t{Flavor::bott_chern, {}, {}};
  for (auto slot : grid(b)) {
    auto ss = slot_subspaces(b, slot);
    t.slots.emplace(slot, Quotient(subspace_intersect(ss.ker_del, ss.ker_delbar), ss.im_deldelbar));
  }
  return t;
}

CohomologyTable aeppli(const Bicomplex& b) {
  b.require_del("aeppli");
  require_valid(b, "aeppli");
  CohomologyTable t{Flavor::aeppli, {}, {}};
  for (auto slot : grid(b)) {
    auto ss = slot_subspaces(b, slot);
    t.slots.emplace(slot, Quotient(ss.ker_deldelbar, subspace_sum(ss.im_del, ss.im_delbar)));
  }
  return t;
}

AbcGroups abc_groups(const Bicomplex& b) {
  b.require_del("abc_groups");
  require_valid(b, "abc_groups");
  AbcGroups g{{Flavor::A, {}, {}}, {Flavor::B, {}, {}}, {Flavor::C, {}, {}}, {Flavor::C_cokernel, {}, {}}};
  for (auto slot : grid(b)) {
    auto ss = slot_subspaces(b, slot);
    g.A.slots.emplace(slot, Quotient(subspace_intersect(ss.im_del, ss.im_delbar), ss.im_deldelbar));
    g.B.slots.emplace(slot, Quotient(subspace_intersect(ss.im_del, ss.ker_delbar), ss.im_deldelbar));
    g.C.slots.emplace(slot, Quotient(ss.ker_deldelbar, subspace_sum(ss.im_del, ss.im_delbar)));
    g.C_cokernel.slots.emplace(slot, Quotient(ss.ker_deldelbar, subspace_sum(ss.ker_delbar, ss.im_del)));
  }
  CohomologyTable a = aeppli(b);
  for (const auto& [slot, q] : g.C.slots) {
    const auto& qa = a.slots.at(slot);
    if (!(q.numerator() == qa.numerator() && q.denominator() == qa.denominator()))
      throw InternalError("C and Aeppli groups differ on slot (" + slot.str() + ")");
  }
  return g;
}

bool exact_at(const ExactMatrix& in, const ExactMatrix& out, std::size_t dim) {
  if (in.rows() != dim || out.cols() != dim) throw DimensionMismatch("exact_at: maps do not meet at the node");
  if (!(out * in).is_zero()) return false;
  return rank(in) + rank(out) == dim;
}

std::string FiveTermReport::summary() const {
  std::ostringstream os;
  os << (exact ? "exact" : "NOT exact") << " on " << slots.size() << " slots";
  std::size_t printed_failures = 0;
  for (const auto& s : slots) printed_failures += s.exact_with_printed_c ? 0 : 1;
  if (printed_failures)
    os << "; with C = ker(del delbar)/(im del + im delbar) exactness would fail on " << printed_failures
       << " slots, the closing term is ker(del delbar)/(ker delbar + im del)";
  return os.str();
}

FiveTermReport verify_five_term(const Bicomplex& b) {
  AbcGroups g = abc_groups(b);
  CohomologyTable h = dolbeault(b);
  CohomologyTable ha = aeppli(b);
  FiveTermReport report;
  for (auto slot : grid(b)) {
    const std::size_t n = b.space.dim(slot);
    ExactMatrix id = ExactMatrix::identity(n);
    const auto& qa = g.A.slots.at(slot);
    const auto& qb = g.B.slots.at(slot);
    const auto& qh = h.slots.at(slot);
    const auto& qae = ha.slots.at(slot);
    const auto& qc = g.C_cokernel.slots.at(slot);
    const auto& qcp = g.C.slots.at(slot);
    ExactMatrix ab, bh, hae, aec, aecp;
    try {
      ab = induced_quotient_map(id, qa, qb);
      bh = induced_quotient_map(id, qb, qh);
      hae = induced_quotient_map(id, qh, qae);
      aec = induced_quotient_map(id, qae, qc);
      aecp = induced_quotient_map(id, qae, qcp);
    } catch (const PreconditionError& e) {
      throw InternalError("five-term sequence map ill-defined on slot (" + slot.str() + "): " + e.what());
    }
    FiveTermSlot s;
    s.slot = slot;
    s.dims = {qa.dim(), qb.dim(), qh.dim(), qae.dim(), qc.dim()};
    s.ranks = {rank(ab), rank(bh), rank(hae), rank(aec)};
    ExactMatrix zero_in(qa.dim(), 0);
    ExactMatrix zero_out_c(0, qc.dim()), zero_out_cp(0, qcp.dim());
    s.exact = exact_at(zero_in, ab, qa.dim()) && exact_at(ab, bh, qb.dim()) && exact_at(bh, hae, qh.dim()) &&
              exact_at(hae, aec, qae.dim()) && exact_at(aec, zero_out_c, qc.dim());
    s.exact_with_printed_c = exact_at(hae, aecp, qae.dim()) && exact_at(aecp, zero_out_cp, qcp.dim());
    report.exact = report.exact && s.exact;
    report.slots.push_back(s);
    if (!s.exact) {
      std::ostringstream os;
      os << "five-term sequence not exact on slot (" << slot.str() << "): dims A,B,H,H_A,C = " << s.dims[0] << ","
         << s.dims[1] << "," << s.dims[2] << "," << s.dims[3] << "," << s.dims[4] << "; ranks " << s.ranks[0] << ","
         << s.ranks[1] << "," << s.ranks[2] << "," << s.ranks[3];
      throw InternalError(os.str());
    }
  }
  return report;
}

bool FrolicherReport::equality_everywhere() const {
  for (const auto& r : rows)
    if (r.slack() != 0) return false;
  return true;
}

FrolicherReport frolicher_check(const Bicomplex& b) {
  CohomologyTable dr = derham(b);
  CohomologyTable h = dolbeault(b);
  FrolicherReport rep;
  for (int k = 0; k <= 2 * b.n(); ++k) {
    FrolicherRow row;
    row.k = k;
    row.betti = dr.dim(k);
    for (int p = 0; p <= k; ++p) row.hodge_sum += h.dim(Bidegree{p, k - p});
    if (row.betti > row.hodge_sum)
      throw InternalError("Frolicher inequality violated at k = " + std::to_string(k) + ": b_k = " +
                          std::to_string(row.betti) + " > " + std::to_string(row.hodge_sum));
    rep.rows.push_back(row);
  }
  return rep;
}

DualityReport duality_report(const Bicomplex& b, int n) {
  CohomologyTable bc = bott_chern(b);
  CohomologyTable ae = aeppli(b);
  DualityReport rep;
  rep.n = n;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      DualityPair pair{{p, q}, bc.dim(Bidegree{p, q}), ae.dim(Bidegree{n - p, n - q})};
      if (!pair.matched()) {
        rep.warnings.push_back("WARNING: dim H_BC^{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
                               std::to_string(pair.bc_dim) + " but dim H_A^{" + std::to_string(n - p) + "," +
                               std::to_string(n - q) + "} = " + std::to_string(pair.aeppli_dim));
      }
      rep.pairs.push_back(pair);
    }
  return rep;
}

namespace {

NaturalMap make_map(std::string name, std::string src, std::string dst, const ExactMatrix& t, const Quotient& a,
                    const Quotient& b) {
  NaturalMap m;
  m.name = std::move(name);
  m.source_key = std::move(src);
  m.target_key = std::move(dst);
  try {
    m.matrix = induced_quotient_map(t, a, b);
  } catch (const PreconditionError& e) {
    throw InternalError(m.name + " on " + m.source_key + " is ill-defined: " + e.what());
  }
  m.rank = rank(m.matrix);
  m.kernel_dim = a.dim() - m.rank;
  m.cokernel_dim = b.dim() - m.rank;
  return m;
}

}  // namespace

std::vector<NaturalMap> natural_maps(const Bicomplex& b) {
  CohomologyTable bc = bott_chern(b), hd = anti_dolbeault(b), hdb = dolbeault(b), dr = derham(b), ae = aeppli(b);
  TotalComplex tc = total_differential(b);
  std::vector<NaturalMap> out;
  for (auto slot : grid(b)) {
    const std::string key = slot.str(), kkey = std::to_string(slot.total());
    ExactMatrix id = ExactMatrix::identity(b.space.dim(slot));
    ExactMatrix emb = tc.embedding(b.space, slot);
    const auto& qk = dr.degrees.at(slot.total());
    out.push_back(make_map("BC->del", key, key, id, bc.slots.at(slot), hd.slots.at(slot)));
    out.push_back(make_map("BC->delbar", key, key, id, bc.slots.at(slot), hdb.slots.at(slot)));
    out.push_back(make_map("BC->dR", key, kkey, emb, bc.slots.at(slot), qk));
    out.push_back(make_map("del->A", key, key, id, hd.slots.at(slot), ae.slots.at(slot)));
    out.push_back(make_map("delbar->A", key, key, id, hdb.slots.at(slot), ae.slots.at(slot)));
    out.push_back(make_map("dR->A", kkey, key, emb.transpose(), qk, ae.slots.at(slot)));
  }
  return out;
}

long euler_characteristic(const BigradedSpace& space) {
  long chi = 0;
  for (auto b : space.bidegrees()) chi += (b.total() % 2 ? -1L : 1L) * static_cast<long>(space.dim(b));
  return chi;
}

long euler_characteristic(const CohomologyTable& t) {
  long chi = 0;
  for (const auto& [k, q] : t.degrees) chi += (k % 2 ? -1L : 1L) * static_cast<long>(q.dim());
  return chi;
}

}  // namespace hodgekit
