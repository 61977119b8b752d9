#include "hodgekit/random_complex.hpp"

#include "hodgekit/errors.hpp"

namespace hodgekit {

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t k = m.rows();
  RowEchelon e = rref(hstack(m, ExactMatrix::identity(k)));
  if (e.pivots.size() < k || (k > 0 && e.pivots[k - 1] >= k)) throw DegenerateSystem("matrix is singular");
  ExactMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r, c) = e.reduced(r, k + c);
  return out;
}

namespace {

struct Piece {
  std::vector<Bidegree> cells;
  // (source cell index, target cell index, coefficient) for del and delbar.
  std::vector<std::tuple<int, int, int>> del, delbar;
};

std::vector<Piece> shapes(bool has_del) {
  std::vector<Piece> out;
  out.push_back({{{0, 0}}, {}, {}});
  out.push_back({{{0, 0}, {0, 1}}, {}, {{0, 1, 1}}});
  if (!has_del) return out;
  out.push_back({{{0, 0}, {1, 0}}, {{0, 1, 1}}, {}});
  // a -> del a, delbar a.
  out.push_back({{{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 1}}, {{0, 2, 1}}});
  // b, c -> e with delbar b = e, del c = e.
  out.push_back({{{1, 0}, {0, 1}, {1, 1}}, {{1, 2, 1}}, {{0, 2, 1}}});
  // Square: del a = b, delbar a = c, delbar b = e, del c = -e.
  out.push_back({{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 1}, {2, 3, -1}}, {{0, 2, 1}, {1, 3, 1}}});
  return out;
}

GaussianRational random_entry(std::mt19937_64& rng, int bound, bool gaussian) {
  std::uniform_int_distribution<int> d(-bound, bound);
  long re = d(rng);
  long im = gaussian ? d(rng) : 0;
  return GaussianRational(mpq_class(re), mpq_class(im));
}

// Product of random unit lower and unit upper triangular matrices.
ExactMatrix random_invertible(std::mt19937_64& rng, std::size_t k, int bound, bool gaussian) {
  ExactMatrix l = ExactMatrix::identity(k), u = ExactMatrix::identity(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      l(r, c) = random_entry(rng, bound, gaussian);
      u(c, r) = random_entry(rng, bound, gaussian);
    }
  return l * u;
}

}  // namespace

Bicomplex random_bicomplex(std::mt19937_64& rng, const RandomBicomplexOptions& opts) {
  if (opts.n < 1) throw InvalidModel("random bicomplex needs n >= 1");
  const auto catalog = shapes(opts.has_del);
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);

  std::map<Bidegree, std::size_t> dims;
  struct Entry {
    Bidegree src, tgt;
    std::size_t row, col;
    int coeff;
  };
  std::vector<Entry> del_entries, delbar_entries;
  for (int i = 0; i < opts.pieces; ++i) {
    const Piece& piece = catalog[pick(rng)];
    int span_p = 0, span_q = 0;
    for (auto c : piece.cells) {
      span_p = std::max(span_p, c.p);
      span_q = std::max(span_q, c.q);
    }
    if (span_p > opts.n || span_q > opts.n) continue;
    std::uniform_int_distribution<int> dp(0, opts.n - span_p), dq(0, opts.n - span_q);
    Shift at{dp(rng), dq(rng)};
    std::vector<std::pair<Bidegree, std::size_t>> placed;
    for (auto c : piece.cells) {
      Bidegree b = c + at;
      placed.emplace_back(b, dims[b]++);
    }
    for (auto [s, t, k] : piece.del)
      del_entries.push_back({placed[s].first, placed[t].first, placed[t].second, placed[s].second, k});
    for (auto [s, t, k] : piece.delbar)
      delbar_entries.push_back({placed[s].first, placed[t].first, placed[t].second, placed[s].second, k});
  }

  BigradedSpace space(opts.n);
  std::map<Bidegree, ExactMatrix> change, change_inv;
  for (const auto& [b, k] : dims) {
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < k; ++j) labels.push_back("r(" + b.str() + ")_" + std::to_string(j));
    space.add_slot(b, std::move(labels));
    change[b] = random_invertible(rng, k, opts.max_entry, opts.gaussian);
    change_inv[b] = inverse(change[b]);
  }

  auto assemble = [&](const std::vector<Entry>& entries, Shift shift, Parity parity) {
    std::map<Bidegree, ExactMatrix> raw;
    for (const auto& e : entries) {
      auto it = raw.try_emplace(e.src, dims[e.tgt], dims[e.src]).first;
      it->second(e.row, e.col) = e.coeff;
    }
    GradedOperator g(shift, parity);
    for (auto& [src, m] : raw) g.set_block(src, change[src + shift] * m * change_inv[src]);
    return g;
  };
  Bicomplex bc{space, assemble(del_entries, {1, 0}, Parity::odd), assemble(delbar_entries, {0, 1}, Parity::odd),
               opts.has_del};
  auto report = validate(bc);
  if (!report.ok) throw InternalError("random bicomplex failed validation: " + report.summary());
  return bc;
}

}  // namespace hodgekit
