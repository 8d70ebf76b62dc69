#include "usc/raster.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "union_find.h"
#include "usc/error.h"

namespace usc {

namespace {

constexpr int kBits = 9;
constexpr std::uint64_t kMask = (1u << kBits) - 1;

int grid_k(const Rational& step) {
  const Rational inv = Rational(1) / step;
  if (inv.mpq().get_den() != 1 || inv < Rational(8) || inv > Rational(256)) {
    throw Error(ErrorCode::kInvalidArgument, "raster step must be 1/k with 8 <= k <= 256");
  }
  return static_cast<int>(inv.mpq().get_num().get_si());
}

void finish(Raster& r) {
  std::sort(r.bits.begin(), r.bits.end());
  r.bits.erase(std::unique(r.bits.begin(), r.bits.end()), r.bits.end());
}

}  // namespace

std::uint64_t pack_index(const std::vector<int>& index) {
  std::uint64_t key = 0;
  for (int v : index) key = (key << kBits) | static_cast<std::uint64_t>(v);
  return key;
}

std::vector<int> unpack_index(std::uint64_t key, std::size_t dim) {
  std::vector<int> out(dim);
  for (std::size_t i = dim; i-- > 0;) {
    out[i] = static_cast<int>(key & kMask);
    key >>= kBits;
  }
  return out;
}

bool Raster::marked(const std::vector<int>& index) const {
  return std::binary_search(bits.begin(), bits.end(), pack_index(index));
}

Raster raster_oracle(const Relation& r, const Rational& step) {
  Raster out;
  out.step = step;
  out.k = grid_k(step);
  out.dim = 2;
  const int k = out.k;
  for (const auto& piece : r.pieces()) {
    // Only squares inside the bounding box of the piece can meet it.
    const auto lo = [&](const Rational& v) {
      return std::max(0, static_cast<int>(std::floor((v * Rational(k)).to_double())) - 1);
    };
    const auto hi = [&](const Rational& v) {
      return std::min(k - 1, static_cast<int>(std::floor((v * Rational(k)).to_double())) + 1);
    };
    const Interval xe = piece.x_extent(), ye = piece.y_extent();
    for (int i = lo(xe.lo()); i <= hi(xe.hi()); ++i) {
      for (int j = lo(ye.lo()); j <= hi(ye.hi()); ++j) {
        const Piece square = Piece::rect(Interval(Rational(i, k), Rational(i + 1, k)),
                                         Interval(Rational(j, k), Rational(j + 1, k)));
        if (piece_intersects(piece, square)) out.bits.push_back(pack_index({i, j}));
      }
    }
  }
  finish(out);
  return out;
}

GridTable grid_table(const Relation& r, int k, RasterMode mode) {
  GridTable t(k + 1, std::vector<char>(k + 1, 0));
  if (mode == RasterMode::kGridPoints) {
    for (int u = 0; u <= k; ++u) {
      for (int v = 0; v <= k; ++v) {
        const Point p{Rational(u, k), Rational(v, k)};
        for (const auto& piece : r.pieces()) {
          if (piece.contains(p)) {
            t[u][v] = 1;
            break;
          }
        }
      }
    }
    return t;
  }
  // Square (a, b) is within one step of grid point (u, v) iff
  // a in [u-2, u+1] and b in [v-2, v+1].
  const Raster squares = raster_oracle(r, Rational(1, k));
  for (std::uint64_t key : squares.bits) {
    const auto ab = unpack_index(key, 2);
    for (int u = std::max(0, ab[0] - 1); u <= std::min(k, ab[0] + 2); ++u) {
      for (int v = std::max(0, ab[1] - 1); v <= std::min(k, ab[1] + 2); ++v) t[u][v] = 1;
    }
  }
  return t;
}

GridTable grid_transpose(const GridTable& t) {
  GridTable out(t.size(), std::vector<char>(t.size(), 0));
  for (std::size_t u = 0; u < t.size(); ++u) {
    for (std::size_t v = 0; v < t.size(); ++v) out[v][u] = t[u][v];
  }
  return out;
}

GridTable grid_compose(const GridTable& second, const GridTable& first) {
  const std::size_t m = first.size();
  GridTable out(m, std::vector<char>(m, 0));
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = 0; w < m; ++w) {
      if (!first[u][w]) continue;
      for (std::size_t v = 0; v < m; ++v) out[u][v] |= second[w][v];
    }
  }
  return out;
}

GridTable grid_power(const GridTable& t, int m) {
  GridTable out = t;
  for (int i = 1; i < m; ++i) out = grid_compose(t, out);
  return out;
}

Raster raster_product(int k, std::size_t dim, const std::vector<PairTable>& constraints,
                      const std::vector<std::size_t>& keep, RasterMode mode) {
  if (dim == 0 || dim > 4) throw Error(ErrorCode::kInvalidArgument, "raster dimension must be 1..4");
  Raster out;
  out.step = Rational(1, k);
  out.k = k;
  out.dim = keep.size();
  out.mode = mode;
  // Constraints checked once both coordinates are assigned.
  std::vector<std::vector<const PairTable*>> ready(dim);
  for (const auto& c : constraints) ready[std::max(c.input, c.output)].push_back(&c);

  std::vector<int> tuple(dim), projected(keep.size());
  std::function<void(std::size_t)> visit = [&](std::size_t d) {
    if (d == dim) {
      for (std::size_t i = 0; i < keep.size(); ++i) projected[i] = tuple[keep[i]];
      out.bits.push_back(pack_index(projected));
      return;
    }
    for (int v = 0; v <= k; ++v) {
      tuple[d] = v;
      bool ok = true;
      for (const PairTable* c : ready[d]) {
        if (!c->table[tuple[c->input]][tuple[c->output]]) {
          ok = false;
          break;
        }
      }
      if (ok) visit(d + 1);
    }
  };
  visit(0);
  finish(out);
  return out;
}

Raster raster_chain(const Relation& f, std::size_t n, Semantics semantics,
                    const std::vector<std::size_t>& keep, int k, RasterMode mode) {
  const GridTable base = grid_table(f, k, mode);
  std::vector<GridTable> powers{base};
  std::vector<PairTable> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (semantics == Semantics::kConsecutive && j != i + 1) continue;
      while (powers.size() < j - i) powers.push_back(grid_compose(base, powers.back()));
      constraints.push_back({i, j, powers[j - i - 1]});
    }
  }
  return raster_product(k, n, constraints, keep, mode);
}

Raster raster_oracle(const GSet& g, const Rational& step, RasterMode mode) {
  const int k = grid_k(step);
  if (!g.source) return raster_product(k, 1, {}, {0}, mode);
  const ChainSystem& s = *g.source;
  if (s.size() > 4) throw Error(ErrorCode::kInvalidArgument, "raster oracle supports chains of length <= 4");
  if (s.is_single()) return raster_chain(s.base(), s.size(), g.built_with, g.coordinates, k, mode);
  std::vector<PairTable> constraints;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.built_with == Semantics::kConsecutive && j != i + 1) continue;
      constraints.push_back({i, j, grid_table(s.bond(i, j), k, mode)});
    }
  }
  return raster_product(k, s.size(), constraints, g.coordinates, mode);
}

int raster_components(const Raster& r) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < r.bits.size(); ++i) index.emplace(r.bits[i], i);
  internal::UnionFind uf(r.bits.size());
  for (std::size_t i = 0; i < r.bits.size(); ++i) {
    auto cell = unpack_index(r.bits[i], r.dim);
    for (std::size_t d = 0; d < r.dim; ++d) {
      ++cell[d];
      auto it = index.find(pack_index(cell));
      if (it != index.end()) uf.unite(i, it->second);
      --cell[d];
    }
  }
  return static_cast<int>(uf.groups().size());
}

bool raster_near(const Raster& r, const std::vector<Rational>& point) {
  if (point.size() != r.dim) throw Error(ErrorCode::kDimensionMismatch, "point dimension");
  // Candidate indices per coordinate: floor and ceil of point * k, widened by one.
  std::vector<std::vector<int>> options(r.dim);
  for (std::size_t d = 0; d < r.dim; ++d) {
    const Rational scaled = point[d] * Rational(r.k);
    const mpz_class fl = scaled.mpq().get_num() / scaled.mpq().get_den();
    const int base = static_cast<int>(fl.get_si());
    for (int v = base - 1; v <= base + 1; ++v) {
      if (v >= 0 && v <= r.k) options[d].push_back(v);
    }
  }
  std::vector<int> idx(r.dim);
  std::function<bool(std::size_t)> search = [&](std::size_t d) {
    if (d == r.dim) return r.marked(idx);
    for (int v : options[d]) {
      idx[d] = v;
      if (search(d + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace usc
