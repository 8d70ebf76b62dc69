#include "usc/mahavier.h"

#include <algorithm>
#include <sstream>

#include "union_find.h"
#include "usc/coverage.h"
#include "usc/error.h"
#include "usc/projection.h"

namespace usc {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("b" + std::to_string(i));
  return out;
}

}  // namespace

ChainSystem ChainSystem::single(const Relation& f, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "chain needs at least two labels");
  ChainSystem s;
  s.labels_ = default_labels(n);
  s.base_ = f;
  std::vector<Relation> powers{f};
  for (std::size_t k = 2; k < n; ++k) {
    powers.push_back(compose(f, powers.back()).renamed(f.name() + "^" + std::to_string(k)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s.bonds_.emplace(std::make_pair(i, j), powers[j - i - 1]);
  }
  return s;
}

ChainSystem ChainSystem::table(std::size_t n, BondTable bonds) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "chain needs at least two labels");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!bonds.count({i, j})) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bonding table misses pair (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")");
      }
    }
  }
  for (const auto& [key, rel] : bonds) {
    if (key.first >= key.second || key.second >= n) {
      throw Error(ErrorCode::kInvalidArgument, "bonding table has an invalid pair");
    }
  }
  ChainSystem s;
  s.labels_ = default_labels(n);
  s.bonds_ = std::move(bonds);
  return s;
}

const Relation& ChainSystem::bond(std::size_t i, std::size_t j) const {
  auto it = bonds_.find({i, j});
  if (it == bonds_.end()) throw Error(ErrorCode::kInvalidArgument, "no bond for pair");
  return it->second;
}

ChainSystem ChainSystem::restrict_to(const std::vector<std::size_t>& indices) const {
  BondTable t;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      t.emplace(std::make_pair(a, b), bond(indices[a], indices[b]));
    }
  }
  ChainSystem s = table(indices.size(), std::move(t));
  for (std::size_t a = 0; a < indices.size(); ++a) s.labels_[a] = labels_[indices[a]];
  return s;
}

const char* semantics_name(Semantics s) {
  return s == Semantics::kConsecutive ? "consecutive" : "all-pairs";
}

const char* cordiality_status_name(CordialityStatus s) {
  switch (s) {
    case CordialityStatus::kEqual: return "EQUAL";
    case CordialityStatus::kStrictSubset: return "STRICT_SUBSET";
    case CordialityStatus::kNotContained: return "NOT_CONTAINED";
  }
  return "?";
}

ExactnessResult exactness_check(const ChainSystem& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!equal(compose(s.bond(i, j), s.bond(j, k)), s.bond(i, k)).value) {
          return {false, std::array<std::size_t, 3>{i, j, k}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool same_point_set(const Cell& a, const Cell& b) {
  return cell_contains(a, b) && cell_contains(b, a);
}

void add_unique(std::vector<Cell>& cells, Cell c) {
  for (const auto& existing : cells) {
    if (existing == c || same_point_set(existing, c)) return;
  }
  cells.push_back(std::move(c));
}

struct Builder {
  std::size_t dim;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j), i < j
  std::vector<const Relation*> relations;
  std::vector<Cell> leaves;

  void descend(std::size_t depth, const std::vector<LinearConstraint>& prefix) {
    if (depth == pairs.size()) {
      leaves.emplace_back(dim, prefix);
      return;
    }
    const auto [i, j] = pairs[depth];
    for (const auto& piece : relations[depth]->pieces()) {
      auto next = prefix;
      // input coordinate x_j first, output x_i second
      auto extra = piece_constraints(piece, dim, j, i);
      for (auto& c : extra) {
        if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(std::move(c));
      }
      if (extra.empty() || next.size() == prefix.size() ||
          CellLp(Cell(dim, next)).feasible()) {
        descend(depth + 1, next);
      }
    }
  }
};

}  // namespace

GSet build_gset(std::shared_ptr<const ChainSystem> s, Semantics semantics) {
  const std::size_t n = s->size();
  Builder b{n, {}, {}, {}};
  if (semantics == Semantics::kConsecutive) {
    for (std::size_t i = 0; i + 1 < n; ++i) b.pairs.emplace_back(i, i + 1);
  } else {
    // Short spans first: they prune the most.
    for (std::size_t span = 1; span < n; ++span) {
      for (std::size_t i = 0; i + span < n; ++i) b.pairs.emplace_back(i, i + span);
    }
  }
  for (const auto& [i, j] : b.pairs) b.relations.push_back(&s->bond(i, j));
  b.descend(0, {});

  GSet g;
  g.dim = n;
  g.semantics = semantics;
  g.built_with = semantics;
  g.source = std::move(s);
  for (std::size_t i = 0; i < n; ++i) g.coordinates.push_back(i);
  for (auto& leaf : b.leaves) add_unique(g.cells, std::move(leaf));
  return g;
}

GSet build_gset(const ChainSystem& s, Semantics semantics) {
  return build_gset(std::make_shared<const ChainSystem>(s), semantics);
}

GSet k_set(const Relation& f, std::size_t n) {
  return build_gset(ChainSystem::single(f, n), Semantics::kConsecutive);
}

Connectivity gset_connected(const GSet& g) {
  internal::UnionFind uf(g.cells.size());
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < g.cells.size(); ++j) {
      if (uf.find(i) == uf.find(j)) continue;
      if (cell_feasible(g.cells[i].intersect(g.cells[j]))) uf.unite(i, j);
    }
  }
  Connectivity out;
  out.groups = uf.groups();
  out.components = static_cast<int>(out.groups.size());
  out.connected = out.components == 1;
  return out;
}

std::size_t maximal_cell_count(const GSet& g) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < g.cells.size() && !inside; ++j) {
      if (i != j && cell_contains(g.cells[j], g.cells[i])) inside = true;
    }
    if (!inside) ++count;
  }
  return count;
}

GSet project_gset(const GSet& g, const std::vector<std::size_t>& keep) {
  GSet out;
  out.dim = keep.size();
  out.semantics = Semantics::kAllPairs;
  out.source = g.source;
  out.built_with = g.built_with;
  for (std::size_t k : keep) out.coordinates.push_back(g.coordinates.at(k));
  for (const auto& c : g.cells) {
    Cell p = fm_project(c, keep);
    if (cell_feasible(p)) add_unique(out.cells, std::move(p));
  }
  return out;
}

SetComparison gset_equal(const GSet& a, const GSet& b) {
  if (a.dim != b.dim) throw Error(ErrorCode::kDimensionMismatch, "G-sets of different dimension");
  for (const auto& c : a.cells) {
    auto r = cell_in_union(c, b.cells);
    if (!r.covered) return {false, r.witness, true};
  }
  for (const auto& c : b.cells) {
    auto r = cell_in_union(c, a.cells);
    if (!r.covered) return {false, r.witness, false};
  }
  return {true, std::nullopt, false};
}

GSet reverse_gset(const GSet& g) {
  GSet out = g;
  for (auto& c : out.cells) c = c.reversed();
  std::reverse(out.coordinates.begin(), out.coordinates.end());
  return out;
}

GSet direct_gset(const ChainSystem& s, const std::vector<std::size_t>& subset) {
  if (subset.size() == 1) {
    GSet g;
    g.dim = 1;
    g.semantics = Semantics::kAllPairs;
    g.built_with = Semantics::kAllPairs;
    g.cells.emplace_back(1);
    g.coordinates = {0};
    return g;
  }
  return build_gset(s.restrict_to(subset), Semantics::kAllPairs);
}

std::vector<std::vector<std::size_t>> proper_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<CordialityEntry> cordiality_report(const Relation& f, std::size_t n,
                                               std::vector<std::vector<std::size_t>> subsets) {
  const auto system = std::make_shared<const ChainSystem>(ChainSystem::single(f, n));
  const GSet k = build_gset(system, Semantics::kConsecutive);
  if (subsets.empty()) subsets = proper_subsets(n);

  std::vector<CordialityEntry> out;
  for (auto& subset : subsets) {
    const GSet projected = project_gset(k, subset);
    const GSet direct = direct_gset(*system, subset);
    CordialityEntry e;
    e.subset = subset;
    for (const auto& c : projected.cells) {
      auto r = cell_in_union(c, direct.cells);
      if (!r.covered) {
        e.status = CordialityStatus::kNotContained;
        e.witness = r.witness;
        break;
      }
    }
    if (e.status == CordialityStatus::kEqual) {
      for (const auto& c : direct.cells) {
        auto r = cell_in_union(c, projected.cells);
        if (!r.covered) {
          e.status = CordialityStatus::kStrictSubset;
          e.witness = r.witness;
          break;
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

Verdict certify_continuum(const Relation& f, int max_n,
                          const std::optional<std::vector<std::vector<std::size_t>>>& decomposition) {
  Verdict v;
  const auto surj = is_surjective(f);
  if (!surj.value) {
    v.kind = VerdictKind::kRejected;
    v.reason = "NOT_SURJECTIVE";
    v.evidence = "no preimage of y=" + surj.witness->str();
    v.witnesses.push_back({"uncovered y", {*surj.witness}});
    return v;
  }

  const auto comps = graph_components(f);
  if (comps.count > 1) {
    v.kind = VerdictKind::kDisconnected;
    v.n = 2;
    v.components = comps.count;
    v.evidence = "disconnected-graph criterion: the graph has " + std::to_string(comps.count) +
                 " components, so K(2) and the inverse limit are disconnected";
    for (const auto& group : comps.groups) {
      const Point p = f.pieces()[group.front()].vertices().front();
      v.witnesses.push_back({"graph component point (x,y)", {p.x, p.y}});
    }
    return v;
  }

  const auto cv = is_continuum_valued(f);
  if (cv.value) {
    v.kind = VerdictKind::kCertifiedAllN;
    v.evidence = "continuum-valued route: every value f(x) is an interval and the graph is connected";
    return v;
  }

  std::string notes = "not continuum-valued (value at x=" + cv.witness->str() + " is disconnected)";
  if (decomposition) {
    const Verdict nall = verify_nall_decomposition(f, *decomposition);
    const auto idem = is_idempotent(f);
    if (nall.kind == VerdictKind::kCertifiedAllN && idem.value) {
      v.kind = VerdictKind::kCertifiedAllN;
      v.evidence = "decomposition route: " + nall.evidence +
                   "; f is idempotent so K(n) = G(n) for every n";
      return v;
    }
    notes += "; decomposition not accepted (" +
             (nall.kind == VerdictKind::kCertifiedAllN ? std::string("f is not idempotent")
                                                        : nall.label() + ": " + nall.evidence) +
             ")";
  }

  for (int n = 2; n <= max_n; ++n) {
    const GSet k = k_set(f, static_cast<std::size_t>(n));
    const auto conn = gset_connected(k);
    if (!conn.connected) {
      v.kind = VerdictKind::kDisconnected;
      v.n = n;
      v.components = conn.components;
      v.evidence = notes + "; K(" + std::to_string(n) + ") has " +
                   std::to_string(conn.components) + " components";
      for (const auto& group : conn.groups) {
        auto w = cell_feasible(k.cells[group.front()]);
        v.witnesses.push_back({"component point", *w});
      }
      return v;
    }
  }
  v.kind = VerdictKind::kConnectedUpToN;
  v.n = max_n;
  v.evidence = notes + "; K(n) connected for n = 2.." + std::to_string(max_n) +
               " (finite check, not a certificate)";
  return v;
}

}  // namespace usc
