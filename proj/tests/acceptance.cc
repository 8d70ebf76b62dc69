// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Exact verdicts are cross-checked against brute-force grid oracles.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "usc/cli/relation_io.h"
#include "usc/cli/svg.h"
#include "usc/coverage.h"
#include "usc/gallery.h"
#include "usc/mahavier.h"
#include "usc/raster.h"

namespace {

using namespace usc;
using Groups = std::vector<std::vector<std::size_t>>;

constexpr int kGrid = 64;

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const std::vector<Rational>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

std::vector<Relation> idempotent_surjective_gallery() {
  std::vector<Relation> out;
  for (const auto& e : catalog()) {
    if (e.flags.idempotent && e.flags.surjective) out.push_back(make_example(e.name));
  }
  return out;
}

// Grid oracle for the direct G-set of f on a sub-chain: all pairs, with
// pair tables given by grid powers of f.
Raster grid_direct(const Relation& f, const std::vector<std::size_t>& subset) {
  const GridTable base = grid_table(f, kGrid, RasterMode::kGridPoints);
  std::vector<PairTable> cs;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      cs.push_back({a, b, grid_power(base, static_cast<int>(subset[b] - subset[a]))});
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < subset.size(); ++i) keep.push_back(i);
  return raster_product(kGrid, subset.size(), cs, keep, RasterMode::kGridPoints);
}

// Grid oracle for K(n) built from an explicit table (consecutive pairs).
Raster grid_k(const GridTable& t, std::size_t n, const std::vector<std::size_t>& keep) {
  std::vector<PairTable> cs;
  for (std::size_t i = 0; i + 1 < n; ++i) cs.push_back({i, i + 1, t});
  return raster_product(kGrid, n, cs, keep, RasterMode::kGridPoints);
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(i);
  return v;
}

bool subset_of(const Raster& a, const Raster& b) {
  return std::includes(b.bits.begin(), b.bits.end(), a.bits.begin(), a.bits.end());
}

// 1. Idempotence of the catalog and of random region instances.
void idempotence(Check& c) {
  for (const char* name : {"id-or-B", "full-on-A-else-B", "down-cone", "up-cone", "mirror", "example-6.1",
                           "example-6.2", "example-6.3"}) {
    c.expect(is_idempotent(make_example(name)).value, std::string(name) + " idempotent");
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Rational a = seed % 2 ? Rational(1, 2) : Rational(1, 3);
    const Relation r = random_lemma44(seed, a, 1 + static_cast<int>(seed % 5));
    c.expect(is_idempotent(r).value, r.name() + " idempotent");
  }
  const auto t = is_idempotent(make_example("tent"));
  c.expect(!t.value && t.witness.has_value(), "tent not idempotent, with witness");
  if (t.witness) {
    // tent(x) = 1 - |2x - 1|; the witness must be in exactly one graph.
    const auto tent = [](const Rational& x) { return Rational(1) - (Rational(2) * x - Rational(1)).abs(); };
    const Point p = *t.witness;
    c.expect((p.y == tent(tent(p.x))) != (p.y == tent(p.x)), "tent witness in symmetric difference");
  }
}

// 2. Idempotence passes to the inverse.
void inverse_idempotence(Check& c) {
  for (const auto& f : idempotent_surjective_gallery()) {
    c.expect(is_idempotent(inverse(f)).value, f.name() + " inverse idempotent");
  }
  c.expect(!is_idempotent(inverse(make_example("tent"))).value, "inverse(tent) not idempotent");
}

// 3. Cordiality of projections, with grid-oracle concordance for criterion 9.
void cordiality(Check& c, Check& oracle) {
  for (const char* name : {"example-6.2", "mirror", "example-6.1"}) {
    const Relation f = make_example(name);
    const auto report = cordiality_report(f, 4);
    c.expect(report.size() == 14, std::string(name) + " has 14 subsets");
    const GridTable t = grid_table(f, kGrid, RasterMode::kGridPoints);
    for (const auto& e : report) {
      const bool exact = e.status == CordialityStatus::kEqual;
      c.expect(exact, std::string(name) + " subset EQUAL");
      const bool grid = grid_k(t, 4, e.subset) == grid_direct(f, e.subset);
      oracle.expect(grid == exact, std::string(name) + " cordiality oracle");
    }
  }
  const Relation zero = make_example("constant-zero");
  const auto r = cordiality_report(zero, 3, {{0, 1}});
  const bool strict = r.size() == 1 && r[0].status == CordialityStatus::kStrictSubset;
  c.expect(strict, "constant-zero {1,2} STRICT_SUBSET");
  if (strict && r[0].witness) {
    const auto& w = *r[0].witness;
    c.expect(w.size() == 2 && w[0] == Rational(0) && w[1] > Rational(0), "witness (0, y) with y > 0: " + str(w));
  } else {
    c.expect(false, "constant-zero witness present");
  }
  const Raster proj = grid_k(grid_table(zero, kGrid, RasterMode::kGridPoints), 3, {0, 1});
  const Raster direct = grid_direct(zero, {0, 1});
  oracle.expect(subset_of(proj, direct) && proj != direct, "constant-zero strict subset on the grid");
  oracle.expect(proj.count() == 1 && proj.marked({0, 0}), "grid projection is the single point (0,0)");
  oracle.expect(direct.count() == kGrid + 1, "grid direct set is {0}x[0,1]");
}

// Sign-pattern oracle: K(n) of the mirror relation is the union of the
// 2^(n-1) lines x_i = x_{i+1} or x_i = 1 - x_{i+1}.
bool mirror_cells_match_patterns(const GSet& k, std::size_t n) {
  const std::size_t patterns = std::size_t{1} << (n - 1);
  if (k.cells.size() != patterns) return false;
  // Endpoints of each pattern's line at x_n = 0 and x_n = 1.
  std::vector<std::array<std::vector<Rational>, 2>> ends(patterns);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    for (long t : {0L, 1L}) {
      std::vector<Rational> x(n);
      x[n - 1] = Rational(t);
      for (std::size_t i = n - 1; i-- > 0;) x[i] = (mask >> i) & 1 ? Rational(1) - x[i + 1] : x[i + 1];
      ends[mask][t] = x;
    }
  }
  // Each cell holds exactly one line and each line lies in exactly one cell.
  std::vector<int> hits(patterns, 0);
  for (const auto& cell : k.cells) {
    int inside = 0;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      if (cell.contains(ends[mask][0]) && cell.contains(ends[mask][1])) {
        ++inside;
        ++hits[mask];
      }
    }
    if (inside != 1) return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// 4. Connectedness of finite products.
void connectedness(Check& c, Check& oracle) {
  const Relation mirror = make_example("mirror");
  for (std::size_t n = 2; n <= 6; ++n) {
    const GSet k = k_set(mirror, n);
    const auto conn = gset_connected(k);
    c.expect(conn.connected, "mirror K(" + std::to_string(n) + ") connected");
    c.expect(k.cells.size() == (std::size_t{1} << (n - 1)) && mirror_cells_match_patterns(k, n),
             "mirror K(" + std::to_string(n) + ") has 2^(n-1) sign-pattern cells, got " +
                 std::to_string(k.cells.size()));
    if (n <= 4) {
      oracle.expect(raster_components(raster_oracle(k)) == conn.components,
                    "mirror K(" + std::to_string(n) + ") flood fill");
    }
  }
  const Relation lemma = make_example("lemma-4.4");
  const GSet k2 = k_set(lemma, 2);
  const auto conn2 = gset_connected(k2);
  c.expect(!conn2.connected && conn2.components == 2, "lemma-4.4 K(2) has 2 components");
  c.expect(certify_continuum(lemma, 5).label() == "DISCONNECTED(2,2)", "lemma-4.4 verdict DISCONNECTED(2,2)");
  oracle.expect(raster_components(raster_oracle(k2)) == 2, "lemma-4.4 K(2) flood fill");

  const GSet k4 = k_set(make_example("example-6.1"), 4);
  c.expect(gset_connected(k4).connected, "example-6.1 K(4) connected");
  c.expect(maximal_cell_count(k4) >= 3,
           "example-6.1 K(4) has >= 3 maximal cells, got " + std::to_string(maximal_cell_count(k4)));
  oracle.expect(raster_components(raster_oracle(k4)) == 1, "example-6.1 K(4) flood fill");
}

// 5. Consecutive and all-pairs products agree for idempotent f.
void consecutive_vs_all_pairs(Check& c, Check& oracle) {
  for (const auto& f : idempotent_surjective_gallery()) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto s = ChainSystem::single(f, n);
      const bool exact =
          gset_equal(build_gset(s, Semantics::kConsecutive), build_gset(s, Semantics::kAllPairs)).equal;
      c.expect(exact, f.name() + " K(" + std::to_string(n) + ") = G(" + std::to_string(n) + ")");
      const bool grid = raster_chain(f, n, Semantics::kConsecutive, iota(n), kGrid, RasterMode::kGridPoints) ==
                        raster_chain(f, n, Semantics::kAllPairs, iota(n), kGrid, RasterMode::kGridPoints);
      oracle.expect(grid == exact, f.name() + " K = G grid oracle n=" + std::to_string(n));
    }
  }
}

// 6. Reversing K_f(n) gives K of the inverse.
void reversal(Check& c, Check& oracle) {
  for (const char* name : {"example-6.2", "example-6.3", "mirror"}) {
    const Relation f = make_example(name);
    const GridTable t = grid_table(f, kGrid, RasterMode::kGridPoints);
    for (std::size_t n = 2; n <= 4; ++n) {
      const bool exact = gset_equal(reverse_gset(k_set(f, n)), k_set(inverse(f), n)).equal;
      c.expect(exact, std::string(name) + " reverse n=" + std::to_string(n));
      std::vector<std::size_t> reversed = iota(n);
      std::reverse(reversed.begin(), reversed.end());
      const bool grid = grid_k(t, n, reversed) == grid_k(grid_transpose(t), n, iota(n));
      oracle.expect(grid == exact, std::string(name) + " reverse grid oracle n=" + std::to_string(n));
    }
  }
}

// 7. Certificates.
void certificates(Check& c) {
  const auto expect_label = [&](const Relation& f, const std::optional<Groups>& g, const std::string& want) {
    const Verdict v = certify_continuum(f, 5, g);
    c.expect(v.label() == want, f.name() + ": " + v.label() + ", want " + want);
  };
  const Relation mirror = make_example("mirror");
  // One group per piece: the diagonal and the anti-diagonal.
  Groups groups;
  for (std::size_t i = 0; i < mirror.pieces().size(); ++i) groups.push_back({i});
  expect_label(mirror, groups, "CERTIFIED_ALL_N");
  expect_label(make_example("example-6.1"), std::nullopt, "CERTIFIED_ALL_N");
  expect_label(make_example("example-6.3"), std::nullopt, "CERTIFIED_ALL_N");
  expect_label(make_example("lemma-4.4"), std::nullopt, "DISCONNECTED(2,2)");
  expect_label(make_example("constant-zero"), std::nullopt, "REJECTED(NOT_SURJECTIVE)");
}

// 8. Exactness of bonding tables.
void exactness(Check& c) {
  const Relation mirror = make_example("mirror");
  const Relation tent = make_example("tent");
  ChainSystem::BondTable constant{{{0, 1}, mirror}, {{1, 2}, mirror}, {{0, 2}, mirror}};
  c.expect(exactness_check(ChainSystem::table(3, constant)).exact, "constant idempotent table exact");
  ChainSystem::BondTable composed{{{0, 1}, tent}, {{1, 2}, tent}, {{0, 2}, compose(tent, tent)}};
  c.expect(exactness_check(ChainSystem::table(3, composed)).exact, "composed tent table exact");
  ChainSystem::BondTable naive{{{0, 1}, tent}, {{1, 2}, tent}, {{0, 2}, tent}};
  const auto r = exactness_check(ChainSystem::table(3, naive));
  c.expect(!r.exact && r.witness && (*r.witness)[0] == 0 && (*r.witness)[1] == 1 && (*r.witness)[2] == 2,
           "naive tent table fails at (1,2,3)");
}

// 10. Serialization round trip and deterministic SVG.
void round_trip(Check& c) {
  for (const auto& e : catalog()) {
    const Relation r = make_example(e.name);
    const std::string text = cli::serialize_relation(r);
    const Relation back = cli::parse_relation(text);
    c.expect(back == r, e.name + " parse(serialize) identical");
    c.expect(cli::serialize_relation(back) == text, e.name + " serialization stable");
    c.expect(cli::render_relation_svg(r) == cli::render_relation_svg(make_example(e.name)),
             e.name + " relation SVG byte-identical");
  }
  for (const char* name : {"mirror", "lemma-4.4", "example-6.1"}) {
    const GSet a = k_set(make_example(name), 3), b = k_set(make_example(name), 3);
    c.expect(cli::render_gset_svg(a, name) == cli::render_gset_svg(b, name),
             std::string(name) + " G-set SVG byte-identical");
  }
}

}  // namespace

int main() {
  Check oracle;  // criterion 9 gathers concordance checks from 3-6
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "idempotence suite", idempotence},
      {2, "inverse of an idempotent surjection is idempotent", inverse_idempotence},
      {3, "cordiality of K(n) projections", [&](Check& c) { cordiality(c, oracle); }},
      {4, "connectedness of finite products", [&](Check& c) { connectedness(c, oracle); }},
      {5, "consecutive equals all-pairs for idempotent f", [&](Check& c) { consecutive_vs_all_pairs(c, oracle); }},
      {6, "reversal matches the inverse", [&](Check& c) { reversal(c, oracle); }},
      {7, "continuum certificates", certificates},
      {8, "exactness of bonding tables", exactness},
      {9, "raster oracle concordance", [&](Check& c) {
         c = oracle;
         c.expect(oracle.count() > 0, "oracle checks ran");
       }},
      {10, "round trip and SVG determinism", round_trip},
  };

  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && c.ok();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.title << " (" << c.count()
              << " checks, " << buf << ")\n";
    for (const auto& f : c.failures()) std::cout << "       failed: " << f << "\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << " in " << total << "s\n";
  return all ? 0 : 1;
}
