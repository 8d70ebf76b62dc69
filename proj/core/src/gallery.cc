#include "usc/gallery.h"

#include <random>
#include <sstream>

#include "usc/error.h"

namespace usc {

namespace {

const Rational kHalf(1, 2);

Piece seg(Rational x0, Rational y0, Rational x1, Rational y1) {
  return Piece::segment({x0, y0}, {x1, y1});
}

Piece rect(Rational x0, Rational x1, Rational y0, Rational y1) {
  return Piece::rect(Interval(x0, x1), Interval(y0, y1));
}

Piece diagonal() { return seg(0, 0, 1, 1); }

Rational param(const ExampleSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  const Rational a = it == spec.params.end() ? kHalf : it->second;
  if (a <= Rational(0) || a >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                spec.name + ": parameter " + key + " must lie strictly between 0 and 1");
  }
  return a;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"constant-zero", "f(x) = 0", {true, false, true}, {}},
      {"id-or-B", "f(x) = B = [0,a] for x <= a, f(x) = x otherwise", {true, true, true}, {"a"}},
      {"full-on-A-else-B", "f(x) = [0,1] on A = [0,1/4], f(x) = B = [1/2,1] otherwise",
       {true, true, true}, {}},
      {"down-cone", "f(x) = x except f(a) = [0,a] and f(1) = [0,1]", {true, true, true}, {"a"}},
      {"up-cone", "f(x) = x except f(0) = [0,1] and f(a) = [a,1]", {true, true, true}, {"a"}},
      {"mirror", "f(x) = {x, 1-x}", {true, true, false}, {}},
      {"example-6.1", "f(0) = [0,1], f(x) = x otherwise", {true, true, true}, {}},
      {"example-6.2", "f(0) = [0,1], f(x) = 1 otherwise", {true, true, true}, {}},
      {"example-6.3", "f(0) = [0,1/2], f(x) = 1/2 on (0,1), f(1) = [1/2,1]",
       {true, true, true}, {}},
      {"example-6.4", "alias of mirror", {true, true, false}, {}},
      {"lemma-4.4", "diagonal plus K = {(0,1)} in the region x < a < y", {true, true, false},
       {"a"}},
      {"tent", "f(x) = 1 - |2x - 1|", {false, true, true}, {}},
      {"identity", "f(x) = x", {true, true, true}, {}},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::kUnknownExample, "unknown example: " + std::string(name));
}

Relation make_example(const ExampleSpec& spec) {
  const CatalogEntry& entry = catalog_entry(spec.name);
  for (const auto& [key, value] : spec.params) {
    bool known = false;
    for (const auto& p : entry.params) known = known || p == key;
    if (!known) {
      throw Error(ErrorCode::kInvalidArgument, spec.name + ": unknown parameter " + key);
    }
  }
  const std::string& n = spec.name;
  if (n == "constant-zero") return Relation(n, {rect(0, 1, 0, 0)});
  if (n == "id-or-B") {
    const Rational a = param(spec, "a");
    return Relation(n, {rect(0, a, 0, a), seg(a, a, 1, 1)});
  }
  if (n == "full-on-A-else-B") {
    return Relation(n, {rect(0, Rational(1, 4), 0, 1), rect(Rational(1, 4), 1, kHalf, 1)});
  }
  if (n == "down-cone") {
    const Rational a = param(spec, "a");
    return Relation(n, {diagonal(), rect(a, a, 0, a), rect(1, 1, 0, 1)});
  }
  if (n == "up-cone") {
    const Rational a = param(spec, "a");
    return Relation(n, {diagonal(), rect(0, 0, 0, 1), rect(a, a, a, 1)});
  }
  if (n == "mirror" || n == "example-6.4") {
    return Relation(n, {diagonal(), seg(0, 1, 1, 0)});
  }
  if (n == "example-6.1") return Relation(n, {rect(0, 0, 0, 1), diagonal()});
  if (n == "example-6.2") return Relation(n, {rect(0, 0, 0, 1), rect(0, 1, 1, 1)});
  if (n == "example-6.3") {
    return Relation(n, {rect(0, 0, 0, kHalf), rect(0, 1, kHalf, kHalf), rect(1, 1, kHalf, 1)});
  }
  if (n == "lemma-4.4") {
    return make_lemma44(param(spec, "a"), {Piece::point({0, 1})}, n);
  }
  if (n == "tent") return Relation(n, {seg(0, 0, kHalf, 1), seg(kHalf, 1, 1, 0)});
  return Relation(n, {diagonal()});  // identity
}

Relation make_example(std::string_view name) { return make_example(ExampleSpec{std::string(name), {}}); }

Relation make_lemma44(const Rational& a, const std::vector<Piece>& k, const std::string& name) {
  if (a <= Rational(0) || a >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "a must lie strictly between 0 and 1");
  }
  std::vector<Piece> pieces{diagonal()};
  for (const auto& piece : k) {
    for (const Point& v : piece.vertices()) {
      const bool corner = v.x == a && v.y == a;
      if (!corner && !(v.x < a && v.y > a)) {
        std::ostringstream os;
        os << "piece " << piece << " has point (" << v.x << "," << v.y
           << ") outside the region x < " << a << " < y";
        throw Error(ErrorCode::kRegionViolation, os.str(), {v.x, v.y});
      }
    }
    pieces.push_back(piece);
  }
  Relation r(name, std::move(pieces));
  if (!is_idempotent(r).value || !is_surjective(r).value) {
    throw Error(ErrorCode::kInvalidArgument, "region-valid relation failed the idempotence check");
  }
  return r;
}

Relation random_lemma44(std::uint64_t seed, const Rational& a, int count) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be positive");
  if (a <= Rational(0) || a >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "a must lie strictly between 0 and 1");
  }
  constexpr long kGrid = 64;
  // Grid indices with x < a and y > a.
  std::vector<long> xs, ys;
  for (long i = 0; i <= kGrid; ++i) {
    const Rational t(i, kGrid);
    if (t < a) xs.push_back(i);
    if (t > a) ys.push_back(i);
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<long>& v) { return v[rng() % v.size()]; };

  std::vector<Piece> k;
  for (int c = 0; c < count; ++c) {
    long x0 = pick(xs), x1 = pick(xs), y0 = pick(ys), y1 = pick(ys);
    if (rng() % 2 == 0 || x0 == x1 || y0 == y1) {
      k.push_back(rect(Rational(std::min(x0, x1), kGrid), Rational(std::max(x0, x1), kGrid),
                       Rational(std::min(y0, y1), kGrid), Rational(std::max(y0, y1), kGrid)));
    } else {
      k.push_back(seg(Rational(x0, kGrid), Rational(y0, kGrid), Rational(x1, kGrid),
                      Rational(y1, kGrid)));
    }
  }
  return make_lemma44(a, k, "random-lemma-4.4-" + std::to_string(seed));
}

}  // namespace usc
