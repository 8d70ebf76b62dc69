#include "usc/cli/relation_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "usc/error.h"
#include "usc/gallery.h"

namespace usc::cli {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed document: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

Rational rational_of(const Json& v) {
  if (!v.is_string()) throw Error(ErrorCode::kParse, "rationals must be strings, got " + v.dump());
  return Rational::parse(v.get<std::string>());
}

std::pair<Rational, Rational> pair_of(const Json& v) {
  if (!v.is_array() || v.size() != 2) {
    throw Error(ErrorCode::kParse, "expected a pair of rationals, got " + v.dump());
  }
  return {rational_of(v[0]), rational_of(v[1])};
}

Json pair_json(const Rational& a, const Rational& b) { return Json::array({a.str(), b.str()}); }

Piece piece_of(const Json& p) {
  const Json& type = field(p, "type");
  if (type == "rect") {
    auto [x0, x1] = pair_of(field(p, "x"));
    auto [y0, y1] = pair_of(field(p, "y"));
    return Piece::rect(Interval(x0, x1), Interval(y0, y1));
  }
  if (type == "segment") {
    auto [ax, ay] = pair_of(field(p, "from"));
    auto [bx, by] = pair_of(field(p, "to"));
    return Piece::segment({ax, ay}, {bx, by});
  }
  throw Error(ErrorCode::kParse, "unknown piece type " + type.dump());
}

Json relation_json(const Relation& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces()) {
    Json j;
    if (p.is_rect()) {
      const Rect& rc = p.as_rect();
      j["type"] = "rect";
      j["x"] = pair_json(rc.x.lo(), rc.x.hi());
      j["y"] = pair_json(rc.y.lo(), rc.y.hi());
    } else {
      const Segment& s = p.as_segment();
      j["type"] = "segment";
      j["from"] = pair_json(s.from.x, s.from.y);
      j["to"] = pair_json(s.to.x, s.to.y);
    }
    pieces.push_back(std::move(j));
  }
  Json doc;
  doc["name"] = r.name();
  doc["pieces"] = std::move(pieces);
  return doc;
}

Relation relation_of(const Json& doc) {
  const Json& name = field(doc, "name");
  if (!name.is_string()) throw Error(ErrorCode::kParse, "name must be a string");
  const Json& pieces = field(doc, "pieces");
  if (!pieces.is_array()) throw Error(ErrorCode::kParse, "pieces must be an array");
  std::vector<Piece> out;
  for (const auto& p : pieces) out.push_back(piece_of(p));
  return Relation(name.get<std::string>(), std::move(out));
}

std::size_t index_of(const Json& v) {
  if (!v.is_number_unsigned()) throw Error(ErrorCode::kParse, "expected a non-negative integer, got " + v.dump());
  return v.get<std::size_t>();
}

}  // namespace

Relation parse_relation(std::string_view text) { return relation_of(parse_json(text)); }

std::string serialize_relation(const Relation& r) { return relation_json(r).dump(2) + "\n"; }

std::vector<std::vector<std::size_t>> parse_decomposition(std::string_view text) {
  const Json doc = parse_json(text);
  const Json& groups = field(doc, "groups");
  if (!groups.is_array()) throw Error(ErrorCode::kParse, "groups must be an array");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : groups) {
    if (!g.is_array()) throw Error(ErrorCode::kParse, "each group must be an array");
    std::vector<std::size_t> group;
    for (const auto& i : g) group.push_back(index_of(i));
    out.push_back(std::move(group));
  }
  return out;
}

ChainSystem parse_chain_table(std::string_view text) {
  const Json doc = parse_json(text);
  const std::size_t n = index_of(field(doc, "n"));
  const Json& bonds = field(doc, "bonds");
  if (!bonds.is_array()) throw Error(ErrorCode::kParse, "bonds must be an array");
  ChainSystem::BondTable table;
  for (const auto& b : bonds) {
    const std::size_t from = index_of(field(b, "from"));
    const std::size_t to = index_of(field(b, "to"));
    if (from < 1 || from >= to || to > n) {
      throw Error(ErrorCode::kParse, "bond labels must satisfy 1 <= from < to <= n");
    }
    if (!table.emplace(std::make_pair(from - 1, to - 1), relation_of(field(b, "relation"))).second) {
      throw Error(ErrorCode::kParse, "duplicate bond " + std::to_string(from) + "," + std::to_string(to));
    }
  }
  return ChainSystem::table(n, std::move(table));
}

std::string serialize_chain_table(const ChainSystem& s) {
  Json bonds = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Json b;
      b["from"] = i + 1;
      b["to"] = j + 1;
      b["relation"] = relation_json(s.bond(i, j));
      bonds.push_back(std::move(b));
    }
  }
  Json doc;
  doc["n"] = s.size();
  doc["bonds"] = std::move(bonds);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

Relation load_relation(const std::string& source) {
  constexpr std::string_view kPrefix = "gallery:";
  if (source.rfind(kPrefix, 0) == 0) return make_example(source.substr(kPrefix.size()));
  return parse_relation(read_text_file(source));
}

}  // namespace usc::cli
