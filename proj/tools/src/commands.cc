#include "usc/cli/commands.h"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "usc/cli/relation_io.h"
#include "usc/cli/svg.h"
#include "usc/coverage.h"
#include "usc/error.h"
#include "usc/gallery.h"
#include "usc/mahavier.h"
#include "usc/raster.h"

namespace usc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string point_str(const std::vector<Rational>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

std::string subset_str(const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << "}";
  return os.str();
}

// "1,3" (1-based, strictly increasing, within 1..n) -> 0-based.
std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coordinate list \"" + text + "\" must hold indices in 1.." + std::to_string(n));
    }
    if (!out.empty() && out.back() >= static_cast<std::size_t>(v - 1)) {
      throw Error(ErrorCode::kInvalidArgument, "coordinate list must be strictly increasing");
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty coordinate list");
  return out;
}

Semantics parse_semantics(const std::string& s) {
  if (s == "consecutive") return Semantics::kConsecutive;
  if (s == "all-pairs") return Semantics::kAllPairs;
  throw Error(ErrorCode::kInvalidArgument, "semantics must be consecutive or all-pairs");
}

Witness point_witness(const std::string& label, const Point& p) { return {label, {p.x, p.y}}; }

Report bool_report(bool value, const std::string& detail) {
  Report r;
  r.verdict = value ? "TRUE" : "FALSE";
  r.exit_code = value ? 0 : 1;
  r.details.push_back(detail);
  return r;
}

// Options shared by the subcommands; each subcommand reads what it registers.
struct Options {
  bool json = false;
  std::vector<std::string> inputs;
  std::string out;
  int n = 0;
  int max_n = 5;
  std::string semantics = "consecutive";
  bool connected = false;
  std::string project;
  bool compare_direct = false;
  bool reverse = false;
  std::string subsets;
  std::string decomposition;
  std::vector<std::string> params;
  bool list = false;
  std::string step = "1/64";
};

GSet build_for(const Relation& f, const Options& o) {
  if (o.n < 2) throw Error(ErrorCode::kInvalidArgument, "--n must be at least 2");
  return build_gset(ChainSystem::single(f, static_cast<std::size_t>(o.n)), parse_semantics(o.semantics));
}

Report cmd_validate(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  const Diagnostics d = validate(f);
  Report r;
  r.verdict = "VALID";
  r.details.push_back("relation: " + f.name() + ", " + std::to_string(f.pieces().size()) + " pieces");
  r.details.push_back(std::string("total: ") + (d.total ? "true" : "false"));
  r.details.push_back(std::string("surjective: ") + (d.surjective ? "true" : "false"));
  r.details.push_back(std::string("idempotent: ") + (d.idempotent ? "true" : "false"));
  r.details.push_back("graph components: " + std::to_string(d.graph_components));
  r.details.push_back(std::string("continuum-valued: ") + (d.continuum_valued ? "true" : "false"));
  r.witnesses = d.witnesses;
  return r;
}

Report cmd_idempotent(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  const auto c = is_idempotent(f);
  Report r = bool_report(c.value, "check: graph of f∘f equals graph of f");
  if (c.witness) r.witnesses.push_back(point_witness("point in exactly one of f∘f and f", *c.witness));
  return r;
}

Report cmd_surjective(const Options& o) {
  const auto c = is_surjective(load_relation(o.inputs.at(0)));
  Report r = bool_report(c.value, "check: union of the values covers [0,1]");
  if (c.witness) r.witnesses.push_back({"y without preimage", {*c.witness}});
  return r;
}

Report cmd_continuum_valued(const Options& o) {
  const auto c = is_continuum_valued(load_relation(o.inputs.at(0)));
  Report r = bool_report(c.value, "check: every value f(x) is a single closed interval");
  if (c.witness) r.witnesses.push_back({"x with disconnected value", {*c.witness}});
  return r;
}

Report cmd_components(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  const auto c = graph_components(f);
  Report r;
  r.verdict = c.count == 1 ? "CONNECTED" : "DISCONNECTED(" + std::to_string(c.count) + ")";
  r.exit_code = c.count == 1 ? 0 : 1;
  r.details.push_back("graph components: " + std::to_string(c.count));
  for (const auto& group : c.groups) {
    std::string line = "component pieces:";
    for (auto i : group) line += " " + std::to_string(i);
    r.details.push_back(line);
    const Point p = f.pieces()[group.front()].vertices().front();
    r.witnesses.push_back(point_witness("component point", p));
  }
  return r;
}

Report relation_output(const Relation& rel, const Options& o, std::ostream& out) {
  Report r;
  r.verdict = "OK";
  if (o.out.empty()) {
    out << serialize_relation(rel);
    r.exit_code = -1;  // document already written
  } else {
    write_text_file(o.out, serialize_relation(rel));
    r.details.push_back("wrote " + o.out);
  }
  return r;
}

Report cmd_compose(const Options& o, std::ostream& out) {
  const Relation g = load_relation(o.inputs.at(0));
  const Relation f = load_relation(o.inputs.at(1));
  return relation_output(compose(g, f), o, out);
}

Report cmd_inverse(const Options& o, std::ostream& out) {
  return relation_output(inverse(load_relation(o.inputs.at(0))), o, out);
}

Report cmd_equal(const Options& o) {
  const auto c = equal(load_relation(o.inputs.at(0)), load_relation(o.inputs.at(1)));
  Report r = bool_report(c.value, "check: graphs are equal as point sets");
  if (c.witness) r.witnesses.push_back(point_witness("point in exactly one graph", *c.witness));
  return r;
}

Report cmd_exactness(const Options& o) {
  const ChainSystem s = parse_chain_table(read_text_file(o.inputs.at(0)));
  const auto e = exactness_check(s);
  Report r;
  r.verdict = e.exact ? "EXACT" : "NOT_EXACT";
  r.exit_code = e.exact ? 0 : 1;
  r.details.push_back("check: f_ij ∘ f_jk = f_ik for all i < j < k, n = " + std::to_string(s.size()));
  if (e.witness) {
    const auto& w = *e.witness;
    r.witnesses.push_back({"failing (i, j, k)",
                           {Rational(static_cast<long>(w[0] + 1)), Rational(static_cast<long>(w[1] + 1)),
                            Rational(static_cast<long>(w[2] + 1))}});
  }
  return r;
}

void add_component_witnesses(Report& r, const GSet& g, const Connectivity& c) {
  for (const auto& group : c.groups) {
    r.witnesses.push_back({"component point", *cell_feasible(g.cells[group.front()])});
  }
}

Report cmd_mahavier(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  const Semantics sem = parse_semantics(o.semantics);
  const GSet g = build_for(f, o);
  Report r;
  std::vector<std::string> verdicts;
  bool failed = false;
  r.details.push_back(std::string(sem == Semantics::kConsecutive ? "K" : "G") + "(" +
                      std::to_string(o.n) + ") of " + f.name() + ": " + std::to_string(g.cells.size()) +
                      " cells, " + std::to_string(maximal_cell_count(g)) + " maximal");
  if (o.connected) {
    const auto c = gset_connected(g);
    r.details.push_back("components: " + std::to_string(c.components));
    verdicts.push_back(c.connected ? "CONNECTED" : "DISCONNECTED(" + std::to_string(c.components) + ")");
    if (!c.connected) {
      failed = true;
      add_component_witnesses(r, g, c);
    }
  }
  if (!o.project.empty()) {
    const auto keep = parse_index_list(o.project, g.dim);
    const GSet p = project_gset(g, keep);
    r.details.push_back("projection onto " + subset_str(keep) + ": " + std::to_string(p.cells.size()) +
                        " cells");
    if (o.compare_direct) {
      const GSet d = direct_gset(*g.source, keep);
      const auto cmp = gset_equal(p, d);
      std::string status = "EQUAL";
      if (!cmp.equal) {
        failed = true;
        status = cmp.witness_in_first ? "NOT_CONTAINED" : "STRICT_SUBSET";
        r.witnesses.push_back({cmp.witness_in_first ? "in projection, outside direct G-set"
                                                    : "in direct G-set, outside projection",
                               *cmp.witness});
      }
      r.details.push_back("projection vs direct G-set on " + subset_str(keep) + ": " + status);
      verdicts.push_back(status);
    }
  } else if (o.compare_direct) {
    throw Error(ErrorCode::kInvalidArgument, "--compare-direct needs --project");
  }
  if (o.reverse) {
    const GSet rev = reverse_gset(g);
    const GSet inv = build_gset(ChainSystem::single(inverse(f), static_cast<std::size_t>(o.n)), sem);
    const auto cmp = gset_equal(rev, inv);
    r.details.push_back("reversed G-set vs G-set of the inverse: " +
                        std::string(cmp.equal ? "EQUAL" : "DIFFERENT"));
    verdicts.push_back(cmp.equal ? "REVERSE_EQUAL" : "REVERSE_DIFFERENT");
    if (!cmp.equal) {
      failed = true;
      r.witnesses.push_back({"point in exactly one of the two sets", *cmp.witness});
    }
  }
  if (verdicts.empty()) verdicts.push_back("BUILT");
  for (std::size_t i = 0; i < verdicts.size(); ++i) r.verdict += (i ? "; " : "") + verdicts[i];
  r.exit_code = failed ? 1 : 0;
  return r;
}

Report cmd_cordiality(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  if (o.n < 2) throw Error(ErrorCode::kInvalidArgument, "--n must be at least 2");
  std::vector<std::vector<std::size_t>> subsets;
  if (!o.subsets.empty()) {
    std::stringstream ss(o.subsets);
    std::string item;
    while (std::getline(ss, item, ';')) subsets.push_back(parse_index_list(item, o.n));
    for (const auto& s : subsets) {
      if (s.size() == static_cast<std::size_t>(o.n)) {
        throw Error(ErrorCode::kInvalidArgument, "subsets must be proper");
      }
    }
  }
  const auto report = cordiality_report(f, static_cast<std::size_t>(o.n), subsets);
  Report r;
  bool all_equal = true;
  for (const auto& e : report) {
    r.details.push_back(subset_str(e.subset) + ": " + cordiality_status_name(e.status));
    if (e.status != CordialityStatus::kEqual) {
      all_equal = false;
      r.witnesses.push_back({subset_str(e.subset) + " " + cordiality_status_name(e.status), *e.witness});
    }
  }
  r.verdict = all_equal ? "EQUAL" : "NOT_EQUAL";
  r.exit_code = all_equal ? 0 : 1;
  return r;
}

Report cmd_certify(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  std::optional<std::vector<std::vector<std::size_t>>> groups;
  if (!o.decomposition.empty()) groups = parse_decomposition(read_text_file(o.decomposition));
  if (o.max_n < 2) throw Error(ErrorCode::kInvalidArgument, "--max-n must be at least 2");
  const Verdict v = certify_continuum(f, o.max_n, groups);
  Report r;
  r.verdict = v.label();
  r.details.push_back(v.evidence);
  if (v.kind == VerdictKind::kConnectedUpToN) {
    r.details.push_back("note: a finite check, not a certificate for every n");
  }
  r.witnesses = v.witnesses;
  r.exit_code = v.kind == VerdictKind::kCertifiedAllN || v.kind == VerdictKind::kConnectedUpToN ? 0 : 1;
  return r;
}

Report cmd_gallery(const Options& o, std::ostream& out) {
  if (o.list || o.inputs.empty()) {
    for (const auto& e : catalog()) {
      out << e.name << "  " << e.summary;
      if (!e.params.empty()) out << "  [param a, default 1/2]";
      out << "\n";
    }
    Report r;
    r.exit_code = -1;
    return r;
  }
  ExampleSpec spec{o.inputs.at(0), {}};
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "--param expects key=value");
    spec.params[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
  }
  return relation_output(make_example(spec), o, out);
}

Report cmd_render(const Options& o) {
  if (o.out.empty()) throw Error(ErrorCode::kInvalidArgument, "render needs --out");
  const Relation f = load_relation(o.inputs.at(0));
  std::string svg;
  if (o.n == 0) {
    svg = render_relation_svg(f);
  } else {
    GSet g = build_for(f, o);
    std::string title = std::string(g.semantics == Semantics::kConsecutive ? "K" : "G") + "(" +
                        std::to_string(o.n) + ") of " + f.name();
    if (!o.project.empty()) {
      const auto keep = parse_index_list(o.project, g.dim);
      g = project_gset(g, keep);
      title += " on " + subset_str(keep);
    }
    svg = render_gset_svg(g, title);
  }
  write_text_file(o.out, svg);
  Report r;
  r.verdict = "OK";
  r.details.push_back("wrote " + o.out);
  return r;
}

Report cmd_oracle(const Options& o) {
  const Relation f = load_relation(o.inputs.at(0));
  const Rational step = Rational::parse(o.step);
  Report r;
  int exact = 0, raster = 0;
  if (o.n == 0) {
    const Raster ras = raster_oracle(f, step);
    exact = graph_components(f).count;
    raster = raster_components(ras);
    r.details.push_back("marked squares at step " + step.str() + ": " + std::to_string(ras.count()));
  } else {
    const GSet g = build_for(f, o);
    const Raster ras = raster_oracle(g, step, RasterMode::kThick);
    exact = gset_connected(g).components;
    raster = raster_components(ras);
    r.details.push_back("marked grid points at step " + step.str() + ": " + std::to_string(ras.count()));
  }
  r.details.push_back("exact components: " + std::to_string(exact));
  r.details.push_back("raster components: " + std::to_string(raster));
  r.verdict = exact == raster ? "AGREE" : "DISAGREE";
  r.exit_code = exact == raster ? 0 : 1;
  return r;
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "verdict: " << r.verdict << "\n";
  for (const auto& d : r.details) os << "  " << d << "\n";
  for (const auto& w : r.witnesses) os << "  witness: " << w.label << " = " << point_str(w.point) << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
  os << "time_ms: " << buf << "\n";
  os << "exit: " << r.exit_code << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  doc["verdict"] = r.verdict;
  doc["exit_code"] = r.exit_code;
  doc["details"] = r.details;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json p = Json::array();
    for (const auto& v : w.point) p.push_back(v.str());
    ws.push_back(Json{{"label", w.label}, {"point", p}});
  }
  doc["witnesses"] = std::move(ws);
  doc["elapsed_ms"] = r.elapsed_ms;
  return doc.dump(2) + "\n";
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for upper semicontinuous set-valued functions on [0,1]", "usc"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable report");

  auto relation_arg = [&](CLI::App* sub, int count) {
    sub->add_option("relation", o.inputs, "Relation file (.rel) or gallery:NAME")->required()->expected(count);
  };
  using Handler = std::function<Report()>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto add = [&](const std::string& name, const std::string& help, int inputs, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (inputs > 0) relation_arg(sub, inputs);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };

  add("validate", "Parse a relation and report its properties", 1, [&] { return cmd_validate(o); });
  add("idempotent", "Decide f∘f = f", 1, [&] { return cmd_idempotent(o); });
  add("surjective", "Decide whether every y has a preimage", 1, [&] { return cmd_surjective(o); });
  add("components", "Count connected components of the graph", 1, [&] { return cmd_components(o); });
  add("continuum-valued", "Decide whether every value is an interval", 1,
      [&] { return cmd_continuum_valued(o); });
  auto* compose_cmd = add("compose", "Graph of G∘F (arguments: G F)", 2, [&] { return cmd_compose(o, out); });
  compose_cmd->add_option("--out", o.out, "Write the result here instead of stdout");
  auto* inverse_cmd = add("inverse", "Coordinate swap of a surjective relation", 1,
                          [&] { return cmd_inverse(o, out); });
  inverse_cmd->add_option("--out", o.out, "Write the result here instead of stdout");
  add("equal", "Decide point-set equality of two graphs", 2, [&] { return cmd_equal(o); });
  auto* exact_cmd = app.add_subcommand("exactness", "Check f_ij ∘ f_jk = f_ik for a bonding table");
  exact_cmd->add_option("table", o.inputs, "Bonding table JSON")->required()->expected(1);
  handlers.emplace_back(exact_cmd, [&] { return cmd_exactness(o); });

  auto* mahavier_cmd = add("mahavier", "Build a finite Mahavier product of f", 1, [&] { return cmd_mahavier(o); });
  mahavier_cmd->add_option("--n", o.n, "Chain length")->required();
  mahavier_cmd->add_option("--semantics", o.semantics, "consecutive (K) or all-pairs (G)");
  mahavier_cmd->add_flag("--connected", o.connected, "Decide connectedness");
  mahavier_cmd->add_option("--project", o.project, "Project onto 1-based coordinates, e.g. 1,3");
  mahavier_cmd->add_flag("--compare-direct", o.compare_direct,
                         "Compare the projection with the G-set built on the sub-chain");
  mahavier_cmd->add_flag("--reverse", o.reverse, "Compare the reversed set with that of the inverse");

  auto* cord_cmd = add("cordiality", "Compare projections of K(n) with direct sub-chain G-sets", 1,
                       [&] { return cmd_cordiality(o); });
  cord_cmd->add_option("--n", o.n, "Chain length")->required();
  cord_cmd->add_option("--subsets", o.subsets, "1-based subsets, e.g. \"1,2;1,3\" (default: all proper)");

  auto* certify_cmd = add("certify", "Decide connectedness of every K(n) where possible", 1,
                          [&] { return cmd_certify(o); });
  certify_cmd->add_option("--max-n", o.max_n, "Largest n for the finite fallback check");
  certify_cmd->add_option("--decomposition", o.decomposition, "Groups JSON, 0-based piece indices");

  auto* gallery_cmd = app.add_subcommand("gallery", "Print a catalog relation");
  gallery_cmd->add_option("name", o.inputs, "Catalog name")->expected(0, 1);
  gallery_cmd->add_option("--param", o.params, "Parameter, e.g. a=1/3");
  gallery_cmd->add_option("--out", o.out, "Write the document here instead of stdout");
  gallery_cmd->add_flag("--list", o.list, "List catalog names");
  handlers.emplace_back(gallery_cmd, [&] { return cmd_gallery(o, out); });

  auto* render_cmd = add("render", "Write an SVG of a graph or a low-dimensional G-set", 1,
                         [&] { return cmd_render(o); });
  render_cmd->add_option("--out", o.out, "SVG path")->required();
  render_cmd->add_option("--n", o.n, "Render K(n) (or G(n)) instead of the graph");
  render_cmd->add_option("--semantics", o.semantics, "consecutive (K) or all-pairs (G)");
  render_cmd->add_option("--project", o.project, "Project onto 1-based coordinates first");

  auto* oracle_cmd = add("oracle", "Compare exact component counts with a raster flood fill", 1,
                         [&] { return cmd_oracle(o); });
  oracle_cmd->add_option("--n", o.n, "Check K(n) (n <= 4) instead of the graph");
  oracle_cmd->add_option("--semantics", o.semantics, "consecutive (K) or all-pairs (G)");
  oracle_cmd->add_option("--step", o.step, "Grid step 1/k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string echo = "usc";
  for (const auto& a : args) echo += " " + a;
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) report = handler();
    }
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << point_str(e.witness()) << "\n";
    return 2;
  }
  if (report.exit_code < 0) return 0;  // a document was printed instead
  report.command = echo;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << (o.json ? render_json(report) : render_text(report));
  return report.exit_code;
}

}  // namespace usc::cli
