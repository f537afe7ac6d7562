#include "nsd/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include "nsd/connectivity.hpp"
#include "nsd/error.hpp"
#include "nsd/family.hpp"
#include "nsd/galaxies.hpp"
#include "nsd/io.hpp"
#include "nsd/ns_connectivity.hpp"
#include "nsd/ultrapower.hpp"

namespace nsd::cli {

namespace {

using nlohmann::json;
using FamilyPtr = std::shared_ptr<const DigraphFamily>;

struct Config {
  std::uint64_t tower = 0;
  std::uint64_t horizon = 64;
  std::string output = "json";

  FilterOracle oracle() const { return {tower}; }
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json certificates = json::object();
};

// A file path, inline JSON, or a bare shorthand string.
json load_arg(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return io::parse_json(text);
  if (std::filesystem::is_regular_file(text)) return io::read_json_file(text);
  return json(text);
}

FamilyPtr load_family(const std::string& text) {
  const json j = load_arg(text);
  if (j.is_string()) {
    const auto b = parse_builtin(j.get<std::string>());
    if (!b) fail(ErrorCode::MalformedSpec, "\"" + text + "\" is neither a family file nor a builtin name");
    return std::make_shared<const DigraphFamily>(DigraphFamily::builtin(*b));
  }
  return std::make_shared<const DigraphFamily>(io::family_from_json(j));
}

std::vector<InternalElement> elements_from(const json& j, const FamilyPtr& f, Sort sort) {
  std::vector<InternalElement> out;
  const json list = j.is_array() ? j : json::array({j});
  for (const auto& item : list) {
    Selector s = io::selector_from_json(item, sort);
    const Sort want = s.sort == Sort::Ditip ? Sort::Ditip : sort;
    out.push_back(make_internal_element(f, std::move(s), want));
  }
  return out;
}

// Roster files hold a selector list or {"vertices": [...], "arcs": [...]}.
void load_roster(const std::string& text, const FamilyPtr& f, std::vector<InternalElement>& vertices,
                 std::vector<InternalElement>& arcs) {
  const json j = load_arg(text);
  if (j.is_object() && (j.contains("vertices") || j.contains("arcs"))) {
    if (j.contains("vertices")) vertices = elements_from(j.at("vertices"), f, Sort::Vertex);
    if (j.contains("arcs")) arcs = elements_from(j.at("arcs"), f, Sort::Arc);
    return;
  }
  vertices = elements_from(j, f, Sort::Vertex);
}

json certificate(const IndexSet& s, const FilterOracle& oracle) {
  return {{"set", io::to_json(s)}, {"text", s.to_string()}, {"large", oracle.decide(s)}};
}

json hypernat_json(const HyperNat& h, const FilterOracle& oracle) {
  const auto limit = hypernat_limit(h, oracle);
  return {{"seq", io::to_json(h)}, {"text", h.to_string()}, {"limit", limit ? json(*limit) : json(nullptr)}};
}

json selectors_json(const std::vector<InternalElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(io::to_json(x.selector()));
  return out;
}

// ---- analyze ------------------------------------------------------------

void analyze_classify(Report& r, const FamilyPtr& f, const std::vector<InternalElement>& sel,
                      std::optional<std::uint64_t> at, const Config& cfg) {
  const auto oracle = cfg.oracle();
  if (at) {
    r.results["index"] = *at;
    r.results["grade"] = std::string(to_string(classify_digraph(f->digraph_at(*at))));
    r.results["case"] = "standard";
    return;
  }
  NsClassification c;
  if (sel.size() == 2) {
    c = ns_pair_connectedness(sel[0], sel[1], oracle);
    r.results["case"] = "pair";
    r.certificates["forward"] = certificate(*c.forward, oracle);
    r.certificates["backward"] = certificate(*c.backward, oracle);
    if (oracle.decide(*c.forward))
      r.results["dipath_length"] = hypernat_json(ns_dipath_length(sel[0], sel[1], oracle), oracle);
  } else if (sel.empty()) {
    c = ns_classify_family(*f, oracle);
    r.results["case"] = "family";
  } else {
    fail(ErrorCode::MalformedSpec, "classify takes zero or two vertex selectors");
  }
  r.results["grade"] = std::string(to_string(c.grade));
  r.certificates["strong"] = certificate(c.strong, oracle);
  r.certificates["unilateral"] = certificate(c.unilateral, oracle);
  r.certificates["weak"] = certificate(c.weak, oracle);
}

void analyze_bounds(Report& r, const FamilyPtr& f, const Config& cfg) {
  const auto oracle = cfg.oracle();
  const BoundsReport b = check_bounds(*f, oracle);
  r.results["case"] = b.category;
  r.results["inequality"] = b.inequality;
  r.results["holds"] = b.holds;
  r.results["p"] = hypernat_json(b.p, oracle);
  r.results["q"] = hypernat_json(b.q, oracle);
  r.certificates["witness"] = certificate(b.witness, oracle);
  if (b.p_at_least_three) r.certificates["p_at_least_three"] = certificate(*b.p_at_least_three, oracle);
  // Cross-check the closed-form counts against materialized digraphs.
  bool consistent = true;
  for (std::uint64_t n = 0; n < cfg.horizon; ++n) {
    if (!f->finite_at(n)) continue;
    const Digraph d = f->digraph_at(n);
    consistent = consistent && d.vertex_count() == b.p.at(n) && d.arc_count() == b.q.at(n);
  }
  r.results["pointwise"] = {{"checked_below", cfg.horizon}, {"consistent", consistent}};
}

void analyze_components(Report& r, const std::vector<InternalElement>& roster, const std::string& kind_text,
                        const Config& cfg) {
  const auto kind = parse_component_kind(kind_text);
  if (!kind) fail(ErrorCode::MalformedSpec, "--kind must be strong, unilateral or weak");
  if (roster.empty()) fail(ErrorCode::MalformedSpec, "components needs a vertex roster");
  const auto oracle = cfg.oracle();
  const auto comps = ns_components(roster, *kind, oracle);
  r.results["kind"] = kind_text;
  r.results["components"] = comps;
  json pairs = json::array();
  for (std::size_t i = 0; i < roster.size(); ++i)
    for (std::size_t j = i + 1; j < roster.size(); ++j) {
      json entry = {{"pair", {i, j}}, {"equal", certificate(equality_set(roster[i], roster[j]), oracle)}};
      if (!ns_equal(roster[i], roster[j], oracle)) {
        const auto c = ns_pair_connectedness(roster[i], roster[j], oracle);
        entry["grade"] = std::string(to_string(c.grade));
        entry["strong"] = certificate(c.strong, oracle);
        entry["unilateral"] = certificate(c.unilateral, oracle);
        entry["weak"] = certificate(c.weak, oracle);
      }
      pairs.push_back(entry);
    }
  r.certificates["pairs"] = pairs;
}

void analyze_distance(Report& r, const FamilyPtr& f, const std::vector<InternalElement>& sel,
                      const Config& cfg) {
  if (sel.size() != 2) fail(ErrorCode::MalformedSpec, "distance takes two vertex selectors");
  const auto oracle = cfg.oracle();
  const HyperNat d = ns_distance(sel[0], sel[1], oracle);
  r.results["distance"] = hypernat_json(d, oracle);
  r.results["limitedly_distant"] = hypernat_limit(d, oracle).has_value();
  r.certificates["semireach"] =
      certificate(f->semireach(sel[0].selector().values, sel[1].selector().values), oracle);
}

// ---- galaxy -------------------------------------------------------------

json galaxy_json(const GalaxyPartition& p, const Galaxy& g, const std::vector<InternalElement>& arcs) {
  json vs = json::array(), as = json::array();
  for (std::size_t v : g.vertices) vs.push_back(io::to_json(p.vertices[v].selector()));
  for (std::size_t a : g.arcs) as.push_back(io::to_json(arcs[a].selector()));
  return {{"id", g.id}, {"principal", g.principal}, {"vertices", vs}, {"arcs", as}};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorCode::MalformedSpec, "range must look like a..b");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const int lo = std::stoi(text.substr(0, dots), &used_lo);
    const std::string rest = text.substr(dots + 2);
    const int hi = std::stoi(rest, &used_hi);
    if (used_lo == dots && used_hi == rest.size()) return {lo, hi};
  } catch (const std::exception&) {
  }
  fail(ErrorCode::MalformedSpec, "range must look like a..b, got \"" + text + "\"");
}

void galaxy_command(Report& r, const FamilyPtr& f, const std::string& action,
                    const std::vector<InternalElement>& roster, const std::vector<InternalElement>& arcs,
                    const InternalElement& anchor, const std::string& chain_range, const Config& cfg) {
  const auto oracle = cfg.oracle();
  r.results["case"] = action;
  if (action == "partition" || action == "order") {
    if (roster.empty()) fail(ErrorCode::MalformedSpec, action + " needs a vertex roster");
    const auto p = galaxy_partition(roster, arcs, anchor, oracle);
    json gs = json::array(), dists = json::array();
    for (const auto& g : p.galaxies) gs.push_back(galaxy_json(p, g, arcs));
    for (const auto& v : p.vertices) dists.push_back(hypernat_json(ns_distance(anchor, v, oracle), oracle));
    r.results["galaxies"] = gs;
    r.certificates["anchor_distances"] = dists;
    if (action == "order") {
      json order = json::array();
      for (std::size_t a = 0; a < p.galaxies.size(); ++a)
        for (std::size_t b = a + 1; b < p.galaxies.size(); ++b) {
          if (p.galaxies[a].principal || p.galaxies[b].principal) continue;
          const auto d = galaxy_order(p.vertices[p.galaxies[a].vertices.front()],
                                      p.vertices[p.galaxies[b].vertices.front()], anchor, oracle);
          order.push_back({{"a", a}, {"b", b}, {"relation", std::string(to_string(d.result))},
                           {"difference", d.difference.to_string()}});
        }
      r.results["order"] = order;
    }
    return;
  }
  if (action == "chain") {
    if (chain_range.empty()) fail(ErrorCode::MalformedSpec, "chain needs --chain a..b");
    const auto [lo, hi] = parse_range(chain_range);
    const auto chain = galaxy_chain(f, lo, hi);
    json links = json::array(), pairs = json::array();
    bool ordered = true;
    for (const auto& link : chain)
      links.push_back({{"j", link.j},
                       {"vertex", io::to_json(link.vertex.selector())},
                       {"principal", limitedly_distant(anchor, link.vertex, oracle)}});
    for (std::size_t a = 0; a < chain.size(); ++a)
      for (std::size_t b = a + 1; b < chain.size(); ++b) {
        const auto d = galaxy_order(chain[a].vertex, chain[b].vertex, anchor, oracle);
        ordered = ordered && d.result == Closeness::ACloser;
        pairs.push_back({{"a", chain[a].j}, {"b", chain[b].j}, {"relation", std::string(to_string(d.result))},
                         {"difference", d.difference.to_string()}});
      }
    r.results["chain"] = links;
    r.results["strictly_ordered"] = ordered;
    r.certificates["pairs"] = pairs;
    return;
  }
  if (action == "witness") {
    const auto w = nonprincipal_witness(f, anchor, oracle);
    r.results["witness"] = io::to_json(w.vertex.selector());
    r.results["limitedly_distant"] = false;
    r.certificates["distance"] = hypernat_json(w.distance, oracle);
    return;
  }
  fail(ErrorCode::MalformedSpec, "galaxy action must be partition, order, chain or witness");
}

// ---- filter -------------------------------------------------------------

IndexSet load_index_set(const std::string& text) { return io::index_set_from_json(load_arg(text)); }

void filter_command(Report& r, const std::vector<std::string>& args, const Config& cfg) {
  if (args.empty()) fail(ErrorCode::MalformedSpec, "filter needs decide, classify or op");
  const auto oracle = cfg.oracle();
  const std::string& action = args[0];
  r.results["case"] = action;
  if (action == "decide" || action == "classify") {
    if (args.size() != 2) fail(ErrorCode::MalformedSpec, action + " takes one index set");
    const IndexSet s = load_index_set(args[1]);
    r.inputs["sets"] = json::array({io::to_json(s)});
    r.results["canonical"] = io::to_json(s);
    r.results["text"] = s.to_string();
    if (action == "decide") {
      r.results["large"] = oracle.decide(s);
      r.certificates["residue"] = {{"period", s.period()}, {"tower_residue", cfg.tower % s.period()}};
    } else {
      r.results["kind"] = std::string(to_string(classify_index_set(s)));
    }
    return;
  }
  if (action == "op") {
    if (args.size() < 3) fail(ErrorCode::MalformedSpec, "op takes an operation and its operands");
    const auto op = parse_set_op(args[1]);
    if (!op) fail(ErrorCode::MalformedSpec, "unknown set operation \"" + args[1] + "\"");
    const std::size_t want = *op == SetOp::Complement ? 3 : 4;
    if (args.size() != want) fail(ErrorCode::MalformedSpec, "wrong number of operands for " + args[1]);
    const IndexSet lhs = load_index_set(args[2]);
    std::optional<IndexSet> rhs;
    json sets = json::array({io::to_json(lhs)});
    if (want == 4) {
      rhs = load_index_set(args[3]);
      sets.push_back(io::to_json(*rhs));
    }
    r.inputs["sets"] = sets;
    r.inputs["op"] = args[1];
    const IndexSet out = index_algebra(*op, lhs, rhs);
    r.results["canonical"] = io::to_json(out);
    r.results["text"] = out.to_string();
    r.results["kind"] = std::string(to_string(classify_index_set(out)));
    r.certificates["result"] = certificate(out, oracle);
    return;
  }
  fail(ErrorCode::MalformedSpec, "filter action must be decide, classify or op");
}

// ---- validate -----------------------------------------------------------

void validate_command(Report& r, const std::string& path) {
  const json j = load_arg(path);
  if (!j.is_object()) fail(ErrorCode::MalformedSpec, "expected a JSON object");
  std::string type;
  json canonical;
  if (j.contains("kind") && (j.at("kind") == "builtin" || j.at("kind") == "explicit")) {
    type = "family";
    canonical = io::to_json(io::family_from_json(j));
  } else if (j.contains("arcs") || j.contains("partition")) {
    type = "digraph";
    canonical = io::to_json(io::digraph_from_json(j));
  } else if (j.contains("polys")) {
    type = "sequence";
    canonical = io::to_json(io::quasi_poly_from_json(j));
  } else if (j.contains("residues") || j.contains("period")) {
    type = "index_set";
    canonical = io::to_json(io::index_set_from_json(j));
  } else if (j.contains("kind") || j.contains("arc")) {
    type = "selector";
    canonical = io::to_json(io::selector_from_json(j));
  } else {
    fail(ErrorCode::MalformedSpec, "unrecognized document");
  }
  r.results["type"] = type;
  r.results["canonical"] = canonical;
  r.results["valid"] = true;
}

// ---- rendering ----------------------------------------------------------

void render_text(std::ostream& out, const json& j, const std::string& path) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(out, v, path.empty() ? k : path + "." + k);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(out, j[i], path + "[" + std::to_string(i) + "]");
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(std::ostream& out, const Report& r, const Config& cfg) {
  const json doc = {{"command", r.command},
                    {"inputs", r.inputs},
                    {"results", r.results},
                    {"certificates", r.certificates},
                    {"config", {{"tower", cfg.tower}, {"horizon", cfg.horizon}}}};
  if (cfg.output == "text") render_text(out, doc, "");
  else out << doc.dump(2) << "\n";
}

std::string_view category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Validation: return "validation";
    case ErrorCategory::Unsupported: return "unsupported";
  }
  return "validation";
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Parse: return 2;
    case ErrorCategory::Validation: return 3;
    case ErrorCategory::Unsupported: return 4;
  }
  return 3;
}

int report_error(std::ostream& err, std::string_view code, ErrorCategory cat, const std::string& message) {
  const json e = {{"error", {{"code", code}, {"category", category_name(cat)}, {"message", message}}}};
  err << e.dump() << "\n";
  return exit_code(cat);
}

// "--chain -2..2" would read the range as an option; glue it to the flag.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--chain" && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
      out.push_back("--chain=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Nonstandard digraph workbench", "nsd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tower", cfg.tower, "Residue-tower constant of the filter oracle");
  app.add_option("--horizon", cfg.horizon, "Per-index cross-check depth");
  app.add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string family_arg, action, kind = "strong", anchor_arg = "const:0", arcs_arg, chain_arg, file_arg;
  std::vector<std::string> selector_args, galaxy_args, filter_args;
  std::optional<std::uint64_t> at;

  auto* analyze = app.add_subcommand("analyze", "Classify, bound, decompose or measure a family");
  analyze->add_option("family", family_arg, "Family file, inline JSON or builtin name")->required();
  analyze->add_option("action", action, "classify | bounds | components | distance")
      ->required()
      ->check(CLI::IsMember({"classify", "bounds", "components", "distance"}));
  analyze->add_option("selectors", selector_args, "Selector files, inline JSON or shorthands");
  analyze->add_option("--at", at, "Classify the single digraph D_n");
  analyze->add_option("--kind", kind, "Component kind")->check(CLI::IsMember({"strong", "unilateral", "weak"}));

  auto* galaxy = app.add_subcommand("galaxy", "Galaxy partition, order, chain and witness");
  galaxy->add_option("args", galaxy_args, "family [roster] [partition|order|chain|witness]")->required();
  galaxy->add_option("--anchor", anchor_arg, "Standard anchor vertex selector");
  galaxy->add_option("--arcs", arcs_arg, "Arc roster");
  galaxy->add_option("--chain", chain_arg, "Chain window a..b");

  auto* filter = app.add_subcommand("filter", "Index-set decisions and algebra");
  filter->add_option("args", filter_args, "decide|classify <set> or op <op> <set> [<set>]")->required();

  auto* validate = app.add_subcommand("validate", "Check and canonicalize a JSON document");
  validate->add_option("file", file_arg, "Document to validate")->required();

  std::vector<std::string> args = normalize(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    return report_error(err, "ParseError", ErrorCategory::Parse, e.what());
  }

  Report r;
  try {
    if (*analyze) {
      r.command = "analyze";
      const FamilyPtr f = load_family(family_arg);
      r.inputs["family"] = io::to_json(*f);
      r.inputs["action"] = action;
      std::vector<InternalElement> sel;
      for (const auto& s : selector_args)
        for (auto& x : elements_from(load_arg(s), f, Sort::Vertex)) sel.push_back(std::move(x));
      r.inputs["selectors"] = selectors_json(sel);
      if (at) r.inputs["at"] = *at;
      if (action == "classify") analyze_classify(r, f, sel, at, cfg);
      else if (action == "bounds") analyze_bounds(r, f, cfg);
      else if (action == "components") analyze_components(r, sel, kind, cfg);
      else analyze_distance(r, f, sel, cfg);
    } else if (*galaxy) {
      r.command = "galaxy";
      const FamilyPtr f = load_family(galaxy_args.front());
      std::string g_action = chain_arg.empty() ? "" : "chain";
      std::vector<InternalElement> roster, arcs;
      for (std::size_t i = 1; i < galaxy_args.size(); ++i) {
        const std::string& a = galaxy_args[i];
        if (a == "partition" || a == "order" || a == "chain" || a == "witness") g_action = a;
        else load_roster(a, f, roster, arcs);
      }
      if (g_action.empty()) fail(ErrorCode::MalformedSpec, "galaxy needs partition, order, chain or witness");
      if (!arcs_arg.empty()) arcs = elements_from(load_arg(arcs_arg), f, Sort::Arc);
      const auto anchor = make_internal_element(f, io::selector_from_json(load_arg(anchor_arg)), Sort::Vertex);
      r.inputs["family"] = io::to_json(*f);
      r.inputs["action"] = g_action;
      r.inputs["anchor"] = io::to_json(anchor.selector());
      r.inputs["roster"] = selectors_json(roster);
      r.inputs["arcs"] = selectors_json(arcs);
      if (!chain_arg.empty()) r.inputs["chain"] = chain_arg;
      galaxy_command(r, f, g_action, roster, arcs, anchor, chain_arg, cfg);
    } else if (*filter) {
      r.command = "filter";
      r.inputs["action"] = filter_args.front();
      filter_command(r, filter_args, cfg);
    } else {
      r.command = "validate";
      r.inputs["file"] = file_arg;
      validate_command(r, file_arg);
    }
  } catch (const Error& e) {
    return report_error(err, to_string(e.code()), e.category(), e.what());
  } catch (const json::exception& e) {
    return report_error(err, "MalformedSpec", ErrorCategory::Parse, e.what());
  }
  emit(out, r, cfg);
  return 0;
}

}  // namespace nsd::cli
