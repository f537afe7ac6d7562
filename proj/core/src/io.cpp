#include "nsd/io.hpp"

#include <fstream>
#include <sstream>

#include "nsd/error.hpp"

namespace nsd::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::MalformedSpec, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const json& j, const char* what) {
  const std::int64_t v = as_int(j, what);
  if (v < 0) malformed(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return j;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    if (j[1].get<std::int64_t>() == 0) malformed("zero denominator");
    return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  malformed("coefficient must be an integer or a [num, den] pair");
}

json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return json::array({r.num(), r.den()});
}

json builtin_json(Builtin b) { return {{"kind", "builtin"}, {"name", std::string(to_string(b))}}; }

Builtin builtin_from_json(const json& j) {
  const json& name = field(j, "name");
  if (!name.is_string()) malformed("builtin name must be a string");
  const auto b = parse_builtin(name.get<std::string>());
  if (!b) fail(ErrorCode::UnknownBuiltin, "unknown builtin family \"" + name.get<std::string>() + "\"");
  return *b;
}

std::string kind_of(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) malformed("\"kind\" must be a string");
  return k.get<std::string>();
}

Selector value_selector_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "n") return Selector::vertex(QuasiPoly::identity());
    if (s.rfind("const:", 0) == 0) {
      try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(s.substr(6), &used);
        if (used == s.size() - 6) return Selector::vertex(QuasiPoly::constant(v));
      } catch (const std::exception&) {
      }
    }
    malformed("unknown selector shorthand \"" + s + "\"");
  }
  if (j.is_number_integer()) return Selector::vertex(QuasiPoly::constant(j.get<std::int64_t>()));
  const std::string kind = kind_of(j);
  if (kind == "constant") return Selector::vertex(QuasiPoly::constant(as_int(field(j, "value"), "value")));
  if (kind == "quasi_affine") return Selector::vertex(quasi_poly_from_json(j));
  malformed("unknown selector kind \"" + kind + "\"");
}

}  // namespace

Digraph digraph_from_json(const json& j) {
  if (!j.is_object()) malformed("digraph must be an object");
  if (j.contains("arcs")) {
    std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
    for (const auto& a : as_array(j.at("arcs"), "arcs")) {
      if (!a.is_array() || a.size() != 2) malformed("each arc must be a [tail, head] pair");
      arcs.emplace_back(as_int(a[0], "arc tail"), as_int(a[1], "arc head"));
    }
    return Digraph::from_arcs(arcs);
  }
  const std::uint64_t count = as_uint(field(j, "arc_count"), "arc_count");
  std::vector<std::vector<Ditip>> cells;
  for (const auto& cell : as_array(field(j, "partition"), "partition")) {
    std::vector<Ditip> tips;
    for (const auto& t : as_array(cell, "partition cell")) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string()) malformed("ditip must be [\"in\"|\"out\", arc]");
      const std::string pol = t[0].get<std::string>();
      if (pol != "in" && pol != "out") malformed("ditip polarity must be \"in\" or \"out\"");
      tips.push_back({as_uint(t[1], "ditip arc"), pol == "in" ? Polarity::In : Polarity::Out});
    }
    cells.push_back(std::move(tips));
  }
  return Digraph::from_partition(count, cells);
}

json to_json(const Digraph& d) {
  if (d.form() == Digraph::Form::ArcList) {
    json arcs = json::array();
    for (const auto& [t, h] : d.arc_labels()) arcs.push_back({t, h});
    return {{"arcs", arcs}};
  }
  json cells = json::array();
  for (const auto& v : d.vertices()) {
    json cell = json::array();
    for (const auto& t : v.ditips) cell.push_back({std::string(to_string(t.polarity)), t.arc});
    cells.push_back(cell);
  }
  return {{"arc_count", d.arc_count()}, {"partition", cells}};
}

IndexSet index_set_from_json(const json& j) {
  if (!j.is_object()) malformed("index set must be an object");
  std::vector<bool> prefix;
  if (j.contains("prefix")) {
    const json& p = j.at("prefix");
    if (!p.is_string()) malformed("index set prefix must be a 0/1 string");
    for (char c : p.get<std::string>()) {
      if (c != '0' && c != '1') malformed("index set prefix must be a 0/1 string");
      prefix.push_back(c == '1');
    }
  }
  const std::uint64_t period = j.contains("period") ? as_uint(j.at("period"), "period") : 1;
  std::vector<std::uint64_t> residues;
  if (j.contains("residues"))
    for (const auto& r : as_array(j.at("residues"), "residues")) residues.push_back(as_uint(r, "residue"));
  return IndexSet::make(std::move(prefix), period, residues);
}

json to_json(const IndexSet& s) {
  std::string prefix;
  for (bool b : s.prefix()) prefix.push_back(b ? '1' : '0');
  return {{"prefix", prefix}, {"period", s.period()}, {"residues", s.residues()}};
}

QuasiPoly quasi_poly_from_json(const json& j) {
  if (!j.is_object()) malformed("sequence must be an object");
  std::vector<std::int64_t> prefix;
  if (j.contains("prefix"))
    for (const auto& v : as_array(j.at("prefix"), "prefix")) prefix.push_back(as_int(v, "prefix value"));
  const json& polys = as_array(field(j, "polys"), "polys");
  if (j.contains("period") && as_uint(j.at("period"), "period") != polys.size())
    malformed("period must equal the number of polys");
  if (polys.empty()) malformed("polys must not be empty");
  std::vector<Polynomial> tail;
  for (const auto& p : polys) {
    std::vector<Rational> coeffs;
    for (const auto& c : as_array(p, "poly")) coeffs.push_back(rational_from_json(c));
    tail.emplace_back(std::move(coeffs));
  }
  return QuasiPoly::make(std::move(prefix), std::move(tail));
}

json to_json(const QuasiPoly& q) {
  json polys = json::array();
  for (const auto& p : q.tail()) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    polys.push_back(coeffs);
  }
  return {{"prefix", q.prefix()}, {"period", q.period()}, {"polys", polys}};
}

HyperNat hypernat_from_json(const json& j) { return HyperNat::from(quasi_poly_from_json(j)); }

json to_json(const HyperNat& h) { return to_json(h.seq()); }

Selector selector_from_json(const json& j, Sort default_sort) {
  if (j.is_object() && j.contains("arc")) {
    Selector arc = value_selector_from_json(j.at("arc"));
    const json& pol = field(j, "polarity");
    if (!pol.is_string()) malformed("polarity must be a string");
    const auto rule = parse_polarity_rule(pol.get<std::string>());
    if (!rule) malformed("polarity must be \"in\", \"out\" or \"alternating\"");
    return Selector::ditip(std::move(arc.values), *rule);
  }
  Selector s = value_selector_from_json(j);
  s.sort = default_sort == Sort::Ditip ? Sort::Vertex : default_sort;
  if (j.is_object() && j.contains("sort")) {
    const json& sort = j.at("sort");
    const auto parsed = sort.is_string() ? parse_sort(sort.get<std::string>()) : std::nullopt;
    if (!parsed || *parsed == Sort::Ditip) malformed("selector sort must be \"vertex\" or \"arc\"");
    s.sort = *parsed;
  }
  return s;
}

json to_json(const Selector& s) {
  json body;
  if (s.is_constant()) {
    body = {{"kind", "constant"}, {"value", *s.values.eventual_constant()}};
  } else {
    body = to_json(s.values);
    body["kind"] = "quasi_affine";
  }
  if (s.sort == Sort::Ditip) return {{"arc", body}, {"polarity", std::string(to_string(s.polarity))}};
  body["sort"] = std::string(to_string(s.sort));
  return body;
}

DigraphFamily family_from_json(const json& j) {
  const std::string kind = kind_of(j);
  if (kind == "builtin") return DigraphFamily::builtin(builtin_from_json(j));
  if (kind != "explicit") malformed("family kind must be \"builtin\" or \"explicit\"");
  std::vector<Digraph> prefix;
  if (j.contains("prefix"))
    for (const auto& d : as_array(j.at("prefix"), "prefix")) prefix.push_back(digraph_from_json(d));
  const json& tail = field(j, "tail");
  if (tail.is_object() && tail.contains("kind") && kind_of(tail) == "builtin")
    return DigraphFamily::explicit_family(std::move(prefix), builtin_from_json(tail));
  return DigraphFamily::explicit_family(std::move(prefix), digraph_from_json(tail));
}

json to_json(const DigraphFamily& f) {
  if (!f.is_explicit()) return builtin_json(*f.builtin_kind());
  json prefix = json::array();
  for (const auto& d : f.explicit_prefix()) prefix.push_back(to_json(d));
  json tail = f.tail_digraph() ? to_json(*f.tail_digraph()) : builtin_json(*f.tail_builtin());
  return {{"kind", "explicit"}, {"prefix", prefix}, {"tail", tail}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace nsd::io
