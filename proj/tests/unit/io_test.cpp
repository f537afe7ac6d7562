#include <gtest/gtest.h>

#include <random>

#include "nsd/error.hpp"
#include "nsd/io.hpp"
#include "oracles.hpp"

using nsd::Builtin;
using nsd::Digraph;
using nsd::DigraphFamily;
using nsd::ErrorCode;
using nsd::QuasiPoly;
using nsd::Selector;
using nsd::io::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const nsd::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Overflow;
}

std::string data(const std::string& name) { return std::string(NSD_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Io, DigraphRoundTrips) {
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto d = nsd::oracle::random_digraph(rng, 5, 8);
    EXPECT_EQ(nsd::io::digraph_from_json(nsd::io::to_json(d)), d);
  }
  const auto part = Digraph::from_partition(2, {{{0, nsd::Polarity::In}},
                                                {{0, nsd::Polarity::Out}, {1, nsd::Polarity::In}},
                                                {{1, nsd::Polarity::Out}}});
  const auto j = nsd::io::to_json(part);
  EXPECT_TRUE(j.contains("partition"));
  EXPECT_EQ(nsd::io::digraph_from_json(j), part);
}

TEST(Io, DigraphErrors) {
  EXPECT_EQ(code_of([] { nsd::io::digraph_from_json(json::parse(R"({"arcs": [[0]]})")); }), ErrorCode::MalformedSpec);
  EXPECT_EQ(code_of([] { nsd::io::digraph_from_json(json::parse(R"({"arcs": []})")); }), ErrorCode::EmptyDigraph);
  EXPECT_EQ(code_of([] {
              nsd::io::digraph_from_json(json::parse(R"({"arc_count": 1, "partition": [[["in", 0]]]})"));
            }),
            ErrorCode::PartitionError);
}

TEST(Io, IndexSetRoundTrips) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto s = nsd::oracle::random_index_set(rng);
    EXPECT_EQ(nsd::io::index_set_from_json(nsd::io::to_json(s)), s);
  }
  EXPECT_EQ(nsd::io::index_set_from_json(json::parse(R"({"period": 2, "residues": [0]})")),
            nsd::IndexSet::residue_class(0, 2));
  EXPECT_EQ(nsd::io::index_set_from_json(json::parse(R"({"prefix": "101", "residues": []})")),
            nsd::IndexSet::finite({0, 2}));
  EXPECT_EQ(code_of([] { nsd::io::index_set_from_json(json::parse(R"({"period": 2, "residues": [2]})")); }),
            ErrorCode::BadResidue);
  EXPECT_EQ(code_of([] { nsd::io::index_set_from_json(json::parse(R"({"prefix": "12", "residues": []})")); }),
            ErrorCode::MalformedSpec);
}

TEST(Io, QuasiPolyRoundTrips) {
  const auto mixed = QuasiPoly::floor_div(3) * QuasiPoly::identity() + QuasiPoly::constant(4);
  EXPECT_EQ(nsd::io::quasi_poly_from_json(nsd::io::to_json(mixed)), mixed);
  const auto half = nsd::io::quasi_poly_from_json(json::parse(R"({"period": 2, "polys": [[0, [1, 2]], [[-1, 2], [1, 2]]]})"));
  EXPECT_EQ(half, QuasiPoly::floor_div(2));
  EXPECT_EQ(code_of([] { nsd::io::quasi_poly_from_json(json::parse(R"({"period": 1, "polys": [[0, [1, 2]]]})")); }),
            ErrorCode::NonIntegralTail);
  EXPECT_EQ(code_of([] { nsd::io::hypernat_from_json(json::parse(R"({"period": 1, "polys": [[0, -1]]})")); }),
            ErrorCode::NegativeTail);
}

TEST(Io, SelectorForms) {
  EXPECT_EQ(nsd::io::selector_from_json("n"), Selector::vertex(QuasiPoly::identity()));
  EXPECT_EQ(nsd::io::selector_from_json("const:4"), Selector::vertex(QuasiPoly::constant(4)));
  EXPECT_EQ(nsd::io::selector_from_json(7), Selector::vertex(QuasiPoly::constant(7)));
  EXPECT_EQ(nsd::io::selector_from_json(json::parse(R"({"kind": "constant", "value": 2, "sort": "arc"})")),
            Selector::arc(QuasiPoly::constant(2)));
  EXPECT_EQ(nsd::io::selector_from_json(json::parse(R"({"kind": "quasi_affine", "period": 1, "polys": [[0, 2]]})")),
            Selector::vertex(QuasiPoly::affine(2, 0)));
  const auto tip = nsd::io::selector_from_json(json::parse(R"({"arc": "n", "polarity": "alternating"})"));
  EXPECT_EQ(tip, Selector::ditip(QuasiPoly::identity(), nsd::PolarityRule::Alternating));
  for (const auto& s : {tip, Selector::arc(QuasiPoly::floor_div(2)), Selector::vertex(QuasiPoly::constant(3))})
    EXPECT_EQ(nsd::io::selector_from_json(nsd::io::to_json(s)), s);
  EXPECT_EQ(code_of([] { nsd::io::selector_from_json("sqrt(n)"); }), ErrorCode::MalformedSpec);
}

TEST(Io, FamilyRoundTrips) {
  for (auto b : {Builtin::Dipath, Builtin::InStar, Builtin::TwoWayDipathEnlargement}) {
    const auto f = DigraphFamily::builtin(b);
    EXPECT_EQ(nsd::io::family_from_json(nsd::io::to_json(f)), f);
  }
  const auto c3 = nsd::io::family_from_json(nsd::io::read_json_file(data("c3_enlargement.json")));
  EXPECT_EQ(c3.digraph_at(12).arc_count(), 3u);
  EXPECT_EQ(nsd::io::family_from_json(nsd::io::to_json(c3)), c3);
  const auto mixed = DigraphFamily::explicit_family({Digraph::from_arcs({{0, 1}})}, Builtin::OneWayDipathEnlargement);
  EXPECT_EQ(nsd::io::family_from_json(nsd::io::to_json(mixed)), mixed);
}

TEST(Io, FamilyErrors) {
  EXPECT_EQ(code_of([] { nsd::io::family_from_json(nsd::io::read_json_file(data("unknown_builtin.json"))); }),
            ErrorCode::UnknownBuiltin);
  EXPECT_EQ(code_of([] { nsd::io::read_json_file(data("malformed.json")); }), ErrorCode::MalformedSpec);
  EXPECT_EQ(code_of([] { nsd::io::read_json_file(data("no_such_file.json")); }), ErrorCode::MalformedSpec);
  EXPECT_EQ(code_of([] { nsd::io::family_from_json(json::parse(R"({"kind": "lazy"})")); }), ErrorCode::MalformedSpec);
  EXPECT_EQ(code_of([] {
              nsd::io::family_from_json(json::parse(R"({"kind": "explicit", "tail": {"kind": "builtin", "name": "dipath"}})"));
            }),
            ErrorCode::NonEventuallyConstantExplicit);
}
