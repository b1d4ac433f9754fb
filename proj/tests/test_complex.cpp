#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hvec/complex.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hvec;

namespace {

using fixture::named;
using fixture::random_small;

const auto kRP2 = std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};

std::set<oracle::Set> oracle_faces(const SimplicialComplex& c) {
  std::vector<oracle::Set> facets;
  for (Face f : c.facets()) facets.push_back(f.vertices());
  return oracle::closure(facets);
}

std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h) {
  // f_{j-1} = sum_i C(d-i, j-i) h_i
  const auto d = static_cast<std::int64_t>(h.size()) - 1;
  std::vector<std::int64_t> f(h.size(), 0);
  for (std::int64_t j = 0; j <= d; ++j)
    for (std::int64_t i = 0; i <= j; ++i) f[static_cast<std::size_t>(j)] += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
  return f;
}

}  // namespace

TEST_CASE("from_facets drops dominated facets") {
  const SimplicialComplex c = named({"abc", "ab"});
  CHECK(c.facets().size() == 1);
  CHECK(c.named_facets()[0] == std::vector<std::string>{"a", "b", "c"});
  const SimplicialComplex s = named({"abc", "abd", "acd", "bcd"});
  CHECK(s.dimension() == 2);
  CHECK(s.facets().size() == 4);
  const SimplicialComplex bowtie = named({"abc", "cde"});
  CHECK(bowtie.num_vertices() == 5);
  CHECK(bowtie.dimension() == 2);
}

TEST_CASE("void and empty complexes") {
  const SimplicialComplex v = SimplicialComplex::void_complex();
  CHECK(v.is_void());
  CHECK(v.faces().empty());
  CHECK_THROWS(v.f_vector());
  CHECK(SimplicialComplex::from_facets(std::vector<std::vector<int>>{}).is_void());
  const SimplicialComplex e = SimplicialComplex::empty_complex();
  CHECK(e.is_empty_complex());
  CHECK(e.dimension() == -1);
  CHECK(e.f_vector() == std::vector<std::int64_t>{1});
  CHECK(e.h_vector() == std::vector<std::int64_t>{1});
}

TEST_CASE("faces_of_dim") {
  const SimplicialComplex s = SimplicialComplex::boundary_simplex(3);
  CHECK(s.faces_of_dim(1).size() == 6);
  CHECK(s.faces_of_dim(-1).size() == 1);
  CHECK(s.faces_of_dim(-1)[0].empty());
  CHECK(s.faces_of_dim(3).empty());
  const SimplicialComplex bowtie = named({"abc", "cde"});
  std::vector<std::string> edges;
  for (Face f : bowtie.faces_of_dim(1)) edges.push_back(bowtie.face_name(f));
  CHECK(edges == std::vector<std::string>{"{a,b}", "{a,c}", "{b,c}", "{c,d}", "{c,e}", "{d,e}"});
}

TEST_CASE("f- and h-vectors") {
  const SimplicialComplex s = SimplicialComplex::boundary_simplex(3);
  CHECK(s.f_vector() == std::vector<std::int64_t>{1, 4, 6, 4});
  CHECK(s.h_vector() == std::vector<std::int64_t>{1, 1, 1, 1});
  const SimplicialComplex pt = SimplicialComplex::from_facets(std::vector<std::vector<int>>{{1}});
  CHECK(pt.f_vector() == std::vector<std::int64_t>{1, 1});
  CHECK(pt.h_vector() == std::vector<std::int64_t>{1, 0});
  const SimplicialComplex bowtie = named({"abc", "cde"});
  CHECK(bowtie.f_vector() == std::vector<std::int64_t>{1, 5, 6, 2});
  CHECK(bowtie.h_vector() == std::vector<std::int64_t>{1, 2, -1, 0});
  const SimplicialComplex rp2 = SimplicialComplex::from_facets(kRP2);
  CHECK(rp2.h_vector() == std::vector<std::int64_t>{1, 3, 6, 0});
}

TEST_CASE("enumeration agrees with the closure oracle") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const SimplicialComplex c = random_small(rng);
    const auto faces = oracle_faces(c);
    CHECK(c.num_faces() == faces.size());
    for (Face f : c.faces()) CHECK(faces.count(f.vertices()) == 1);
    if (c.is_void()) continue;
    const auto f = oracle::f_vector(faces);
    CHECK(c.f_vector() == f);
    CHECK(c.h_vector() == oracle::h_from_f(f));
    CHECK(f_from_h(c.h_vector()) == c.f_vector());
    // downward closure
    for (Face g : c.faces())
      for (int v : g.vertices()) CHECK(c.contains(g.minus(Face::vertex(v))));
  }
}

TEST_CASE("canonical order within a dimension") {
  const SimplicialComplex s = SimplicialComplex::simplex(5);
  for (int i = 0; i <= 4; ++i) {
    const auto& fs = s.faces_of_dim(i);
    for (std::size_t k = 1; k < fs.size(); ++k) CHECK(fs[k - 1].vertices() < fs[k].vertices());
    for (std::size_t k = 0; k < fs.size(); ++k) CHECK(s.face_index(fs[k]) == static_cast<int>(k));
  }
}

TEST_CASE("links") {
  const SimplicialComplex rp2 = SimplicialComplex::from_facets(kRP2);
  CHECK(rp2.link(Face()) == rp2);
  for (int v : rp2.vertices()) {
    const SimplicialComplex l = rp2.link(Face::vertex(v));
    CHECK(l.f_vector() == std::vector<std::int64_t>{1, 5, 5});
    // pentagon: every vertex of the link lies on exactly two edges
    for (int u : l.vertices()) {
      int deg = 0;
      for (Face e : l.faces_of_dim(1)) deg += e.contains(u) ? 1 : 0;
      CHECK(deg == 2);
    }
  }
  const SimplicialComplex bowtie = named({"abc", "cde"});
  const SimplicialComplex lc = bowtie.link(Face::vertex(bowtie.vertex_index("c")));
  CHECK(lc.named_facets() == std::vector<std::vector<std::string>>{{"a", "b"}, {"d", "e"}});
  CHECK_THROWS(bowtie.link(Face::of({0, 4})));
  // link of a facet is {∅}
  CHECK(bowtie.link(bowtie.facets()[0]).is_empty_complex());
}

TEST_CASE("contrastars") {
  const SimplicialComplex s = named({"abc", "abd", "acd", "bcd"});
  CHECK(s.contrastar(Face()).is_void());
  const SimplicialComplex ca = s.contrastar(Face::vertex(s.vertex_index("a")));
  CHECK(ca.named_facets() == std::vector<std::vector<std::string>>{{"b", "c", "d"}});
  const SimplicialComplex bowtie = named({"abc", "cde"});
  const SimplicialComplex cc = bowtie.contrastar(Face::vertex(bowtie.vertex_index("c")));
  CHECK(cc.named_facets() == std::vector<std::vector<std::string>>{{"a", "b"}, {"d", "e"}});
  CHECK(cc.num_faces() == 7);
}

TEST_CASE("star and contrastar partition the faces") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const SimplicialComplex c = random_small(rng);
    for (Face f : c.faces()) {
      std::size_t star = 0;
      for (Face g : c.faces()) star += f.subset_of(g) ? 1 : 0;
      CHECK(star + c.contrastar(f).num_faces() == c.num_faces());
    }
  }
}

TEST_CASE("cone, suspension, join") {
  const SimplicialComplex s0 = SimplicialComplex::from_facets(std::vector<std::vector<int>>{{1}, {2}});
  const SimplicialComplex s1 = s0.suspension();
  CHECK(s1.f_vector() == std::vector<std::int64_t>{1, 4, 4});
  for (int v : s1.vertices()) CHECK(s1.link(Face::vertex(v)).f_vector() == std::vector<std::int64_t>{1, 2});
  CHECK(s1.vertex_names() == std::vector<std::string>{"1", "2", "3", "4"});
  const SimplicialComplex letters = named({"ab", "bc"});
  CHECK(letters.suspension().vertex_names() == std::vector<std::string>{"a", "b", "c", "N", "S"});
  CHECK(letters.cone().f_vector() == std::vector<std::int64_t>{1, 4, 5, 2});
  CHECK(SimplicialComplex::empty_complex().cone().f_vector() == std::vector<std::int64_t>{1, 1});
  CHECK(s0.join(s0).f_vector() == std::vector<std::int64_t>{1, 4, 4});
  CHECK(s0.join(SimplicialComplex::empty_complex()) == s0);
}

TEST_CASE("suspension shifts f and h") {
  std::mt19937_64 rng(3);
  std::vector<SimplicialComplex> pop = {SimplicialComplex::from_facets(kRP2), SimplicialComplex::boundary_simplex(2),
                                        named({"abc", "cde"}), named({"ab", "cd"})};
  for (int t = 0; t < 100; ++t) {
    SimplicialComplex c = random_small(rng);
    if (!c.is_void() && c.universe_size() <= 28) pop.push_back(c);
  }
  for (const auto& g : pop) {
    const SimplicialComplex s = g.suspension();
    const auto fg = g.f_vector();
    const auto fs = s.f_vector();
    const auto hg = g.h_vector();
    const auto hs = s.h_vector();
    REQUIRE(fs.size() == fg.size() + 1);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const std::int64_t a = k < fg.size() ? fg[k] : 0;
      const std::int64_t b = k >= 1 ? fg[k - 1] : 0;
      CHECK(fs[k] == a + 2 * b);
      const std::int64_t x = k < hg.size() ? hg[k] : 0;
      const std::int64_t y = k >= 1 ? hg[k - 1] : 0;
      CHECK(hs[k] == x + y);
    }
  }
}

TEST_CASE("purity") {
  CHECK(named({"abc", "cde"}).is_pure());
  CHECK_FALSE(named({"abc", "de"}).is_pure());
  CHECK(SimplicialComplex::boundary_simplex(4).is_pure());
}

TEST_CASE("vertex ordering") {
  const SimplicialComplex c = SimplicialComplex::from_facets(std::vector<std::vector<int>>{{10, 2}, {2, 3}});
  CHECK(c.vertex_names() == std::vector<std::string>{"2", "3", "10"});
  const SimplicialComplex d = named({"cb", "ba"});
  CHECK(d.vertex_names() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("facet text parser") {
  const SimplicialComplex c = parse_facet_text_string("# bowtie\na b c\n\nc d e  # second\n");
  CHECK(c == named({"abc", "cde"}));
  try {
    parse_facet_text_string("1 2 3\n2 3 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(parse_facet_text_string("").is_void());
  const SimplicialComplex rp2 = SimplicialComplex::from_facets(kRP2);
  CHECK(parse_facet_text_string(to_facet_text(rp2)) == rp2);
}

TEST_CASE("json parser") {
  const SimplicialComplex c = parse_complex_json(R"({"vertices": ["a","b","c","d","e"], "facets": [["a","b","c"],["c","d","e"]]})");
  CHECK(c == named({"abc", "cde"}));
  CHECK(parse_complex_json(R"({"facets": [[1,2],[2,3]]})").f_vector() == std::vector<std::int64_t>{1, 3, 2});
  CHECK(parse_complex_json(R"({"facets": [[]]})").is_empty_complex());
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [[1,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"vertices": [1], "facets": [[1,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json("[1,2"), ParseError);
  const SimplicialComplex rp2 = SimplicialComplex::from_facets(kRP2);
  CHECK(parse_complex_json(to_json_text(rp2)) == rp2);
}
