#include <numeric>
#include <set>

#include "cleangraph/clean_graph.hpp"
#include "cleangraph/error.hpp"
#include "cleangraph/iso.hpp"
#include "cleangraph/theorems.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cleangraph;

namespace {

Graph path(std::size_t n) {
  GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

// Cayley graph on Z_m x Z_m with the given connection set (closed under -).
Graph cayley_square(std::uint32_t m,
                    const std::vector<std::pair<int, int>>& gens) {
  GraphBuilder b;
  for (std::uint32_t v = 0; v < m * m; ++v) b.add_vertex(std::to_string(v));
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      for (auto [dx, dy] : gens) {
        const std::uint32_t x2 = (x + m + dx) % m, y2 = (y + m + dy) % m;
        if (x2 * m + y2 != x * m + y) b.add_edge(x * m + y, x2 * m + y2);
      }
    }
  }
  return std::move(b).build();
}

// K_m box K_m: same row or same column.
Graph rook(std::uint32_t m) {
  std::vector<std::pair<int, int>> gens;
  for (int d = 1; d < static_cast<int>(m); ++d) {
    gens.push_back({d, 0});
    gens.push_back({0, d});
  }
  return cayley_square(m, gens);
}

Graph shrikhande() {
  return cayley_square(
      4, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
}

std::size_t brute_automorphisms(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.order() && ok; ++u) {
      for (Vertex v = u + 1; v < g.order() && ok; ++v) {
        ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("fingerprints") {
  const Graph g = disjoint_union(empty_graph(2), copies(2, complete_graph(2)));
  const Fingerprint fp = fingerprint(g);
  CHECK(fp.order == 6);
  CHECK(fp.size == 2);
  REQUIRE(fp.components.size() == 4);
  CHECK(fp.components[0].order == 1);
  CHECK(fp.components[1].order == 1);
  CHECK(fp.components[2].order == 2);
  CHECK(fp.components[3].size == 1);

  const auto diff = first_difference(
      fingerprint(complete_graph(3)),
      fingerprint(disjoint_union(complete_graph(2), complete_graph(1))));
  CHECK(diff == "size");
  CHECK(first_difference(fingerprint(cl2(analyze(make_zn(7))).graph),
                         fingerprint(cl2(analyze(make_zn(9))).graph)) ==
        std::nullopt);
}

TEST_CASE("connected components") {
  const Graph g = disjoint_union(path(3), complete_graph(2));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[1] == std::vector<Vertex>{3, 4});
}

TEST_CASE("basic verdicts") {
  CHECK(is_isomorphic(cl2(analyze(make_zn(3))).graph,
                      cl2(analyze(make_zn(4))).graph)
            .isomorphic());
  CHECK(is_isomorphic(cl2(analyze(build_ring(RingSpec::product(
                              RingSpec::zn(3), RingSpec::zn(3)))))
                          .graph,
                      cl2(analyze(make_zn(12))).graph)
            .isomorphic());
  const IsoResult r = is_isomorphic(complete_graph(3), path(3));
  CHECK_FALSE(r.isomorphic());
  CHECK(r.screened_by.has_value());
  CHECK(is_isomorphic(empty_graph(0), empty_graph(0)).isomorphic());
}

TEST_CASE("strongly regular graphs defeat refinement but not the search") {
  // Both SRG(16,6,2,2); refinement cannot split either.
  const Graph a = rook(4);
  const Graph b = shrikhande();
  REQUIRE(a.degree_sequence() == b.degree_sequence());
  const IsoResult r = is_isomorphic(a, b);
  CHECK_FALSE(r.isomorphic());
  CHECK_FALSE(r.screened_by.has_value());

  std::mt19937_64 rng(support::kSeed);
  const Graph shuffled = b.relabeled(support::random_permutation(16, rng));
  const IsoResult yes = is_isomorphic(b, shuffled);
  REQUIRE(yes.isomorphic());
  CHECK(verify_bijection(b, shuffled, *yes.witness).ok);

  try {
    is_isomorphic(a, b, 1);
    FAIL("expected an inconclusive result");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInconclusive);
  }
}

TEST_CASE("verdicts agree with brute force on small random graphs") {
  std::mt19937_64 rng(support::kSeed + 3);
  int isomorphic = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 7;
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Graph a = support::random_graph(n, p, rng);
    const Graph b = (round % 3 == 0)
                        ? a.relabeled(support::random_permutation(n, rng))
                        : support::random_graph(n, p, rng);
    const bool expect = support::brute_isomorphic(a, b);
    const IsoResult r = is_isomorphic(a, b);
    CHECK(r.isomorphic() == expect);
    CHECK(is_isomorphic(b, a).isomorphic() == expect);
    if (r.isomorphic()) {
      ++isomorphic;
      CHECK(verify_bijection(a, b, *r.witness).ok);
    }
  }
  CHECK(isomorphic > 100);
}

TEST_CASE("automorphism counts match brute force") {
  CHECK(all_isomorphisms(complete_graph(2), complete_graph(2), 100).maps.size() ==
        2);
  CHECK(all_isomorphisms(empty_graph(2), empty_graph(2), 100).maps.size() == 2);
  std::mt19937_64 rng(support::kSeed + 4);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = support::random_graph(n, 0.5, rng);
    const IsoEnumeration all = all_isomorphisms(g, g, 10'000);
    CHECK_FALSE(all.truncated);
    CHECK(all.maps.size() == brute_automorphisms(g));
    std::set<std::vector<Vertex>> distinct(all.maps.begin(), all.maps.end());
    CHECK(distinct.size() == all.maps.size());
    for (const auto& m : all.maps) CHECK(verify_bijection(g, g, m).ok);
  }
}

TEST_CASE("enumeration cap and guard") {
  const IsoEnumeration five = all_isomorphisms(complete_graph(5),
                                               complete_graph(5), 10);
  CHECK(five.maps.size() == 10);
  CHECK(five.truncated);
  try {
    all_isomorphisms(empty_graph(65), empty_graph(65), 1);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudget);
  }
  CHECK(all_isomorphisms(complete_graph(3), path(3), 10).maps.empty());
}

TEST_CASE("isomorphisms between Cl2(Z7) and Cl2(Z9) keep involution classes") {
  const RingTables a = analyze(make_zn(7)), b = analyze(make_zn(9));
  const CleanGraph ga = cl2(a), gb = cl2(b);
  const IsoEnumeration all = all_isomorphisms(ga.graph, gb.graph, 1000);
  // 2K1 u 2K2: 2 ways on the isolated pair, 2 * 2 * 2 on the edges.
  CHECK(all.maps.size() == 16);
  for (const auto& m : all.maps) {
    for (Vertex v = 0; v < m.size(); ++v) {
      CHECK(a.unit.is_involution(ga.vertices[v].u) ==
            b.unit.is_involution(gb.vertices[m[v]].u));
    }
  }
}

TEST_CASE("verify_bijection") {
  const CleanGraph z12 = cl2(analyze(make_zn(12)));
  std::vector<Vertex> id(z12.graph.order());
  std::iota(id.begin(), id.end(), 0);
  CHECK(verify_bijection(z12.graph, z12.graph, id).ok);

  // 2K1 u 2K2 with vertices 0, 1 isolated and edges {2,3}, {4,5}.
  const Graph g = disjoint_union(empty_graph(2), copies(2, complete_graph(2)));
  std::vector<Vertex> swap = {0, 2, 1, 3, 4, 5};
  const BijectionCheck bad = verify_bijection(g, g, swap);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violation.has_value());

  try {
    verify_bijection(g, g, std::vector<Vertex>{0, 0, 1, 2, 3, 4});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
  CHECK_THROWS_AS(verify_bijection(g, g, std::vector<Vertex>{0, 1}), Error);
}

TEST_CASE("relabeling invariance on catalog Cl2 graphs") {
  std::mt19937_64 rng(support::kSeed + 5);
  for (const RingSpec& s : RingCatalog::default_catalog().rings) {
    CAPTURE(to_string(s));
    const Graph g = cl2(analyze(build_ring(s))).graph;
    CHECK(is_isomorphic(g, g).isomorphic());
    for (int round = 0; round < 5; ++round) {
      const Graph h = g.relabeled(support::random_permutation(g.order(), rng));
      const IsoResult r = is_isomorphic(g, h);
      REQUIRE(r.isomorphic());
      CHECK(verify_bijection(g, h, *r.witness).ok);
    }
  }
}
