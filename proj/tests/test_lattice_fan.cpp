#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "trinion/lattice_fan.hpp"

using namespace trinion;
using trinion::testing::dumbbell;
using trinion::testing::k4;
using trinion::testing::unit_cube_rows;

namespace {

const Rational kHalf(1, 2);

const QMatrix kMatrixA =
    QMatrix::from_rows(std::vector<ZVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

std::set<ZVector> ray_set(const Fan& f) { return {f.rays.begin(), f.rays.end()}; }

// Standard simplex in R^3: x_i >= 0, x1+x2+x3 <= 1.
HPolytope simplex3() { return HPolytope(3, {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}, {{1, 1, 1}, 1}}); }

}  // namespace

TEST_CASE("build_lattice for theta 2") {
  const Lattice l = build_lattice(multi_theta(2));
  // |det| of the basis v_i = g - e_i by cofactor expansion.
  const testing::Table v{{-kHalf, kHalf, kHalf}, {kHalf, -kHalf, kHalf}, {kHalf, kHalf, -kHalf}};
  CHECK(abs(testing::cofactor_det(v)) == kHalf);
  CHECK(l.covolume() == kHalf);
  CHECK(is_lattice_point({kHalf, kHalf, kHalf}, l));
  CHECK_FALSE(is_lattice_point({kHalf, 0, 0}, l));
  CHECK(is_lattice_point({0, 0, 0}, l));
  for (const auto& row : v) CHECK(is_lattice_point(row, l));
  CHECK_THROWS_AS(is_lattice_point({0, 0}, l), std::invalid_argument);
}

TEST_CASE("covolume matches the mod-2 incidence rank") {
  CHECK(build_lattice(multi_theta(3)).covolume() == testing::covolume_from_gf2(multi_theta(3)));
  CHECK(build_lattice(multi_theta(3)).covolume() == Rational(1, 8));
  CHECK(build_lattice(k4()).covolume() == testing::covolume_from_gf2(k4()));
  CHECK(build_lattice(dumbbell()).covolume() == testing::covolume_from_gf2(dumbbell()));
}

TEST_CASE("random graphs: Z^n in Λ in (Z/2)^n, covolume, generator-order invariance") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t g = 2 + trial % 5;
    const auto graph = testing::random_trivalent_graph(rng, g);
    const Lattice l = build_lattice(graph);
    const std::size_t n = graph.edge_count();

    for (std::size_t i = 0; i < n; ++i) {
      QVector e(n);
      e[i] = 1;
      CHECK(l.contains(e));
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (const auto& x : l.basis().row(r)) CHECK(Rational(x * 2).get_den() == 1);
    }
    CHECK(l.covolume() == testing::covolume_from_gf2(graph));
    Rational c = l.covolume();
    std::size_t k = 0;
    while (c < 1) {
      c *= 2;
      ++k;
    }
    CHECK(c == 1);
    CHECK(k <= 2 * g - 2);

    auto gens = l.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    const Lattice shuffled = Lattice::from_generators(n, gens);
    CHECK(shuffled.covolume() == l.covolume());
    CHECK(shuffled.basis() == l.basis());
    for (int probe = 0; probe < 5; ++probe) {
      QVector x(n);
      for (auto& xi : x) xi = Rational(static_cast<int>(rng() % 5) - 2, 2);
      CHECK(shuffled.contains(x) == l.contains(x));
    }
  }
}

TEST_CASE("dual lattice") {
  const Lattice l = build_lattice(multi_theta(2));
  const Lattice d = l.dual();
  CHECK(d.covolume() == 2);
  CHECK(d.dual().basis() == l.basis());
  // y is in the dual iff y·b is an integer for every basis vector b.
  CHECK(d.contains({1, 1, 0}));
  CHECK_FALSE(d.contains({1, 0, 0}));
  CHECK(Lattice::standard(4).dual().basis() == Lattice::standard(4).basis());
  CHECK_THROWS_AS(Lattice::from_generators(2, {{1, 0}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("is_lattice_polytope") {
  const auto h = build_hrep(multi_theta(2));
  const auto v = enumerate_vertices(h);
  CHECK(is_lattice_polytope(v, build_lattice(multi_theta(2))).is_lattice_polytope);
  CHECK(is_lattice_polytope(v, Lattice::standard(3)).is_lattice_polytope);

  const HPolytope half_square(2, {{{2, 0}, 1}, {{-1, 0}, 0}, {{0, 2}, 1}, {{0, -1}, 0}});
  const auto check = is_lattice_polytope(enumerate_vertices(half_square), Lattice::standard(2));
  CHECK_FALSE(check.is_lattice_polytope);
  REQUIRE(check.offending_vertex.has_value());
  // First non-integral vertex in lexicographic order.
  CHECK(*check.offending_vertex == QVector{0, kHalf});
}

TEST_CASE("normal_fan") {
  const auto h2 = build_hrep(multi_theta(2));
  const Fan f = normal_fan(h2, enumerate_vertices(h2));
  CHECK(ray_set(f) == std::set<ZVector>{{-1, -1, -1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}});
  CHECK(f.cones.size() == 4);
  for (const auto& c : f.cones) CHECK(c.size() == 3);

  const HPolytope cube(3, unit_cube_rows(3));
  const Fan fc = normal_fan(cube, enumerate_vertices(cube));
  CHECK(ray_set(fc) == std::set<ZVector>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(fc.cones.size() == 8);
  for (const auto& c : fc.cones) CHECK(c.size() == 3);

  const auto h3 = build_hrep(multi_theta(3));
  const auto v3 = enumerate_vertices(h3);
  const Fan f3 = normal_fan(h3, v3);
  CHECK(f3.rays.size() == 16);
  CHECK(f3.cones[*v3.find(QVector(6))].size() == 12);
}

TEST_CASE("normal fan cones are full-dimensional, one per vertex") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto graph = testing::random_trivalent_graph(rng, 2 + trial % 2);
    const auto h = build_hrep(graph);
    const auto v = enumerate_vertices(h);
    const Fan f = normal_fan(h, v);
    CHECK(f.cones.size() == v.vertex_count());
    for (const auto& cone : f.cones) {
      std::vector<ZVector> rays;
      for (auto k : cone) rays.push_back(f.rays[k]);
      CHECK(rank(QMatrix::from_rows(rays)) == h.ambient_dim());
    }
    for (const auto& r : f.rays) CHECK(primitive(r) == r);
    CHECK(ray_set(f).size() == f.rays.size());
  }
}

TEST_CASE("map_fan") {
  const auto h2 = build_hrep(multi_theta(2));
  const Fan f = normal_fan(h2, enumerate_vertices(h2));

  const Fan mapped = map_fan(f, kMatrixA);
  CHECK(ray_set(mapped) == std::set<ZVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  CHECK(mapped.cones == f.cones);

  const Fan same = map_fan(f, QMatrix::identity(3));
  CHECK(same.rays == f.rays);

  const HPolytope cube(3, unit_cube_rows(3));
  const Fan fc = map_fan(normal_fan(cube, enumerate_vertices(cube)), kMatrixA);
  CHECK(ray_set(fc) ==
        std::set<ZVector>{{0, 1, 1}, {0, -1, -1}, {1, 0, 1}, {-1, 0, -1}, {1, 1, 0}, {-1, -1, 0}});

  const auto singular = QMatrix::from_rows(std::vector<ZVector>{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(map_fan(f, singular), std::invalid_argument);
  CHECK_THROWS_AS(map_fan(f, QMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("fan-side smoothness") {
  const auto h2 = build_hrep(multi_theta(2));
  const Fan f = normal_fan(h2, enumerate_vertices(h2));
  CHECK(fan_is_smooth(f, build_lattice(multi_theta(2))));
  CHECK_FALSE(fan_is_smooth(f, Lattice::standard(3)));
  CHECK(fan_is_smooth(map_fan(f, kMatrixA), Lattice::standard(3)));
}

TEST_CASE("delzant_check") {
  SUBCASE("theta 2 is smooth") {
    const auto h = build_hrep(multi_theta(2));
    const auto d = delzant_check(h, enumerate_vertices(h), build_lattice(multi_theta(2)));
    CHECK(d.simplicity.simple);
    CHECK(d.lattice_polytope);
    CHECK(d.smooth);
    CHECK(d.overall == Overall::Smooth);
  }
  SUBCASE("theta 3 is singular at the origin") {
    const auto h = build_hrep(multi_theta(3));
    const auto d = delzant_check(h, enumerate_vertices(h), build_lattice(multi_theta(3)));
    CHECK(d.overall == Overall::Singular);
    CHECK_FALSE(d.simplicity.simple);
    CHECK(*d.simplicity.witness == QVector(6));
    CHECK(d.simplicity.witness_facets == 12);
    CHECK(d.smooth_witness == d.simplicity.witness);
  }
  SUBCASE("standard simplex and cube are smooth over Z^n") {
    const auto s = simplex3();
    CHECK(delzant_check(s, enumerate_vertices(s), Lattice::standard(3)).overall == Overall::Smooth);
    const HPolytope cube(3, unit_cube_rows(3));
    CHECK(delzant_check(cube, enumerate_vertices(cube), Lattice::standard(3)).overall == Overall::Smooth);
  }
  SUBCASE("simple but not smooth") {
    // Triangle (0,0), (1,0), (1,2): edges (1,0) and (1,2) at the origin.
    const HPolytope tri(2, {{{0, -1}, 0}, {{1, 0}, 1}, {{-2, 1}, 0}});
    const auto d = delzant_check(tri, enumerate_vertices(tri), Lattice::standard(2));
    CHECK(d.simplicity.simple);
    CHECK_FALSE(d.smooth);
    CHECK(d.overall == Overall::Singular);
    CHECK(*d.smooth_witness == QVector{0, 0});
    CHECK(abs(*d.witness_det) == 2);
  }
}

TEST_CASE("polytope-side and fan-side smoothness agree") {
  std::mt19937 rng(2024);
  int simple_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    if (trial % 2 == 0) {
      const auto graph = testing::random_trivalent_graph(rng, 2 + trial % 3);
      const auto h = build_hrep(graph);
      const auto v = enumerate_vertices(h);
      const Lattice l = build_lattice(graph);
      const auto d = delzant_check(h, v, l);
      CHECK((d.overall == Overall::Smooth) == fan_is_smooth(normal_fan(h, v), l));
      simple_seen += d.simplicity.simple ? 1 : 0;
    } else {
      const std::size_t n = 2 + trial % 3;
      const auto h = testing::random_box_system(rng, n);
      const auto v = enumerate_vertices(h);
      if (v.dimension() != static_cast<int>(n)) continue;
      const Lattice z = Lattice::standard(n);
      const auto d = delzant_check(h, v, z);
      CHECK((d.overall == Overall::Smooth) == fan_is_smooth(normal_fan(h, v), z));
      simple_seen += d.simplicity.simple ? 1 : 0;
    }
  }
  CHECK(simple_seen > 10);
}

TEST_CASE("verdicts are invariant under edge relabelling") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto graph = testing::random_trivalent_graph(rng, 2 + trial % 3);
    const auto relabelled = testing::permute_edges(graph, testing::random_permutation(rng, graph.edge_count()));
    const auto a = singularity_report(graph);
    const auto b = singularity_report(relabelled);
    CHECK(a.verdict.overall == b.verdict.overall);
    CHECK(a.verdict.simplicity.simple == b.verdict.simplicity.simple);
    CHECK(a.verdict.lattice_polytope == b.verdict.lattice_polytope);
    CHECK(a.lattice.covolume() == b.lattice.covolume());
    CHECK(a.vrep.vertex_count() == b.vrep.vertex_count());
  }
}

TEST_CASE("non-simple polytopes short-circuit with the simplicity witness") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = singularity_report(testing::random_trivalent_graph(rng, 2 + trial % 3));
    if (r.verdict.simplicity.simple) continue;
    CHECK(r.verdict.overall == Overall::Singular);
    CHECK(r.verdict.smooth_witness == r.verdict.simplicity.witness);
    CHECK_FALSE(r.verdict.witness_det.has_value());
  }
}

TEST_CASE("singularity_report") {
  const auto t4 = singularity_report(multi_theta(4));
  CHECK(t4.verdict.overall == Overall::Singular);
  CHECK(t4.origin_argument_applies);

  const auto k = singularity_report(k4());
  CHECK(k.verdict.overall == Overall::Singular);
  CHECK(k.origin_argument_applies);

  const auto t2 = singularity_report(multi_theta(2));
  CHECK(t2.verdict.overall == Overall::Smooth);
  CHECK_FALSE(t2.origin_argument_applies);

  CHECK_FALSE(singularity_report(dumbbell()).origin_argument_applies);
}
