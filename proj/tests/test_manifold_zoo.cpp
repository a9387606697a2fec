#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "bistellar/bistellar.hpp"
#include "oracles.hpp"

using namespace bistellar;

TEST_CASE("sphere generators", "[manifold_zoo]") {
  CHECK(f_vector(sphere_boundary(1)) == FVector(1, {3, 3}));
  CHECK(f_vector(sphere_boundary(2)) == FVector(2, {4, 6, 4}));
  CHECK(f_vector(sphere_boundary(3)) == FVector(3, {5, 10, 10, 5}));
  CHECK(f_vector(sphere_boundary(0)) == FVector(0, {2}));
  for (int n = 0; n <= 6; ++n) {
    const FVector f = f_vector(sphere_boundary(n));
    for (int k = 0; k <= n; ++k) CHECK(Rational(f.at(k)) == Rational(binomial(n + 2, k + 1)));
  }
  CHECK_THROWS_AS(sphere_boundary(-1), RangeError);
  CHECK(f_vector(simplex_complex(3)) == FVector(3, {4, 6, 4, 1}));
}

TEST_CASE("sphere joins", "[manifold_zoo]") {
  CHECK(isomorphic(sphere_join(0, 0), cycle(4)));
  CHECK(f_vector(sphere_join(1, 1)) == FVector(3, {6, 15, 18, 9}));
  CHECK(euler_characteristic(sphere_join(1, 1)) == 0);
  const FVector f = f_vector(sphere_join(2, 1));
  CHECK(f.n == 4);
  CHECK(5 * f.at(4) == 2 * f.at(3));
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q + p <= 4; ++q) {
      const Complex s = sphere_join(p, q);
      CHECK(s.dimension() == p + q + 1);
      CHECK(euler_characteristic(s) == 1 + ((p + q + 1) % 2 == 0 ? 1 : -1));
      const auto ds = dehn_sommerville(f_vector(s));
      CHECK(std::all_of(ds.begin(), ds.end(), [](const Rational& x) { return x == 0; }));
    }
  }
}

TEST_CASE("closed surfaces", "[manifold_zoo]") {
  CHECK(f_vector(torus7()) == FVector(2, {7, 21, 14}));
  CHECK(f_vector(rp2_6()) == FVector(2, {6, 15, 10}));
  CHECK(f_vector(icosahedron()) == FVector(2, {12, 30, 20}));
  CHECK(oracle::f_vector(icosahedron()) == FVector(2, {12, 30, 20}));
  for (const Complex& c : {torus7(), rp2_6(), icosahedron()}) CHECK(is_combinatorial_manifold(c) == Verdict::Verified);

  for (const auto& [ridge, containing] : ridge_incidence(rp2_6())) CHECK(containing.size() == 2);
  CHECK(faces(rp2_6(), 1).size() == 15);  // every pair of the six vertices is an edge

  for (VertexId v = 0; v < 12; ++v) CHECK(link(icosahedron(), Simplex{v}).facet_count() == 5);
}

TEST_CASE("icosahedron double-covers the projective plane", "[manifold_zoo]") {
  const Complex ico = icosahedron();
  const Complex rp2 = rp2_6();
  std::map<Simplex, int> preimages;
  for (const Simplex& f : ico.facets()) {
    const Simplex image = f.mapped(antipodal_class);
    CHECK(image.size() == 3);
    CHECK(rp2.has_facet(image));
    ++preimages[image];
  }
  CHECK(preimages.size() == rp2.facet_count());
  for (const auto& [facet, count] : preimages) CHECK(count == 2);
  for (VertexId v = 0; v < 6; ++v) CHECK_FALSE(ico.has_face(Simplex{v, v + 6}));
  CHECK(euler_characteristic(ico) == 2 * euler_characteristic(rp2));
}

TEST_CASE("connected sums", "[manifold_zoo]") {
  const Complex genus2 = connected_sum(torus7(), torus7());
  CHECK(f_vector(genus2) == FVector(2, {11, 39, 26}));
  CHECK(oracle::f_vector(genus2) == FVector(2, {11, 39, 26}));
  CHECK(euler_characteristic(genus2) == -2);
  CHECK(is_combinatorial_manifold(genus2) == Verdict::Verified);

  CHECK(euler_characteristic(connected_sum(icosahedron(), icosahedron())) == 2);
  CHECK(euler_characteristic(connected_sum(sphere_boundary(2), sphere_boundary(2).relabeled([](VertexId v) { return v + 1; }))) == 2);

  const Complex klein = connected_sum(rp2_6(), rp2_6());
  CHECK(oracle::f_vector(klein) == f_vector(klein));
  CHECK(euler_characteristic(klein) == 0);
  CHECK(is_combinatorial_manifold(klein) == Verdict::Verified);

  const Complex lens = connected_sum(sphere_boundary(3), sphere_join(1, 1));
  CHECK(euler_characteristic(lens) == 0);
  CHECK(is_combinatorial_manifold(lens) == Verdict::Verified);

  CHECK(euler_characteristic(connected_sum(cycle(5), cycle(4))) == 0);

  CHECK_THROWS_AS(connected_sum(torus7(), sphere_boundary(3)), DimensionError);
  CHECK_THROWS_AS(connected_sum(sphere_boundary(4), sphere_boundary(4)), DimensionError);
  CHECK_THROWS_AS(connected_sum(simplex_complex(2), torus7()), PreconditionError);
}

TEST_CASE("connected sum Euler characteristic is additive", "[manifold_zoo][property]") {
  const std::vector<Complex> surfaces = {sphere_boundary(2), torus7(), rp2_6(), join(sphere_boundary(0), cycle(4))};
  for (const Complex& x : surfaces) {
    for (const Complex& y : surfaces) {
      const Complex sum = connected_sum(x, y);
      CHECK(oracle::f_vector(sum).euler_characteristic() == euler_characteristic(x) + euler_characteristic(y) - 2);
      CHECK(is_combinatorial_manifold(sum) == Verdict::Verified);
    }
  }
}

TEST_CASE("generator specs", "[manifold_zoo]") {
  CHECK(named_complex("torus7") == torus7());
  CHECK(named_complex("sphere:3") == sphere_boundary(3));
  CHECK(named_complex("simplex:2") == simplex_complex(2));
  CHECK(named_complex("cycle:6") == cycle(6));
  CHECK(named_complex("join:1,2") == sphere_join(1, 2));
  CHECK(named_complex("consum:torus7,rp2_6") == connected_sum(torus7(), rp2_6()));
  CHECK(named_complex("consum:join:1,1,sphere:3") == connected_sum(sphere_join(1, 1), sphere_boundary(3)));
  CHECK_THROWS_AS(named_complex("klein"), ParseError);
  CHECK_THROWS_AS(named_complex("sphere:x"), ParseError);
  CHECK_THROWS_AS(named_complex("sphere:"), ParseError);
  CHECK_THROWS_AS(named_complex("join:3"), ParseError);
  CHECK_THROWS_AS(named_complex("consum:torus7"), ParseError);
}

TEST_CASE("zoo contents", "[manifold_zoo]") {
  const auto two = zoo(2);
  std::set<std::string> names;
  std::set<std::int64_t> chis;
  for (const ZooEntry& e : two) {
    names.insert(e.name);
    chis.insert(e.expected_chi);
  }
  CHECK(names.size() == two.size());
  CHECK(two.size() >= 6);
  CHECK(names.contains("consum:torus7,torus7"));
  CHECK(names.contains("torus7~walk2"));
  CHECK(chis == std::set<std::int64_t>{-2, -1, 0, 1, 2});

  for (const ZooEntry& e : zoo(3)) CHECK(euler_characteristic(e.complex) == 0);
  CHECK_THROWS_AS(zoo(0), RangeError);
  CHECK_THROWS_AS(zoo(6), RangeError);
}

TEST_CASE("zoo entries carry correct invariants", "[manifold_zoo][property]") {
  for (int n = 1; n <= 5; ++n) {
    const auto entries = zoo(n);
    for (const ZooEntry& e : entries) {
      INFO(e.name);
      const FVector f = f_vector(e.complex);
      CHECK(e.dimension == n);
      CHECK(f.euler_characteristic() == e.expected_chi);
      CHECK(universal_relation(n)(f) == 0);
      CHECK(closed_pseudomanifold_report(e.complex).ok());
      CHECK(e.verified == (n <= 3 ? Verdict::Verified : Verdict::Unknown));
    }
  }
}

TEST_CASE("walk variants agree on every invariant functional", "[manifold_zoo][property]") {
  for (int n = 1; n <= 4; ++n) {
    const auto basis = invariant_nullspace(n).basis;
    const auto entries = zoo(n);
    for (std::size_t i = 0; i < entries.size(); i += 4) {
      const FVector base = f_vector(entries[i].complex);
      for (std::size_t j = i + 1; j < i + 4; ++j) {
        INFO(entries[j].name);
        CHECK(entries[j].name.rfind(entries[i].name + "~walk", 0) == 0);
        const FVector variant = f_vector(entries[j].complex);
        for (const auto& v : basis) CHECK(v(variant) == v(base));
        CHECK(dehn_sommerville(variant) == dehn_sommerville(base));
      }
    }
  }
}

TEST_CASE("zoo is deterministic", "[manifold_zoo]") {
  const auto a = zoo(3);
  const auto b = zoo(3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].complex == b[i].complex);
  }
}
