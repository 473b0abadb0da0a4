#include <random>

#include "doctest.h"
#include "lyu/graph/graph.hpp"
#include "lyu/resolution/quotient.hpp"
#include "lyu/simplicial/complex.hpp"
#include "oracles.hpp"

using namespace lyu;

namespace {

const FieldSpec kFields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(32003)};

std::vector<std::size_t> oracle_homology(const SimplicialComplex& k, const FieldSpec& f) {
  std::vector<VarSet> faces;
  for (const auto& level : k.faces()) faces.insert(faces.end(), level.begin(), level.end());
  return with_field(f, [&](const auto& field) { return oracle::reduced_homology(field, faces, k.ground_size()); });
}

}  // namespace

TEST_CASE("Stanley-Reisner complex of C_4") {
  const auto k = stanley_reisner_complex(edge_ideal(cycle(4)));
  CHECK(k.facets() == std::vector<VarSet>{0b0101, 0b1010});
  CHECK(k.dimension() == 1);
  CHECK(to_ideal(k, VariableContext(4)) == edge_ideal(cycle(4)));
}

TEST_CASE("void and empty complexes") {
  CHECK(SimplicialComplex::void_complex(3).dimension() == -2);
  CHECK(SimplicialComplex::empty_complex(3).dimension() == -1);
  CHECK(reduced_homology_dims(SimplicialComplex::empty_complex(3))[0] == 1);
  CHECK_THROWS_AS(reduced_homology_dims(SimplicialComplex::void_complex(3)), DomainError);
}

TEST_CASE("links") {
  const auto k = stanley_reisner_complex(edge_ideal(cycle(5)));
  const auto l = link(k, 0b00001);
  CHECK(l.facets() == std::vector<VarSet>{0b00100, 0b01000});
  CHECK_THROWS_AS(link(k, 0b00011), DomainError);
}

TEST_CASE("homology of small spaces") {
  // circle as the boundary of a triangle
  const SimplicialComplex circle(3, {0b011, 0b110, 0b101});
  CHECK(reduced_homology_dims(circle) == std::vector<std::size_t>{0, 0, 1});
  // two points
  const SimplicialComplex two(2, {0b01, 0b10});
  CHECK(reduced_homology_dims(two) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("real projective plane: homology depends on the characteristic") {
  // 6-vertex triangulation
  const std::vector<std::vector<int>> tris{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<VarSet> facets;
  for (const auto& t : tris) facets.push_back(VarSet{1} << t[0] | VarSet{1} << t[1] | VarSet{1} << t[2]);
  const SimplicialComplex rp2(6, facets);
  CHECK(reduced_homology_dims(rp2, FieldSpec::rationals()) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(reduced_homology_dims(rp2, FieldSpec::prime(2)) == std::vector<std::size_t>{0, 0, 1, 1});
  const auto I = to_ideal(rp2, VariableContext(6));
  CHECK(is_cohen_macaulay(I, FieldSpec::rationals()));
  CHECK_FALSE(is_cohen_macaulay(I, FieldSpec::prime(2)));
  CHECK(depth_lc(I, FieldSpec::prime(2)) == depth_ab(I, FieldSpec::prime(2)));
  CHECK(betti_hochster(I, FieldSpec::prime(2)) == resolve_quotient(I, FieldSpec::prime(2)).betti);
}

TEST_CASE("reduced homology against the dense oracle on random complexes") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto I = oracle::random_squarefree_ideal(rng, 4 + t % 3, 5);
    const auto k = stanley_reisner_complex(I);
    for (const auto& f : kFields) {
      auto expected = oracle_homology(k, f);
      expected.resize(static_cast<std::size_t>(k.dimension() + 2));
      CHECK(reduced_homology_dims(k, f) == expected);
    }
  }
}

TEST_CASE("local cohomology against the Cech complex, exhaustive corpus") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& I : oracle::all_squarefree_ideals(n))
      for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        const auto lc = local_cohomology_dims(I, f);
        const auto cech = with_field(f, [&](const auto& field) { return oracle::local_cohomology(field, I); });
        CHECK(lc.entries == cech);
        const int d = height_dim(I).dimension;
        CHECK_FALSE(lc.vanishes(d));
      }
}

TEST_CASE("depth: C_n, the unmixed parts and the n=7 family ideal") {
  CHECK(depth_lc(edge_ideal(cycle(4))) == 1);
  CHECK(is_cohen_macaulay(edge_ideal(cycle(3))));
  CHECK(is_cohen_macaulay(edge_ideal(cycle(5))));
  CHECK(depth_lc(unmixed_part(edge_ideal(cycle(6)))) == 1);
  CHECK(depth_lc(unmixed_part(edge_ideal(cycle(7)))) == 2);
  const auto f = odd_cycle_cover_families(3);
  std::vector<MonomialIdeal> primes;
  for (const auto& c : f.s_family) primes.push_back(MonomialIdeal::prime(VariableContext(7), from_vertices(c)));
  CHECK(depth_lc(intersect_all(primes)) == 3);
  CHECK(depth_ab(intersect_all(primes)) == 3);
}

TEST_CASE("local cohomology of the unmixed parts of C_6 and C_7") {
  const auto u6 = local_cohomology_dims(unmixed_part(edge_ideal(cycle(6))));
  CHECK_FALSE(u6.vanishes(1));
  CHECK(u6.vanishes(2));
  CHECK_FALSE(u6.vanishes(3));
  CHECK(u6.totals(6)[1] == 1);
  const auto u7 = local_cohomology_dims(unmixed_part(edge_ideal(cycle(7))));
  CHECK(u7.vanishes(1));
  CHECK_FALSE(u7.vanishes(2));
  CHECK_FALSE(u7.vanishes(3));
}

TEST_CASE("depth 0 only for the maximal ideal; depth 1 in dimension >= 2 exactly when disconnected") {
  std::mt19937 rng(9);
  for (int t = 0; t < 80; ++t) {
    const auto I = oracle::random_squarefree_ideal(rng, 3 + t % 4, 5);
    const auto k = stanley_reisner_complex(I);
    CHECK((depth_lc(I) == 0) == (k.dimension() == -1));
    if (k.dimension() < 1) continue;
    const auto h = reduced_homology_dims(k);
    CHECK((depth_lc(I) == 1) == (h[1] > 0));
  }
  CHECK(depth_lc(MonomialIdeal::prime(VariableContext(3), 0b111)) == 0);
}

TEST_CASE("Hochster Betti numbers") {
  CHECK(betti_hochster(edge_ideal(cycle(4))).totals() == std::vector<long>{1, 4, 4, 1});
  CHECK(betti_hochster(MonomialIdeal::from_supports(VariableContext(2), {0b11})).totals() == std::vector<long>{1, 1});
  CHECK(betti_hochster(MonomialIdeal::from_supports(VariableContext(2), {0b01, 0b10})).totals() ==
        std::vector<long>{1, 2, 1});
  std::mt19937 rng(13);
  for (int t = 0; t < 30; ++t) {
    const auto I = oracle::random_squarefree_ideal(rng, 5, 5);
    for (const auto& f : kFields)
      CHECK(betti_hochster(I, f) ==
            with_field(f, [&](const auto& field) { return oracle::hochster_betti(field, I); }));
  }
}
