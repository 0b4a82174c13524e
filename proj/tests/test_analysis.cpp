#include <random>
#include <stdexcept>

#include "doctest.h"

#include "conway/group_analysis.hpp"
#include "conway/move_table.hpp"

using namespace conway;

namespace {

MoveTable moves_of(const Design& d) {
  DesignStats s = validate(d);
  REQUIRE(s.is_supersimple);
  return MoveTable(d, collinearity_index(d, s));
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("stabilizer chain orders on known groups") {
  CHECK(stabilizer_chain({Perm::identity(5)}, 5).order() == 1);

  // Full symmetric groups from a transposition and a cycle.
  for (Pt n : {Pt{4}, Pt{6}, Pt{8}}) {
    std::vector<Pt> cyc(n);
    for (Pt i = 0; i < n; ++i) cyc[i] = static_cast<Pt>((i + 1) % n);
    auto chain = stabilizer_chain({Perm::transposition(n, 0, 1), Perm(cyc)}, n);
    CHECK(chain.order() == factorial(n));
    CHECK(transitivity_degree(chain) == n);
  }

  // Alternating group on 5 points from two even permutations.
  auto a5 = stabilizer_chain(
      {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}, 5);
  CHECK(a5.order() == 60);

  // Dihedral group of the square.
  auto d4 = stabilizer_chain(
      {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{1, 3}})}, 4);
  CHECK(d4.order() == 8);
}

TEST_CASE("chain membership agrees with explicit enumeration") {
  // A 3-cycle and the full odd-length cycle generate the alternating group.
  std::vector<Perm> gens{Perm::from_cycles(7, {{0, 1, 2}}),
                         Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})};
  auto chain = stabilizer_chain(gens, 7);
  CHECK(chain.order() == 2520);
  auto closure = enumerate_group(gens, 7, 1'000'000);
  REQUIRE(closure.complete);
  CHECK(closure.order == chain.order());
  for (std::uint32_t i = 0; i < closure.elements.size(); ++i)
    CHECK(chain.contains(closure.elements.perm_at(i)));
  // Odd permutations sift to a non-identity residue.
  CHECK_FALSE(chain.contains(Perm::transposition(7, 0, 1)));
}

TEST_CASE("random subgroups: chain order equals closure size") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Pt degree = static_cast<Pt>(5 + trial % 4);
    std::vector<Perm> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Pt> img(degree);
      for (Pt i = 0; i < degree; ++i) img[i] = i;
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Perm(std::move(img)));
    }
    auto chain = stabilizer_chain(gens, degree);
    auto closure = enumerate_group(gens, degree, 100'000);
    REQUIRE(closure.complete);
    CHECK(chain.order() == closure.order);
  }
}

TEST_CASE("orbit partition") {
  auto orbs = orbits({Perm::transposition(4, 0, 1)}, 4);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<Pt>{0, 1});
  CHECK(orbs[1] == std::vector<Pt>{2});
  CHECK(orbs[2] == std::vector<Pt>{3});
  CHECK_FALSE(is_transitive({Perm::transposition(4, 0, 1)}, 4));
}

TEST_CASE("transitivity and primitivity of small actions") {
  // The 4-cycle group is transitive but imprimitive.
  std::vector<Perm> c4{Perm::from_cycles(4, {{0, 1, 2, 3}})};
  CHECK(is_transitive(c4, 4));
  auto blocks = minimal_blocks(c4, 4);
  CHECK_FALSE(blocks.primitive);
  CHECK(blocks.block.size() == 2);

  // The symmetric group is primitive and 2-transitive.
  std::vector<Perm> s5{Perm::transposition(5, 0, 1), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})};
  CHECK(is_primitive(s5, 5));
  CHECK(is_2_transitive(s5, 5));

  CHECK_THROWS_AS(minimal_blocks({Perm::transposition(4, 0, 1)}, 4), std::invalid_argument);
}

TEST_CASE("translation groups are imprimitive") {
  // The moves of a Boolean system generate the translation group.
  MoveTable t = moves_of(boolean_design(3));
  auto reduced = reduce_generators(t.distinct_moves(), 8);
  CHECK(reduced.chain.order() == 8);
  CHECK(is_transitive(reduced.generators, 8));
  auto blocks = minimal_blocks(reduced.generators, 8);
  CHECK_FALSE(blocks.primitive);
  CHECK((blocks.block.size() == 2 || blocks.block.size() == 4));
}

TEST_CASE("moves of the orthogonal design generate the expected order") {
  MoveTable t = moves_of(orthogonal_design(2, Sign::plus));
  auto chain = stabilizer_chain(t.distinct_moves(), 10);
  CHECK(chain.order() == 720);  // symplectic group of rank 2
  CHECK(transitivity_degree(chain) >= 2);
  auto reduced = reduce_generators(t.distinct_moves(), 10);
  CHECK(reduced.chain.order() == 720);
  CHECK(is_primitive(reduced.generators, 10));
}

TEST_CASE("reduced generators span the same group") {
  for (Design d : {boolean_design(4), symplectic_design(2), projective_plane_3()}) {
    MoveTable t = moves_of(d);
    auto reduced = reduce_generators(t.distinct_moves(), d.n);
    CHECK(reduced.generators.size() <= t.distinct_moves().size());
    auto full = stabilizer_chain(t.distinct_moves(), d.n);
    CHECK(full.order() == reduced.chain.order());
  }
}

TEST_CASE("closure cap yields an incomplete result") {
  std::vector<Perm> s6{Perm::transposition(6, 0, 1), Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  auto capped = enumerate_group(s6, 6, 100);
  CHECK_FALSE(capped.complete);
  auto full = enumerate_group(s6, 6, 1000);
  CHECK(full.complete);
  CHECK(full.order == 720);
}

TEST_CASE("three-transposition flags across generator sets") {
  // Symplectic moves: a single class of involutions with product orders <= 3.
  MoveTable symp = moves_of(symplectic_design(2));
  auto chain_order = stabilizer_chain(symp.distinct_moves(), 16).order();
  auto rep = three_transposition_report(symp.distinct_moves(), chain_order);
  CHECK(rep.generates);
  CHECK(rep.class_closed);
  CHECK(rep.single_class);
  CHECK(rep.orders_ok);

  // Boolean translations commute: closed but split into singleton classes.
  MoveTable boole = moves_of(boolean_design(3));
  auto brep = three_transposition_report(boole.distinct_moves(), 8);
  CHECK(brep.generates);
  CHECK(brep.class_closed);
  CHECK(brep.orders_ok);
  CHECK_FALSE(brep.single_class);

  // Two transpositions of the symmetric group on 3 points: product order 3,
  // one conjugacy class, but the pair set is not closed under conjugation.
  std::vector<Perm> e{Perm::transposition(3, 0, 1), Perm::transposition(3, 1, 2)};
  auto srep = three_transposition_report(e, 6);
  CHECK(srep.generates);
  CHECK(srep.orders_ok);
  CHECK(srep.single_class);
  CHECK_FALSE(srep.class_closed);
}

TEST_CASE("chain order overflow is reported, not wrapped") {
  // The full symmetric group on 64 points exceeds 64-bit orders.
  std::vector<Pt> cyc(64);
  for (Pt i = 0; i < 64; ++i) cyc[i] = static_cast<Pt>((i + 1) % 64);
  auto chain = stabilizer_chain({Perm::transposition(64, 0, 1), Perm(cyc)}, 64);
  CHECK_THROWS_AS(chain.order(), std::overflow_error);
}
