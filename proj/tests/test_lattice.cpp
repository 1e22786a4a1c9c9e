#include "nlat/lattice.hpp"

#include <random>

#include "doctest.h"
#include "testutil.hpp"

using namespace nlat;

TEST_CASE("standard gram matrices match frozen references") {
  CHECK(standard_lattice("E8").gram == testutil::e8_gram_frozen());
  CHECK(standard_lattice("D4").gram == testutil::d4_gram_frozen());
  CHECK(standard_lattice("U").gram == testutil::u_gram_frozen());
  CHECK(standard_lattice("H").gram == testutil::u_gram_frozen());
  CHECK(standard_lattice("<1>").gram == IntMat{{1}});
  CHECK(standard_lattice("<-1>").gram == IntMat{{-1}});
}

TEST_CASE("form expression parsing") {
  SUBCASE("multiplicity and rescaling, whitespace-insensitive") {
    FormExpr e = parse_form(" 2*E8 +  3*U ");
    CHECK(e.rank() == 22);
    CHECK(e.str() == "2*E8 + 3*U");
    CHECK(parse_form("E8( 2 )").str() == "E8(2)");
    CHECK(parse_form("4*<-1>").rank() == 4);
    CHECK(parse_form("U(-1)").str() == "U(-1)");
  }
  SUBCASE("H is an alias for U") {
    CHECK(standard_lattice("2*H").gram == standard_lattice("2*U").gram);
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_form("E9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("0*U"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("-2*U"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("U(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("2**U"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("U +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("U(2"), std::invalid_argument);
  }
}

TEST_CASE("invariants: frozen examples") {
  SUBCASE("2*E8 + 3*U") {
    auto inv = invariants(standard_lattice("2*E8 + 3*U"));
    CHECK(inv.rank == 22);
    CHECK(inv.b_plus == 3);
    CHECK(inv.b_minus == 19);
    CHECK(inv.signature == -16);
    CHECK(inv.parity == Parity::Even);
    CHECK(inv.det == -1);
    CHECK(inv.unimodular);
  }
  SUBCASE("E8 + U") {
    auto inv = invariants(standard_lattice("E8 + U"));
    CHECK(inv.rank == 10);
    CHECK(inv.b_plus == 1);
    CHECK(inv.b_minus == 9);
    CHECK(inv.parity == Parity::Even);
    CHECK(inv.unimodular);
  }
  SUBCASE("odd definite") {
    auto inv = invariants(standard_lattice("4*<-1>"));
    CHECK(inv.rank == 4);
    CHECK(inv.signature == -4);
    CHECK(inv.parity == Parity::Odd);
    CHECK(inv.det == 1);
    CHECK(inv.unimodular);
  }
  SUBCASE("rescaled lattices") {
    CHECK(invariants(standard_lattice("U(2)")).det == -4);
    CHECK(invariants(standard_lattice("E8(2)")).det == 256);
    CHECK(invariants(standard_lattice("E8(2)")).parity == Parity::Even);
    CHECK(invariants(standard_lattice("E8(-1)")).b_plus == 8);
    // independent determinant oracle
    CHECK(invariants(standard_lattice("E8(2)")).det ==
          testutil::laplace_det(standard_lattice("E8(2)").gram));
  }
}

TEST_CASE("rescale and direct sum") {
  CHECK(rescale(standard_lattice("U"), 2).gram == standard_lattice("U(2)").gram);
  CHECK_THROWS_AS(rescale(standard_lattice("U"), 0), std::invalid_argument);
  SUBCASE("rescale by -1 swaps the signature") {
    Lattice l = standard_lattice("E8 + U");
    auto a = invariants(l);
    auto b = invariants(rescale(l, -1));
    CHECK(a.b_plus == b.b_minus);
    CHECK(a.b_minus == b.b_plus);
  }
  SUBCASE("sum with the empty lattice is the identity") {
    Lattice l = standard_lattice("E8");
    Lattice e;
    CHECK(direct_sum(l, e).gram == l.gram);
    CHECK(direct_sum(e, l).gram == l.gram);
  }
  SUBCASE("invariants add under direct sum") {
    std::mt19937_64 rng(20240817);
    const char* exprs[] = {"E8", "U", "D4(2)", "<1>", "2*<-1>", "U(3)"};
    for (int t = 0; t < 20; ++t) {
      Lattice a = standard_lattice(exprs[rng() % 6]);
      Lattice b = standard_lattice(exprs[rng() % 6]);
      auto ia = invariants(a), ib = invariants(b), is = invariants(direct_sum(a, b));
      CHECK(is.rank == ia.rank + ib.rank);
      CHECK(is.b_plus == ia.b_plus + ib.b_plus);
      CHECK(is.b_minus == ia.b_minus + ib.b_minus);
      CHECK(is.det == ia.det * ib.det);
    }
  }
}

TEST_CASE("characteristic vectors") {
  SUBCASE("zero vector is characteristic exactly in even lattices") {
    CHECK(is_characteristic(standard_lattice("U"), {0, 0}));
    CHECK(is_characteristic(standard_lattice("2*E8 + 3*U"), std::vector<Int>(22, 0)));
    CHECK_FALSE(is_characteristic(standard_lattice("<1>"), {0}));
  }
  SUBCASE("diagonal odd lattice") {
    CHECK(is_characteristic(standard_lattice("<1>"), {1}));
    CHECK(is_characteristic(standard_lattice("3*<-1>"), {1, 1, 1}));
    CHECK_FALSE(is_characteristic(standard_lattice("3*<-1>"), {1, 0, 1}));
  }
  SUBCASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(is_characteristic(standard_lattice("U"), {1}), std::invalid_argument);
  }
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(standard_lattice("E8")).invariant_factors.empty());
  CHECK(discriminant_group(standard_lattice("2*E8 + 3*U")).invariant_factors.empty());
  CHECK(discriminant_group(standard_lattice("D4")).invariant_factors ==
        std::vector<Int>{2, 2});
  CHECK(discriminant_group(standard_lattice("U(2)")).invariant_factors ==
        std::vector<Int>{2, 2});
  CHECK(discriminant_group(standard_lattice("E8(2)")).invariant_factors ==
        std::vector<Int>(8, 2));
  CHECK(discriminant_group(standard_lattice("E8(2)")).order() == 256);
  SUBCASE("degenerate input rejected") {
    Lattice l;
    l.gram = IntMat{{0}};
    l.label = "null";
    CHECK_THROWS_AS(discriminant_group(l), std::invalid_argument);
  }
  SUBCASE("order equals |det| for random nondegenerate forms") {
    std::mt19937_64 rng(20240818);
    for (int t = 0; t < 25; ++t) {
      IntMat g = testutil::random_symmetric(rng, 1 + t % 5, -4, 4);
      if (determinant(g) == 0) continue;
      Lattice l{g, "rnd"};
      CHECK(discriminant_group(l).order() == boost::multiprecision::abs(determinant(g)));
    }
  }
}

TEST_CASE("overlattice: frozen index-2 example over U(2)") {
  GlueSpec spec;
  spec.base = parse_form("U(2)");
  spec.glue_vectors = {{Rat(1, 2), Rat(1, 2)}};
  auto over = overlattice(spec);
  CHECK(over.index == 2);
  CHECK(over.lattice.gram == IntMat{{1, 1}, {1, 0}});
  auto inv = invariants(over.lattice);
  CHECK(inv.unimodular);
  CHECK(inv.parity == Parity::Odd);
  // det(base) = det(result) * index^2
  CHECK(determinant(standard_lattice("U(2)").gram) == inv.det * over.index * over.index);
}

TEST_CASE("overlattice: empty glue returns the base") {
  GlueSpec spec;
  spec.base = parse_form("E8");
  auto over = overlattice(spec);
  CHECK(over.index == 1);
  CHECK(over.lattice.gram == standard_lattice("E8").gram);
}

TEST_CASE("overlattice: rejects glue outside the dual") {
  GlueSpec spec;
  spec.base = parse_form("U(2)");
  spec.glue_vectors = {{Rat(1, 3), Rat(0)}};
  CHECK_THROWS_AS(overlattice(spec), std::invalid_argument);
}

TEST_CASE("overlattice: rejects non-integral pairings among glue vectors") {
  GlueSpec spec;
  spec.base = parse_form("U(2) + U(2)");
  spec.glue_vectors = {{Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)},
                       {Rat(1, 2), Rat(0), Rat(1, 2), Rat(0)}};
  CHECK_THROWS_AS(overlattice(spec), std::invalid_argument);
}

TEST_CASE("glue search") {
  SUBCASE("D4 + D4 extends to an even unimodular rank-8 lattice") {
    Lattice base = standard_lattice("D4 + D4");
    auto target = invariants(standard_lattice("E8"));
    auto sets = glue_search(base, target, 2);
    REQUIRE(!sets.empty());
    for (const auto& glue : sets) {
      CHECK(glue.size() == 2);
      auto over = overlattice_of(base, glue);
      CHECK(over.index == 4);
      CHECK(invariants(over.lattice) == target);
    }
  }
  SUBCASE("trivial discriminant admits only the empty glue") {
    Lattice base = standard_lattice("<-1>");
    auto sets = glue_search(base, invariants(base), 2);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].empty());
  }
  SUBCASE("base matching the target yields the empty solution") {
    Lattice base = standard_lattice("E8");
    auto sets = glue_search(base, invariants(standard_lattice("E8")), 2);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].empty());
  }
  SUBCASE("no even unimodular overlattice of a single D4") {
    auto target = invariants(standard_lattice("E8"));
    target.rank = 4;
    target.b_minus = 4;
    target.signature = -4;
    auto sets = glue_search(standard_lattice("D4"), target, 2);
    CHECK(sets.empty());
  }
  SUBCASE("the odd index-2 overlattice of D4 is found") {
    Lattice base = standard_lattice("D4");
    LatticeInvariants target;
    target.rank = 4;
    target.b_plus = 0;
    target.b_minus = 4;
    target.signature = -4;
    target.det = 1;
    target.parity = Parity::Odd;
    target.unimodular = true;
    auto sets = glue_search(base, target, 2);
    REQUIRE(!sets.empty());
    CHECK(sets[0].size() == 1);
    CHECK(overlattice_of(base, sets[0]).index == 2);
  }
  SUBCASE("search is deterministic") {
    Lattice base = standard_lattice("D4 + D4");
    auto target = invariants(standard_lattice("E8"));
    CHECK(glue_search(base, target, 2) == glue_search(base, target, 2));
  }
}
