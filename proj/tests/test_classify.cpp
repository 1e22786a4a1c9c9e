#include "nlat/classify.hpp"

#include <random>

#include "doctest.h"

using namespace nlat;

TEST_CASE("classify_indefinite: frozen normal forms") {
  CHECK(classify_indefinite(22, -16, Parity::Even).normal_form.str() == "2*E8 + 3*U");
  CHECK(classify_indefinite(2, 0, Parity::Odd).normal_form.str() == "<1> + <-1>");
  CHECK(classify_indefinite(12, -8, Parity::Even).normal_form.str() == "E8 + 2*U");
  CHECK(classify_indefinite(18, 16, Parity::Even).normal_form.str() == "2*E8(-1) + U");
  CHECK(classify_indefinite(4, 0, Parity::Even).normal_form.str() == "2*U");
  CHECK(classify_indefinite(22, -16, Parity::Odd).normal_form.str() == "3*<1> + 19*<-1>");
}

TEST_CASE("classify_indefinite: rejects invalid requests") {
  CHECK_THROWS_AS(classify_indefinite(8, 8, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(classify_indefinite(8, -10, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(classify_indefinite(10, -4, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(classify_indefinite(9, -2, Parity::Odd), std::invalid_argument);
  CHECK_THROWS_AS(classify_indefinite(1, 0, Parity::Odd), std::invalid_argument);
}

TEST_CASE("classify_indefinite: output realizes the requested invariants") {
  for (long long rank = 2; rank <= 24; ++rank) {
    for (long long sig = -rank + 2; sig <= rank - 2; sig += 2) {
      {
        auto cd = classify_indefinite(rank, sig, Parity::Odd);
        auto inv = invariants(standard_lattice(cd.normal_form));
        CHECK(inv.rank == rank);
        CHECK(inv.signature == sig);
        CHECK(inv.parity == Parity::Odd);
        CHECK(inv.unimodular);
      }
      if (sig % 8 == 0 && rank - (sig < 0 ? -sig : sig) >= 2) {
        auto cd = classify_indefinite(rank, sig, Parity::Even);
        auto inv = invariants(standard_lattice(cd.normal_form));
        CHECK(inv.rank == rank);
        CHECK(inv.signature == sig);
        CHECK(inv.parity == Parity::Even);
        CHECK(inv.unimodular);
      }
    }
  }
}

TEST_CASE("classify_indefinite inverts invariants on random unimodular sums") {
  std::mt19937_64 rng(20240819);
  const char* blocks[] = {"U", "E8", "E8(-1)", "<1>", "<-1>"};
  const long long block_rank[] = {2, 8, 8, 1, 1};
  int done = 0;
  while (done < 220) {
    std::string expr = "U";
    long long rank = 2;
    while (true) {
      std::size_t pick = rng() % 5;
      if (rank + block_rank[pick] > 24 || rng() % 4 == 0) break;
      expr += " + ";
      expr += blocks[pick];
      rank += block_rank[pick];
    }
    Lattice l = standard_lattice(expr);
    auto inv = invariants(l);
    REQUIRE(inv.unimodular);
    REQUIRE(inv.b_plus >= 1);
    REQUIRE(inv.b_minus >= 1);
    auto cd = classify_indefinite(inv.rank, inv.signature, inv.parity);
    CHECK(invariants(standard_lattice(cd.normal_form)) == inv);
    ++done;
  }
}

TEST_CASE("same_indefinite_class") {
  CHECK_FALSE(same_indefinite_class(standard_lattice("<1> + <-1>"), standard_lattice("U")));
  CHECK(same_indefinite_class(standard_lattice("E8 + U + <1> + <-1>"),
                              standard_lattice("2*<1> + 10*<-1>")));
  Lattice l = standard_lattice("2*E8 + 3*U");
  CHECK(same_indefinite_class(l, l));
  SUBCASE("definite or non-unimodular inputs are rejected") {
    CHECK_THROWS_AS(same_indefinite_class(standard_lattice("E8"), standard_lattice("U")),
                    std::invalid_argument);
    CHECK_THROWS_AS(same_indefinite_class(standard_lattice("U(2)"), standard_lattice("U")),
                    std::invalid_argument);
  }
}

TEST_CASE("family coverage: even families") {
  auto rep = family_coverage_y(-8);
  CHECK(rep.min_rank == 12);
  CHECK(rep.excluded_ranks == std::vector<long long>{10});
  CHECK(rep.parity == Parity::Even);
  auto rep2 = family_coverage_y(16);
  CHECK(rep2.min_rank == 24);
  CHECK(rep2.excluded_ranks == std::vector<long long>{18, 20, 22});
  CHECK_THROWS_AS(family_coverage_y(0), std::invalid_argument);
  CHECK_THROWS_AS(family_coverage_y(-4), std::invalid_argument);
}

TEST_CASE("family coverage: odd families") {
  auto rep = family_coverage_x(2, -1);
  CHECK(rep.min_rank == 4);
  CHECK(rep.excluded_ranks == std::vector<long long>{3});
  CHECK(rep.parity == Parity::Odd);
  auto rep2 = family_coverage_x(10, -2);
  CHECK(rep2.min_rank == 26);
  CHECK(rep2.excluded_ranks ==
        std::vector<long long>{4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24});
  CHECK_THROWS_AS(family_coverage_x(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_coverage_x(0, -1), std::invalid_argument);
}
