#include "nlat/isometry.hpp"

#include <algorithm>
#include <random>

#include "configgen.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace nlat;

namespace {

bool is_gram_isometry(const Isometry& f) {
  return f.matrix.transposed() * f.lattice.gram * f.matrix == f.lattice.gram;
}

}  // namespace

TEST_CASE("multi twist: frozen operators") {
  SUBCASE("a (-2)-class in U swaps the basis") {
    Lattice u = standard_lattice("U");
    auto f = multi_twist_operator(u, {{1, -1}});
    CHECK(f.matrix == IntMat{{0, 1}, {1, 0}});
    CHECK(f.preserves_spin);
  }
  SUBCASE("a (+2)-class in U negates and swaps") {
    Lattice u = standard_lattice("U");
    auto f = multi_twist_operator(u, {{1, 1}});
    CHECK(f.matrix == IntMat{{0, -1}, {-1, 0}});
    // hand oracle: u1 -> u1 - (u1.c)c = u1 - u2 - u1 = -u2
    std::vector<Int> u1{1, 0};
    CHECK(f.matrix.apply(u1) == std::vector<Int>{0, -1});
  }
  SUBCASE("the generator of a (-2)-line is negated") {
    Lattice l{IntMat{{-2}}, "A1"};
    auto f = multi_twist_operator(l, {{1}});
    CHECK(f.matrix == IntMat{{-1}});
  }
  SUBCASE("orthogonal classes act block-diagonally") {
    Lattice l = standard_lattice("U + U");
    auto f = multi_twist_operator(l, {{1, -1, 0, 0}, {0, 0, 1, -1}});
    auto f1 = multi_twist_operator(l, {{1, -1, 0, 0}});
    auto f2 = multi_twist_operator(l, {{0, 0, 1, -1}});
    CHECK(f.matrix == f1.matrix * f2.matrix);
  }
}

TEST_CASE("multi twist: input validation") {
  Lattice u = standard_lattice("U");
  CHECK_THROWS_AS(multi_twist_operator(u, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(multi_twist_operator(u, {{1}}), std::invalid_argument);
  Lattice uu = standard_lattice("U + U");
  CHECK_THROWS_AS(multi_twist_operator(uu, {{1, -1, 0, 0}, {1, 0, 1, -1}}),
                  std::invalid_argument);
}

TEST_CASE("multi reflection: frozen operators") {
  CHECK(multi_reflection_operator(standard_lattice("<-1>"), {{1}}).matrix == IntMat{{-1}});
  CHECK(multi_reflection_operator(standard_lattice("2*<-1>"), {{1, 0}, {0, 1}}).matrix ==
        -IntMat::identity(2));
  CHECK(multi_reflection_operator(standard_lattice("<1> + <-1>"), {{0, 1}}).matrix ==
        IntMat{{1, 0}, {0, -1}});
  CHECK_FALSE(multi_reflection_operator(standard_lattice("<-1>"), {{1}}).preserves_spin);
  SUBCASE("rejects classes of the wrong square") {
    CHECK_THROWS_AS(multi_reflection_operator(standard_lattice("<1>"), {{1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(multi_reflection_operator(standard_lattice("U"), {{1, -1}}),
                    std::invalid_argument);
  }
}

TEST_CASE("projective twist acts trivially") {
  Lattice l = standard_lattice("2*E8 + 3*U");
  auto f = projective_twist_operator(l);
  CHECK(f.matrix == IntMat::identity(22));
  CHECK(projective_twist_operator(Lattice{}).matrix.rows() == 0);
  auto t = multi_twist_operator(standard_lattice("U"), {{1, -1}});
  CHECK(projective_twist_operator(standard_lattice("U")).matrix * t.matrix == t.matrix);
}

TEST_CASE("fixed sublattices") {
  SUBCASE("identity fixes everything") {
    auto f = projective_twist_operator(standard_lattice("D4"));
    auto fx = fixed_sublattice(f);
    CHECK(fx.rank() == 4);
    CHECK(fx.basis == IntMat::identity(4));
  }
  SUBCASE("minus identity on U fixes nothing") {
    Lattice u = standard_lattice("U");
    Isometry f{u, -IntMat::identity(2), false};
    CHECK(fixed_sublattice(f).rank() == 0);
  }
  SUBCASE("twist along u1-u2 fixes the diagonal line") {
    auto f = multi_twist_operator(standard_lattice("U"), {{1, -1}});
    auto fx = fixed_sublattice(f);
    CHECK(fx.rank() == 1);
    CHECK(fx.basis == IntMat{{1, 1}});
  }
}

TEST_CASE("involution signatures: frozen cases") {
  SUBCASE("one (-2)-class on U") {
    auto f = multi_twist_operator(standard_lattice("U"), {{1, -1}});
    auto sig = involution_signatures(f);
    CHECK(sig.b_f_plus == 1);
    CHECK(sig.b_f_minus == 0);
    CHECK(sig.sigma_f == 1);
  }
  SUBCASE("one (+2)-class on U") {
    auto f = multi_twist_operator(standard_lattice("U"), {{1, 1}});
    auto sig = involution_signatures(f);
    CHECK(sig.b_f_plus == 0);
    CHECK(sig.b_f_minus == 1);
    CHECK(sig.sigma_f == -1);
  }
  SUBCASE("identity keeps the full signature") {
    Lattice l = standard_lattice("E8 + U");
    auto sig = involution_signatures(projective_twist_operator(l));
    CHECK(sig.b_f_plus == 1);
    CHECK(sig.b_f_minus == 9);
    CHECK(sig.sigma_f == -8);
  }
  SUBCASE("non-involutions are rejected") {
    Lattice u2 = standard_lattice("U + U");
    auto a = multi_twist_operator(u2, {{1, -1, 0, 0}});
    auto b = multi_twist_operator(u2, {{0, 0, 1, 1}});
    Isometry comp{u2, a.matrix * b.matrix, true};
    // this composition IS an involution (disjoint classes); break it instead
    IntMat shear = IntMat{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    Isometry bad{standard_lattice("U + U"), shear, true};
    CHECK_THROWS_AS(involution_signatures(bad), std::invalid_argument);
    CHECK_NOTHROW(involution_signatures(comp));
  }
}

TEST_CASE("random twist configurations satisfy the signature laws") {
  std::mt19937_64 rng(20240821);
  int trials = 0;
  while (trials < 80) {
    auto cfg = configgen::random_twist_config(rng, 10);
    auto inv = invariants(cfg.lat);
    auto f = multi_twist_operator(cfg.lat, cfg.classes);
    CHECK(is_gram_isometry(f));
    CHECK(f.matrix * f.matrix == IntMat::identity(cfg.lat.gram.rows()));
    auto fx = fixed_sublattice(f);
    CHECK(fx.rank() == cfg.lat.rank() - static_cast<long long>(cfg.classes.size()));
    auto sig = involution_signatures(f);
    CHECK(sig.b_f_plus == inv.b_plus - cfg.k_plus);
    CHECK(sig.b_f_minus == inv.b_minus - cfg.k_minus);
    CHECK(sig.sigma_f == sig.b_f_plus - sig.b_f_minus);
    ++trials;
  }
}

TEST_CASE("random reflection configurations satisfy the signature laws") {
  std::mt19937_64 rng(20240822);
  for (int t = 0; t < 60; ++t) {
    auto cfg = configgen::random_reflection_config(rng, 10);
    auto inv = invariants(cfg.lat);
    auto f = multi_reflection_operator(cfg.lat, cfg.classes);
    long long k = static_cast<long long>(cfg.classes.size());
    CHECK(is_gram_isometry(f));
    CHECK(f.matrix * f.matrix == IntMat::identity(cfg.lat.gram.rows()));
    CHECK(fixed_sublattice(f).rank() == cfg.lat.rank() - k);
    auto sig = involution_signatures(f);
    CHECK(sig.b_f_plus == inv.b_plus);
    CHECK(sig.b_f_minus == inv.b_minus - k);
    CHECK(sig.sigma_f == inv.signature + k);
  }
}

TEST_CASE("operator is independent of class order") {
  std::mt19937_64 rng(20240823);
  for (int t = 0; t < 25; ++t) {
    auto cfg = configgen::random_twist_config(rng, 8);
    if (cfg.classes.size() < 2) continue;
    auto f = multi_twist_operator(cfg.lat, cfg.classes);
    auto shuffled = cfg.classes;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(multi_twist_operator(cfg.lat, shuffled).matrix == f.matrix);
  }
}

TEST_CASE("fixed sublattice matches brute-force search on small lattices") {
  std::mt19937_64 rng(20240824);
  int checked = 0;
  while (checked < 40) {
    auto cfg = configgen::random_twist_config(rng, 4);
    bool small = true;
    for (std::size_t i = 0; i < cfg.lat.gram.rows() && small; ++i)
      for (std::size_t j = 0; j < cfg.lat.gram.cols(); ++j)
        if (boost::multiprecision::abs(cfg.lat.gram(i, j)) > 3) { small = false; break; }
    if (!small) continue;
    auto f = multi_twist_operator(cfg.lat, cfg.classes);
    IntMat delta = f.matrix - IntMat::identity(cfg.lat.gram.rows());
    auto fx = fixed_sublattice(f);
    // every brute-force fixed vector must be an integer combination of basis rows
    for (const auto& v : testutil::enumerate_kernel(delta, 3)) {
      IntMat stacked(fx.basis.rows() + 1, fx.basis.cols());
      for (std::size_t i = 0; i < fx.basis.rows(); ++i)
        for (std::size_t j = 0; j < fx.basis.cols(); ++j) stacked(i, j) = fx.basis(i, j);
      for (std::size_t j = 0; j < fx.basis.cols(); ++j) stacked(fx.basis.rows(), j) = v[j];
      IntMat h = hermite_normal_form(stacked).h;
      bool same_span = true;
      for (std::size_t j = 0; j < h.cols(); ++j)
        if (h(fx.basis.rows(), j) != 0) same_span = false;
      for (std::size_t i = 0; i < fx.basis.rows() && same_span; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
          if (h(i, j) != fx.basis(i, j)) { same_span = false; break; }
      CHECK(same_span);
    }
    ++checked;
  }
}
