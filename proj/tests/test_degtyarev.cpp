#include "nlat/degtyarev.hpp"

#include <stdexcept>

#include "doctest.h"
#include "nlat/classify.hpp"

using namespace nlat;

namespace {

std::vector<Int> negated(std::vector<Int> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("second homology lattice of a K3 surface") {
  Lattice l = build_k3_lattice();
  LatticeInvariants inv = invariants(l);
  CHECK(inv.rank == 22);
  CHECK(inv.b_plus == 3);
  CHECK(inv.b_minus == 19);
  CHECK(inv.signature == -16);
  CHECK(inv.parity == Parity::Even);
  CHECK(inv.unimodular);
  CHECK(discriminant_group(l).invariant_factors.empty());
  ClassDescriptor d = classify_indefinite(22, -16, Parity::Even);
  CHECK(same_indefinite_class(l, standard_lattice(d.normal_form)));
}

TEST_CASE("D4 + D4 glues to E8, and the same glue scales") {
  D4Gluing g1 = glue_d4d4_to_e8(1);
  CHECK(g1.glue.size() == 2);
  CHECK(g1.overlattice.index == 4);
  LatticeInvariants inv = invariants(g1.overlattice.lattice);
  CHECK(inv.rank == 8);
  CHECK(inv.b_plus == 0);
  CHECK(inv.b_minus == 8);
  CHECK(inv.parity == Parity::Even);
  CHECK(inv.unimodular);

  D4Gluing g2 = glue_d4d4_to_e8(2);
  CHECK(g2.glue == g1.glue);
  CHECK(g2.overlattice.index == 4);
  CHECK(invariants(g2.overlattice.lattice) == invariants(standard_lattice("E8(2)")));
  CHECK(discriminant_group(g2.overlattice.lattice).invariant_factors ==
        discriminant_group(standard_lattice("E8(2)")).invariant_factors);

  SUBCASE("deterministic") {
    D4Gluing again = glue_d4d4_to_e8(1);
    CHECK(again.glue == g1.glue);
    CHECK(again.overlattice.lattice.gram == g1.overlattice.lattice.gram);
  }
  SUBCASE("only the two scales of the construction") {
    CHECK_THROWS_AS(glue_d4d4_to_e8(3), std::invalid_argument);
    CHECK_THROWS_AS(glue_d4d4_to_e8(0), std::invalid_argument);
  }
}

TEST_CASE("eigenlattice certificate") {
  EigenlatticeCertificate c = build_certificate();

  SUBCASE("shape and bookkeeping") {
    CHECK(c.base.rank() == 12);
    CHECK(c.l_minus1.rank() == 12);
    CHECK(c.index == 8);
    CHECK(c.plus_range.begin == 0);
    CHECK(c.plus_range.end == 6);
    CHECK(c.minus_range.begin == 6);
    CHECK(c.minus_range.end == 12);
    CHECK(determinant(c.base.gram) == determinant(c.l_minus1.gram) * 64);
  }
  SUBCASE("the final lattice is the (-1)-eigenlattice form") {
    LatticeInvariants inv = invariants(c.l_minus1);
    CHECK(inv.rank == 12);
    CHECK(inv.parity == Parity::Even);
    CHECK(inv.det == 1024);
    CHECK(inv.signature == -8);
    CHECK(discriminant_group(c.l_minus1).invariant_factors ==
          discriminant_group(standard_lattice("E8(2) + U(2) + U")).invariant_factors);
  }
  SUBCASE("vector identities") {
    CHECK(c.base.pair(c.a_plus, c.a_plus) == -4);
    CHECK(c.base.pair(c.a_minus, c.a_minus) == -4);
    CHECK(c.l_minus1.pair(c.r_plus_L, c.r_plus_L) == -2);
    CHECK(c.l_minus1.pair(c.r_minus_L, c.r_minus_L) == -2);
    CHECK(c.l_minus1.pair(c.r_plus_L, c.r_minus_L) == 0);
  }
  SUBCASE("involution actions") {
    CHECK(c.c1_action.matrix == -IntMat::identity(12));
    CHECK(c.c1_action.matrix.apply(c.r_plus_L) == negated(c.r_plus_L));
    CHECK(c.c1_action.matrix.apply(c.r_minus_L) == negated(c.r_minus_L));
    // the bi-eigenlattice reading of tau sends r+ to -r-
    CHECK(c.tau_action.matrix.apply(c.r_plus_L) == negated(c.r_minus_L));
    CHECK(c.tau_action.matrix.apply(c.r_minus_L) == negated(c.r_plus_L));
    CHECK(c.tau_action.matrix * c.tau_action.matrix == IntMat::identity(12));
    CHECK(c.tau_action.matrix * c.c1_action.matrix ==
          c.c1_action.matrix * c.tau_action.matrix);
    IntMat g = c.l_minus1.gram;
    CHECK(c.tau_action.matrix.transposed() * g * c.tau_action.matrix == g);
  }
  SUBCASE("deterministic") {
    EigenlatticeCertificate again = build_certificate();
    CHECK(again.l_minus1.gram == c.l_minus1.gram);
    CHECK(again.tau_action.matrix == c.tau_action.matrix);
    CHECK(again.r_plus == c.r_plus);
  }
}

TEST_CASE("certificate verification") {
  EigenlatticeCertificate c = build_certificate();
  CertificateReport r = verify_certificate(c);

  SUBCASE("all identities pass") {
    CHECK(r.all_pass());
    CHECK(r.identities.size() == 9);
    for (const auto& e : r.identities) {
      CAPTURE(e.name);
      CHECK(e.pass);
    }
    for (const auto& e : r.extras) {
      CAPTURE(e.name);
      CHECK(e.pass);
    }
    CHECK(r.tau_sign == -1);
  }
  SUBCASE("the summand reading is spelled out") {
    bool noted = false;
    for (const auto& n : r.notes)
      if (n.find("D4(2)") != std::string::npos) noted = true;
    CHECK(noted);
  }
  SUBCASE("tampering is reported, not thrown") {
    EigenlatticeCertificate bad = c;
    bad.r_plus_L[0] += 1;
    CertificateReport rb = verify_certificate(bad);
    CHECK_FALSE(rb.all_pass());

    EigenlatticeCertificate bad2 = c;
    bad2.l_minus1.gram(0, 0) += 2;
    CHECK_FALSE(verify_certificate(bad2).all_pass());

    EigenlatticeCertificate bad3 = c;
    bad3.tau_action.matrix(0, 0) += 1;
    CHECK_FALSE(verify_certificate(bad3).all_pass());
  }
}

TEST_CASE("certificate reports") {
  EigenlatticeCertificate c = build_certificate();
  CertificateReport r = verify_certificate(c);

  std::string json = certificate_json(c, r);
  CHECK(json.find("\"all_pass\": true") != std::string::npos);
  CHECK(json.find("\"tau_sign\": -1") != std::string::npos);
  CHECK(json.find("\"(-1)-eigenlattice\"") != std::string::npos);
  CHECK(json == certificate_json(c, r));  // byte-identical reruns

  std::string text = certificate_text(c, r);
  CHECK(text.find("all identities pass") != std::string::npos);
  CHECK(text.find("[ok]") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  EigenlatticeCertificate bad = c;
  bad.r_plus_L[0] += 1;
  CertificateReport rb = verify_certificate(bad);
  CHECK(certificate_text(bad, rb).find("FAIL") != std::string::npos);
  CHECK(certificate_json(bad, rb).find("\"all_pass\": false") != std::string::npos);
}
