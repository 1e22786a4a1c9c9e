#include "nlat/degtyarev.hpp"

#include <stdexcept>
#include <utility>

namespace nlat {

namespace {

std::logic_error violated(const std::string& eq) {
  return std::logic_error("certificate construction violated: " + eq);
}

RatMat row_of(const std::vector<Rat>& v) {
  RatMat m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

RatMat row_of(const std::vector<Int>& v) {
  RatMat m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = Rat(v[i]);
  return m;
}

std::vector<Int> integral_row(const RatMat& m, const std::string& eq) {
  std::vector<Int> out(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    if (denominator(m(0, i)) != 1) throw violated(eq);
    out[i] = numerator(m(0, i));
  }
  return out;
}

std::vector<Int> negated(std::vector<Int> v) {
  for (auto& x : v) x = -x;
  return v;
}

LatticeInvariants e8_invariants() {
  LatticeInvariants t;
  t.rank = 8;
  t.b_plus = 0;
  t.b_minus = 8;
  t.signature = -8;
  t.det = 1;
  t.parity = Parity::Even;
  t.unimodular = true;
  return t;
}

}  // namespace

Lattice build_k3_lattice() { return standard_lattice("2*E8 + 3*U"); }

D4Gluing glue_d4d4_to_e8(long long scale) {
  if (scale != 1 && scale != 2)
    throw std::invalid_argument("glue_d4d4_to_e8: scale must be 1 or 2");
  std::vector<GlueSet> sets = glue_search(standard_lattice("2*D4"), e8_invariants(), 2);
  if (sets.empty())
    throw std::logic_error("glue_d4d4_to_e8: no even unimodular gluing found");
  GlueSet glue = sets.front();
  if (scale == 1) return {overlattice_of(standard_lattice("2*D4"), glue), glue};
  Overlattice o = overlattice_of(standard_lattice("2*D4(2)"), glue);
  if (invariants(o.lattice) != invariants(standard_lattice("E8(2)")))
    throw std::logic_error("glue_d4d4_to_e8: scaled gluing missed the E8(2) invariants");
  return {std::move(o), glue};
}

EigenlatticeCertificate build_certificate() {
  EigenlatticeCertificate cert;
  Lattice piece = standard_lattice("D4(2) + U(2)");
  cert.base = direct_sum(piece, piece);
  cert.plus_range = {0, 6};
  cert.minus_range = {6, 12};

  // D4 gluing across the two D4(2) summands, embedded in the rank-12 base
  D4Gluing d4 = glue_d4d4_to_e8(2);
  std::vector<std::vector<Rat>> glue12;
  for (const auto& v : d4.glue) {
    std::vector<Rat> w(12, Rat(0));
    for (int i = 0; i < 4; ++i) w[i] = v[i];
    for (int i = 4; i < 8; ++i) w[i + 2] = v[i];
    glue12.push_back(std::move(w));
  }
  Overlattice o1 = overlattice_of(cert.base, glue12);
  if (o1.index != 4) throw violated("[step1 : base] = 4");
  if (determinant(cert.base.gram) != determinant(o1.lattice.gram) * 16)
    throw violated("det(base) = det(step1) * 4^2");
  cert.step1 = o1.lattice;
  cert.step1_index = o1.index;

  cert.a_plus.assign(12, Int(0));
  cert.a_plus[4] = 1;
  cert.a_plus[5] = -1;
  cert.a_minus.assign(12, Int(0));
  cert.a_minus[10] = 1;
  cert.a_minus[11] = -1;
  if (cert.base.pair(cert.a_plus, cert.a_plus) != -4) throw violated("(a+)^2 = -4");
  if (cert.base.pair(cert.a_minus, cert.a_minus) != -4) throw violated("(a-)^2 = -4");

  cert.r_plus.assign(12, Rat(0));
  cert.r_minus.assign(12, Rat(0));
  for (int i = 0; i < 12; ++i) {
    cert.r_plus[i] = Rat(cert.a_plus[i] + cert.a_minus[i]) / 2;
    cert.r_minus[i] = Rat(cert.a_plus[i] - cert.a_minus[i]) / 2;
  }

  // index-2 extension by r+, expressed in step1 coordinates
  RatMat x = row_of(cert.r_plus) * inverse(o1.basis);
  Overlattice o2 = overlattice_of(o1.lattice, {x.row(0)});
  if (o2.index != 2) throw violated("[l_minus1 : step1] = 2");
  if (determinant(o1.lattice.gram) != determinant(o2.lattice.gram) * 4)
    throw violated("det(step1) = det(l_minus1) * 2^2");

  cert.l_minus1 = o2.lattice;
  cert.l_minus1.label = "(-1)-eigenlattice";
  cert.basis = o2.basis * o1.basis;
  cert.index = o1.index * o2.index;

  RatMat basis_inv = inverse(cert.basis);
  cert.r_plus_L = integral_row(row_of(cert.r_plus) * basis_inv, "r+ in l_minus1");
  cert.r_minus_L = integral_row(row_of(cert.r_minus) * basis_inv, "r- in l_minus1");
  if (cert.l_minus1.pair(cert.r_plus_L, cert.r_plus_L) != -2) throw violated("(r+)^2 = -2");
  if (cert.l_minus1.pair(cert.r_minus_L, cert.r_minus_L) != -2)
    throw violated("(r-)^2 = -2");
  if (cert.l_minus1.pair(cert.r_plus_L, cert.r_minus_L) != 0) throw violated("r+ . r- = 0");

  LatticeInvariants inv = invariants(cert.l_minus1);
  if (inv.rank != 12 || inv.parity != Parity::Even)
    throw violated("l_minus1 is even of rank 12");
  if (inv.det != 1024 && inv.det != -1024) throw violated("|det(l_minus1)| = 2^10");
  if (discriminant_group(cert.l_minus1).invariant_factors !=
      discriminant_group(standard_lattice("E8(2) + U(2) + U")).invariant_factors)
    throw violated("disc(l_minus1) = disc(E8(2) + U(2) + U)");

  cert.c1_action = Isometry{cert.l_minus1, -IntMat::identity(12), true};

  RatMat d(12, 12);
  for (int i = 0; i < 12; ++i) d(i, i) = i < 6 ? -1 : 1;
  RatMat bt = cert.basis.transposed();
  RatMat tau_rat = inverse(bt) * d * bt;
  IntMat tau(12, 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      if (denominator(tau_rat(i, j)) != 1) throw violated("tau preserves l_minus1");
      tau(i, j) = numerator(tau_rat(i, j));
    }
  if (tau.transposed() * cert.l_minus1.gram * tau != cert.l_minus1.gram)
    throw violated("tau is an isometry");
  if (tau * tau != IntMat::identity(12)) throw violated("tau^2 = 1");
  cert.tau_action = Isometry{cert.l_minus1, tau, true};

  std::vector<Int> t = tau.apply(cert.r_plus_L);
  if (t != cert.r_minus_L && t != negated(cert.r_minus_L))
    throw violated("tau(r+) = +-r-");
  return cert;
}

bool CertificateReport::all_pass() const {
  for (const auto& e : identities)
    if (!e.pass) return false;
  for (const auto& e : extras)
    if (!e.pass) return false;
  return true;
}

namespace {

using Checked = std::pair<bool, std::string>;

template <typename F>
void add(std::vector<CheckEntry>& list, const std::string& name, F&& fn) {
  CheckEntry e{name, false, ""};
  try {
    Checked c = fn();
    e.pass = c.first;
    e.detail = c.second;
  } catch (const std::exception& ex) {
    e.detail = ex.what();
  }
  list.push_back(e);
}

}  // namespace

CertificateReport verify_certificate(const EigenlatticeCertificate& c) {
  CertificateReport r;
  r.notes.push_back("the D(2) summands of the eigenlattice decomposition are read as D4(2)");

  const IntMat& gb = c.base.gram;
  const IntMat& gl = c.l_minus1.gram;

  add(r.extras, "shapes", [&]() -> Checked {
    bool ok = gb.rows() == 12 && gb.cols() == 12 && gl.rows() == 12 && gl.cols() == 12 &&
              c.basis.rows() == 12 && c.basis.cols() == 12 && c.a_plus.size() == 12 &&
              c.a_minus.size() == 12 && c.r_plus.size() == 12 && c.r_minus.size() == 12 &&
              c.r_plus_L.size() == 12 && c.r_minus_L.size() == 12 &&
              c.c1_action.matrix.rows() == 12 && c.tau_action.matrix.rows() == 12;
    return {ok, "all blocks rank 12"};
  });
  if (!r.extras.back().pass) return r;

  add(r.identities, "(a+)^2 = (a-)^2 = -4", [&]() -> Checked {
    Int p = c.base.pair(c.a_plus, c.a_plus);
    Int m = c.base.pair(c.a_minus, c.a_minus);
    return {p == -4 && m == -4, "(a+)^2 = " + p.str() + ", (a-)^2 = " + m.str()};
  });

  add(r.identities, "(r+)^2 = (r-)^2 = -2", [&]() -> Checked {
    RatMat gbr = to_rational(gb);
    Rat p = (row_of(c.r_plus) * gbr * row_of(c.r_plus).transposed())(0, 0);
    Rat m = (row_of(c.r_minus) * gbr * row_of(c.r_minus).transposed())(0, 0);
    Int pl = c.l_minus1.pair(c.r_plus_L, c.r_plus_L);
    Int ml = c.l_minus1.pair(c.r_minus_L, c.r_minus_L);
    return {p == -2 && m == -2 && pl == -2 && ml == -2,
            "in base coordinates " + p.str() + ", " + m.str() + "; in l_minus1 " +
                pl.str() + ", " + ml.str()};
  });

  add(r.identities, "r+ . r- = 0", [&]() -> Checked {
    Rat p = (row_of(c.r_plus) * to_rational(gb) * row_of(c.r_minus).transposed())(0, 0);
    Int pl = c.l_minus1.pair(c.r_plus_L, c.r_minus_L);
    return {p == 0 && pl == 0, "pairing " + p.str() + " / " + pl.str()};
  });

  add(r.identities, "c1(r+-) = -r+-", [&]() -> Checked {
    bool ok = c.c1_action.matrix.apply(c.r_plus_L) == negated(c.r_plus_L) &&
              c.c1_action.matrix.apply(c.r_minus_L) == negated(c.r_minus_L);
    return {ok, "c1 negates both classes"};
  });

  add(r.identities, "tau(r+) = +-r-", [&]() -> Checked {
    std::vector<Int> t = c.tau_action.matrix.apply(c.r_plus_L);
    std::vector<Int> back = c.tau_action.matrix.apply(c.r_minus_L);
    if (t == c.r_minus_L && back == c.r_plus_L) {
      r.tau_sign = 1;
      return {true, "realized sign +1"};
    }
    if (t == negated(c.r_minus_L) && back == negated(c.r_plus_L)) {
      r.tau_sign = -1;
      return {true, "realized sign -1"};
    }
    return {false, "tau does not swap the classes up to sign"};
  });

  add(r.identities, "D4 + D4 glues to E8 and, scaled, to E8(2)", [&]() -> Checked {
    D4Gluing g1 = glue_d4d4_to_e8(1);
    bool plain = invariants(g1.overlattice.lattice) == e8_invariants();
    bool scaled = invariants(glue_d4d4_to_e8(2).overlattice.lattice) ==
                  invariants(standard_lattice("E8(2)"));
    bool step = invariants(c.step1) == invariants(standard_lattice("E8(2) + 2*U(2)"));
    return {plain && scaled && step,
            "fresh searches check; the certificate's first step is E8(2) + U(2) + U(2)"};
  });

  add(r.identities, "l_minus1 has rank 12 and is even", [&]() -> Checked {
    LatticeInvariants inv = invariants(c.l_minus1);
    return {inv.rank == 12 && inv.parity == Parity::Even, to_string(inv)};
  });

  add(r.identities, "|det(l_minus1)| = 2^10", [&]() -> Checked {
    Int det = determinant(gl);
    Int mag = det < 0 ? -det : det;
    return {mag == 1024, "det = " + det.str()};
  });

  add(r.identities, "disc(l_minus1) = disc(E8(2) + U(2) + U)", [&]() -> Checked {
    auto got = discriminant_group(c.l_minus1).invariant_factors;
    auto want = discriminant_group(standard_lattice("E8(2) + U(2) + U")).invariant_factors;
    return {got == want, std::to_string(got.size()) + " invariant factors"};
  });

  add(r.extras, "basis transports the base form to the overlattice form", [&]() -> Checked {
    bool ok = c.basis * to_rational(gb) * c.basis.transposed() == to_rational(gl);
    return {ok, "B G B^T = G'"};
  });

  add(r.extras, "det bookkeeping at each gluing", [&]() -> Checked {
    Int i1 = c.step1_index;
    Int i2 = c.index / (c.step1_index == 0 ? Int(1) : c.step1_index);
    bool ok = c.index == 8 && i1 == 4 &&
              determinant(gb) == determinant(c.step1.gram) * i1 * i1 &&
              determinant(c.step1.gram) == determinant(gl) * i2 * i2;
    return {ok, "det(base) = det(step1) * 16, det(step1) = det(l_minus1) * 4"};
  });

  add(r.extras, "r+- lie in the overlattice", [&]() -> Checked {
    RatMat basis_inv = inverse(c.basis);
    RatMat xp = row_of(c.r_plus) * basis_inv;
    RatMat xm = row_of(c.r_minus) * basis_inv;
    for (std::size_t i = 0; i < 12; ++i)
      if (denominator(xp(0, i)) != 1 || denominator(xm(0, i)) != 1)
        return {false, "fractional coordinates"};
    bool match = integral_row(xp, "") == c.r_plus_L && integral_row(xm, "") == c.r_minus_L;
    return {match, "coordinates match the stored classes"};
  });

  add(r.extras, "c1 and tau are isometries of the overlattice", [&]() -> Checked {
    const IntMat& mc = c.c1_action.matrix;
    const IntMat& mt = c.tau_action.matrix;
    bool ok = mc.transposed() * gl * mc == gl && mt.transposed() * gl * mt == gl;
    return {ok, "M^T G M = G for both"};
  });

  add(r.extras, "c1 and tau are commuting involutions", [&]() -> Checked {
    const IntMat& mc = c.c1_action.matrix;
    const IntMat& mt = c.tau_action.matrix;
    IntMat id = IntMat::identity(12);
    bool ok = mc * mc == id && mt * mt == id && mc * mt == mt * mc;
    return {ok, "order two and commuting"};
  });

  add(r.extras, "c1 and tau generate a Klein four-group", [&]() -> Checked {
    const IntMat& mc = c.c1_action.matrix;
    const IntMat& mt = c.tau_action.matrix;
    IntMat id = IntMat::identity(12);
    IntMat prod = mc * mt;
    bool distinct = mc != id && mt != id && prod != id && mc != mt && mc != prod &&
                    mt != prod;
    return {distinct, "{1, c1, tau, c1 tau} has four elements"};
  });

  return r;
}

}  // namespace nlat
