#pragma once

#include <string>
#include <vector>

#include "nlat/lattice.hpp"

namespace nlat {

// Normal form of an indefinite unimodular integral quadratic form:
// p<1> + q<-1> in the odd case, r*E8 (or r*E8(-1)) + q*U in the even case.
struct ClassDescriptor {
  Parity parity = Parity::Odd;
  FormExpr normal_form;
};

// Throws std::invalid_argument for definite input, parity/rank inconsistency,
// or an even signature not divisible by 8.
ClassDescriptor classify_indefinite(long long rank, long long signature, Parity parity);

// Indefinite unimodular forms agree exactly when rank, signature and parity
// all agree.  Throws std::invalid_argument when either lattice is definite or
// not unimodular, where that criterion does not apply.
bool same_indefinite_class(const Lattice& a, const Lattice& b);

// Which ranks a standard family of a fixed signature realizes: every rank
// from min_rank on, in steps of two, with the listed smaller ranks missed.
struct CoverageReport {
  std::string family;
  long long signature = 0;
  Parity parity = Parity::Odd;
  long long min_rank = 0;
  std::vector<long long> excluded_ranks;
};

// Odd forms of signature s realized by manifolds of rank |s|(b2T+4)-4+2n, n >= 1.
CoverageReport family_coverage_x(long long b2T, long long signature);

// Even forms of signature 8r realized by manifolds of rank 12|r|+2(n-1), n >= 1.
CoverageReport family_coverage_y(long long signature);

}  // namespace nlat
