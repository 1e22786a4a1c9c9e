#include "nlat/classify.hpp"

#include <cstdlib>
#include <stdexcept>

namespace nlat {

ClassDescriptor classify_indefinite(long long rank, long long signature, Parity parity) {
  long long abs_sig = std::llabs(signature);
  if (abs_sig >= rank)
    throw std::invalid_argument("classify_indefinite: form is not indefinite");
  if ((rank - signature) % 2 != 0)
    throw std::invalid_argument("classify_indefinite: rank and signature have different parity");

  ClassDescriptor out;
  out.parity = parity;
  if (parity == Parity::Odd) {
    long long p = (rank + signature) / 2;
    long long q = (rank - signature) / 2;
    out.normal_form.summands.push_back({BaseForm::One, p, 1});
    out.normal_form.summands.push_back({BaseForm::MinusOne, q, 1});
    return out;
  }
  if (signature % 8 != 0)
    throw std::invalid_argument(
        "classify_indefinite: even indefinite forms have signature divisible by 8");
  long long r = abs_sig / 8;
  long long q = (rank - 8 * r) / 2;
  if (q < 1)
    throw std::invalid_argument("classify_indefinite: no hyperbolic summand left");
  if (r > 0) out.normal_form.summands.push_back({BaseForm::E8, r, signature < 0 ? 1 : -1});
  out.normal_form.summands.push_back({BaseForm::U, q, 1});
  return out;
}

bool same_indefinite_class(const Lattice& a, const Lattice& b) {
  auto check = [](const Lattice& l) {
    LatticeInvariants inv = invariants(l);
    if (!inv.unimodular)
      throw std::invalid_argument("same_indefinite_class: lattice is not unimodular");
    if (inv.b_plus < 1 || inv.b_minus < 1)
      throw std::invalid_argument("same_indefinite_class: lattice is definite");
    return inv;
  };
  LatticeInvariants ia = check(a), ib = check(b);
  return ia.rank == ib.rank && ia.signature == ib.signature && ia.parity == ib.parity;
}

namespace {

std::vector<long long> excluded_below(long long min_possible, long long min_realized) {
  std::vector<long long> out;
  for (long long r = min_possible; r < min_realized; r += 2) out.push_back(r);
  return out;
}

}  // namespace

CoverageReport family_coverage_x(long long b2T, long long signature) {
  if (b2T < 1) throw std::invalid_argument("family_coverage: b2T must be positive");
  if (signature == 0) throw std::invalid_argument("family_coverage: signature must be nonzero");
  long long s = std::llabs(signature);
  CoverageReport rep;
  rep.family = "X(b2T=" + std::to_string(b2T) + ")";
  rep.signature = signature;
  rep.parity = Parity::Odd;
  rep.min_rank = s * (b2T + 4) - 4 + 2;
  rep.excluded_ranks = excluded_below(s + 2, rep.min_rank);
  return rep;
}

CoverageReport family_coverage_y(long long signature) {
  if (signature == 0) throw std::invalid_argument("family_coverage: signature must be nonzero");
  if (signature % 8 != 0)
    throw std::invalid_argument("family_coverage: even-family signature must be divisible by 8");
  long long r = std::llabs(signature) / 8;
  CoverageReport rep;
  rep.family = "Y";
  rep.signature = signature;
  rep.parity = Parity::Even;
  rep.min_rank = 12 * r;
  rep.excluded_ranks = excluded_below(8 * r + 2, rep.min_rank);
  return rep;
}

}  // namespace nlat
