#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlat/lattice.hpp"
#include "nlat/manifold.hpp"

namespace nlat {

enum class Conclusion {
  ObstructedNoFiniteOrder,  // not realized by any finite order diffeomorphism
  ObstructedNoInvolution,   // not realized by any smooth involution
  NontrivialClass,          // nonzero in the mapping class group
  Inapplicable,             // a boundary exclusion of the criterion holds
  HypothesisFailure,        // some hypothesis fails; the criterion is silent
};

std::string to_string(Conclusion c);

// One hypothesis or exclusion of a criterion, together with the numeric
// witnesses it was evaluated on.
struct Condition {
  std::string text;
  bool satisfied = false;
  bool boundary = false;  // failing a boundary grades the verdict Inapplicable
  bool waived = false;    // accepted under an explicit override despite failing
  std::string computed;
};

// All conditions pass (or are waived): on_success.  Otherwise a failed
// boundary wins over a failed hypothesis.
Conclusion grade_conditions(const std::vector<Condition>& conditions, Conclusion on_success);

// A characteristic vector, kept with the lattice it is characteristic for.
struct CharVector {
  Lattice lattice;
  std::vector<Int> coordinates;
};

struct Verdict {
  Conclusion conclusion = Conclusion::HypothesisFailure;
  std::string rule;  // identifier of the criterion applied
  std::vector<Condition> conditions;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
  std::optional<CharVector> char_vector;

  bool obstructed() const {
    return conclusion == Conclusion::ObstructedNoFiniteOrder ||
           conclusion == Conclusion::ObstructedNoInvolution;
  }
};

// Multi-twist along k+ spheres of Euler number +2 and k- of -2 in a spin
// manifold with b1 = 0 and sigma != 0: no finite order representative when
// sigma/2 != k+ - k- and k+ = 0 or -sigma/16 + 1 > k+ > 0 (roles of k+ and
// k- switch for sigma > 0).  Throws std::invalid_argument on a non-spin
// manifold, b1 > 0, or a configuration that is not made of (+-2)-spheres.
Verdict check_multi_twist_spin(const Manifold& x, const SurfaceConfig& cfg);

// Multi-twist along k spheres of one Euler number (-2 when sigma < 0, +2
// when sigma > 0) in a manifold with finite fundamental group and spin
// universal cover: no finite order representative when k != -sigma/2.  The
// verdict is cross-checked against the spin criterion on the universal
// cover.  Throws on mixed Euler numbers or an unknown fundamental group.
Verdict check_multi_twist(const Manifold& x, const SurfaceConfig& cfg);

// Projective multi-twist along k disjoint essential projective planes of one
// Euler number: no finite order representative when sigma < -1 (resp. > 1)
// and k != -sigma (resp. k != sigma).  Throws on an inessential plane, a
// sphere component, mixed Euler numbers, or an unknown fundamental group.
Verdict check_projective_twist(const Manifold& x, const SurfaceConfig& cfg);

// A projective twist is a nontrivial mapping class whenever b+ != b1 - 1 or
// b- != b1; in particular always for b1 = 0.  Throws when the manifold
// carries no essential projective plane.
Verdict projective_twist_nontrivial(const Manifold& x);

// Multi-reflection along k >= 1 exceptional spheres of X = X' # k CP2bar:
// no smooth involution representative when X' is spin with sigma(X') < 0,
// H1(X') has no 2-torsion and no infinite order elements, and
// k != -sigma(X)/2.  The homology hypothesis is derived from the pi1 record
// when possible and otherwise taken from h1_ok.  With as_paper, failed
// non-boundary hypotheses are waived and each waiver is recorded in the
// verdict.  Throws on k < 1.
Verdict check_multi_reflection(const Manifold& xprime, long long k,
                               std::optional<bool> h1_ok = std::nullopt,
                               bool as_paper = false);

// Multi-line human-readable rendering of a verdict.
std::string verdict_report(const Verdict& v);

}  // namespace nlat
