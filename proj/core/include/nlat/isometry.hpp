#pragma once

#include <vector>

#include "nlat/lattice.hpp"

namespace nlat {

// An isometry of a lattice, acting on coordinate columns.
// Invariant: matrix^T . gram . matrix = gram, checked on construction.
struct Isometry {
  Lattice lattice;
  IntMat matrix;
  bool preserves_spin = true;
};

// Product of the reflections in pairwise orthogonal classes of square +-2,
// a |-> a - sign(c_i^2) (a.c_i) c_i.  For a (-2)-class this is the
// Picard-Lefschetz formula a + (a.c)c.  Throws std::invalid_argument on a
// class of the wrong square or a non-orthogonal pair.
Isometry multi_twist_operator(const Lattice& lat, const std::vector<std::vector<Int>>& classes);

// Product of the reflections in pairwise orthogonal (-1)-classes,
// a |-> a + 2 sum (a.e_i) e_i.  Same validation errors as above.
Isometry multi_reflection_operator(const Lattice& lat,
                                   const std::vector<std::vector<Int>>& classes);

// Trivial action on second homology.
Isometry projective_twist_operator(const Lattice& lat);

// The saturated sublattice of vectors fixed by f.
struct FixedSublattice {
  IntMat basis;  // rows, in lattice coordinates

  long long rank() const { return static_cast<long long>(basis.rows()); }
};

FixedSublattice fixed_sublattice(const Isometry& f);

struct EquivariantSig {
  long long b_f_plus = 0;
  long long b_f_minus = 0;
  long long sigma_f = 0;
};

// Inertia of the form restricted to the (+1)-eigenlattice of an involution.
// Throws std::invalid_argument when f.f is not the identity.
EquivariantSig involution_signatures(const Isometry& f);

}  // namespace nlat
