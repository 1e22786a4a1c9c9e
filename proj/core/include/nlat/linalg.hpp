#pragma once

#include <cstddef>

#include "nlat/matrix.hpp"

namespace nlat {

// u * m * v = d with u, v unimodular; d diagonal, nonnegative, each entry
// dividing the next.
struct SmithResult {
  IntMat u;
  IntMat d;
  IntMat v;
};
SmithResult smith_normal_form(const IntMat& m);

// u * m = h with u unimodular; h in row echelon form with positive pivots and
// entries above each pivot reduced into [0, pivot).
struct HermiteResult {
  IntMat h;
  IntMat u;
};
HermiteResult hermite_normal_form(const IntMat& m);

bool is_hermite_form(const IntMat& h);

// p^T * g * p = d with p invertible over the rationals, d diagonal.
struct CongruenceResult {
  RatMat p;
  RatMat d;
};
CongruenceResult congruence_diagonalize(const RatMat& g);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const RatMat& g);

// Rows form a basis of the saturated integer kernel {x : m x = 0},
// canonicalized by Hermite form.
IntMat kernel_basis(const IntMat& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMat& m);

// Exact inverse over the rationals; throws on singular input.
RatMat inverse(const RatMat& m);

}  // namespace nlat
