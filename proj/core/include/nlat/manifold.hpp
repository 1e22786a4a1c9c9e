#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlat/lattice.hpp"

namespace nlat {

struct Pi1 {
  enum class Kind { Trivial, Finite, Unknown };
  Kind kind = Kind::Trivial;
  long long order = 1;  // meaningful for Finite (and 1 for Trivial)
  std::string tag;      // display only, e.g. "Z2"

  bool operator==(const Pi1&) const = default;
};

// How many pairwise disjoint spheres / projective planes of each normal Euler
// number a manifold is known to contain.
struct Capacities {
  long long sphere_minus2 = 0;
  long long sphere_plus2 = 0;
  long long sphere_minus1 = 0;
  long long sphere_plus1 = 0;
  long long plane_minus1 = 0;  // essential projective planes
  long long plane_plus1 = 0;

  bool operator==(const Capacities&) const = default;
};

// Invariant-level record of a closed oriented smooth 4-manifold.
struct Manifold {
  std::string name;
  long long chi = 0;
  long long sigma = 0;
  long long b1 = 0;
  Parity parity = Parity::Even;
  Pi1 pi1;
  bool spin = false;
  bool cover_spin = false;  // the universal cover is spin
  std::optional<Lattice> lattice;
  Capacities capacities;
  std::optional<long long> chi_h;

  long long b2() const { return chi - 2 + 2 * b1; }
};

struct SurfaceComponent {
  enum class Kind { Sphere, ProjectivePlane };
  Kind kind = Kind::Sphere;
  long long euler = -2;
  long long count = 1;
  bool essential = false;  // projective planes only
};

struct SurfaceConfig {
  std::vector<SurfaceComponent> components;
  // Optional explicit homology classes, one per sphere instance, in the
  // manifold's lattice basis.
  std::optional<std::vector<std::vector<Int>>> classes;

  long long sphere_count(long long euler) const;
  long long plane_count() const;
};

Manifold block_s2xs2();
Manifold block_cp2();
Manifold block_cp2bar();
Manifold block_k3();
Manifold block_enriques();
Manifold block_teichner(long long b2T);
Manifold block_elliptic(long long n, long long p, long long t = 0);
Manifold block_hitchin();

Manifold connected_sum(const Manifold& x, const Manifold& y);

// Connected sum along a wedge of g circles carrying the (shared) fundamental
// group.  Requires b1 = 0 on both sides and identical pi1 records.
Manifold sum_along_wedge(const Manifold& x, const Manifold& y, long long g);

Manifold reverse_orientation(const Manifold& x);

// Finite universal cover.  Requires pi1 trivial or finite and b1 = 0.
Manifold universal_cover(const Manifold& x);

// Preimage of a sphere configuration in a degree-m cover.
SurfaceConfig lift_surface_config(const SurfaceConfig& c, long long m);

// Empty result means the configuration fits the manifold.
std::vector<std::string> validate_config(const Manifold& x, const SurfaceConfig& c);

// Build grammar: blocks S2xS2, CP2, CP2bar, K3, Enriques, Hitchin,
// Teichner(b2=N), Elliptic(n=N,p=P[,t=T]); operators csum(A,B,...),
// sumW(g=G,A,B,...), rev(A), cover(A); infix sugar `A # B` and `A #n B`.
Manifold parse_build(std::string_view text);

}  // namespace nlat
