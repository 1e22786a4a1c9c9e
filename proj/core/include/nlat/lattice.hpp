#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlat/linalg.hpp"
#include "nlat/matrix.hpp"

namespace nlat {

// A finitely generated integral lattice presented by its Gram matrix.
struct Lattice {
  IntMat gram;
  std::string label;

  long long rank() const { return static_cast<long long>(gram.rows()); }
  Int pair(const std::vector<Int>& x, const std::vector<Int>& y) const;
};

enum class Parity { Even, Odd };

std::string to_string(Parity p);

struct LatticeInvariants {
  long long rank = 0;
  long long b_plus = 0;
  long long b_minus = 0;
  long long signature = 0;
  Int det = 1;
  Parity parity = Parity::Even;
  bool unimodular = true;

  bool operator==(const LatticeInvariants&) const = default;
};

std::string to_string(const LatticeInvariants& inv);

// Symbolic direct sums of the standard building blocks, e.g. "2*E8 + 3*U(2)".
enum class BaseForm { E8, U, D4, One, MinusOne };

struct FormSummand {
  BaseForm base = BaseForm::U;
  long long multiplicity = 1;
  long long scale = 1;

  bool operator==(const FormSummand&) const = default;
};

struct FormExpr {
  std::vector<FormSummand> summands;
  bool flipped = false;  // reverse the orientation: negates every summand scale

  long long rank() const;
  std::string str() const;

  bool operator==(const FormExpr&) const = default;
};

// Grammar:  expr := term ('+' term)* ; term := [mult '*'] base ['(' scale ')']
// with base one of E8, U, H, D4, <1>, <-1>.  H is accepted as a synonym for U.
// Whitespace is ignored.  Throws std::invalid_argument on malformed input.
FormExpr parse_form(std::string_view text);

long long base_rank(BaseForm b);

Lattice standard_lattice(const FormExpr& expr);
Lattice standard_lattice(std::string_view expr);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Int& n);

LatticeInvariants invariants(const Lattice& l);

// c is characteristic when x.(x - c) is even for every x, equivalently when
// (Gc)_i = G_ii mod 2 for all i.
bool is_characteristic(const Lattice& l, const std::vector<Int>& c);

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // nontrivial factors, each dividing the next

  Int order() const;
};

DiscriminantGroup discriminant_group(const Lattice& l);

// An integral overlattice of finite index, generated by the base together
// with rational glue vectors written in base coordinates.
struct Overlattice {
  Lattice lattice;
  Int index = 1;
  RatMat basis;  // rows express the overlattice basis in base coordinates
};

struct GlueSpec {
  FormExpr base;
  std::vector<std::vector<Rat>> glue_vectors;
};

Overlattice overlattice_of(const Lattice& base, const std::vector<std::vector<Rat>>& glue);
Overlattice overlattice(const GlueSpec& spec);

// Searches for sets of glue vectors (coset representatives of denominator at
// most `bound`) whose overlattice realizes the target invariants.  Results are
// deduplicated by the lattice they generate and returned deterministically.
using GlueSet = std::vector<std::vector<Rat>>;

std::vector<GlueSet> glue_search(const Lattice& base, const LatticeInvariants& target,
                                 long long bound);

}  // namespace nlat
