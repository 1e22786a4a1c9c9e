#include "nlat/isometry.hpp"

#include <stdexcept>

namespace nlat {

namespace {

std::vector<Int> pair_with_all(const Lattice& lat, const std::vector<Int>& c) {
  if (c.size() != lat.gram.rows())
    throw std::invalid_argument("isometry: class of wrong rank");
  std::vector<Int> gc(lat.gram.rows(), 0);
  for (std::size_t i = 0; i < lat.gram.rows(); ++i)
    for (std::size_t j = 0; j < lat.gram.cols(); ++j) gc[i] += lat.gram(i, j) * c[j];
  return gc;
}

void check_orthogonal(const std::vector<std::vector<Int>>& classes,
                      const std::vector<std::vector<Int>>& gcs, const char* who) {
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      Int p = 0;
      for (std::size_t j = 0; j < classes[a].size(); ++j) p += classes[a][j] * gcs[b][j];
      if (p != 0)
        throw std::invalid_argument(std::string(who) + ": classes are not pairwise orthogonal");
    }
}

void check_isometry(const Isometry& f) {
  if (f.matrix.transposed() * f.lattice.gram * f.matrix != f.lattice.gram)
    throw std::logic_error("isometry: operator does not preserve the form");
}

}  // namespace

Isometry multi_twist_operator(const Lattice& lat,
                              const std::vector<std::vector<Int>>& classes) {
  const std::size_t n = lat.gram.rows();
  std::vector<std::vector<Int>> gcs;
  std::vector<int> signs;
  for (const auto& c : classes) {
    std::vector<Int> gc = pair_with_all(lat, c);
    Int sq = 0;
    for (std::size_t j = 0; j < n; ++j) sq += c[j] * gc[j];
    if (sq != 2 && sq != -2)
      throw std::invalid_argument("multi_twist: class must have square +2 or -2");
    signs.push_back(sq > 0 ? 1 : -1);
    gcs.push_back(std::move(gc));
  }
  check_orthogonal(classes, gcs, "multi_twist");

  IntMat m = IntMat::identity(n);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= Int(signs[k]) * classes[k][i] * gcs[k][j];
  Isometry f{lat, std::move(m), true};
  check_isometry(f);
  return f;
}

Isometry multi_reflection_operator(const Lattice& lat,
                                   const std::vector<std::vector<Int>>& classes) {
  const std::size_t n = lat.gram.rows();
  std::vector<std::vector<Int>> gcs;
  for (const auto& e : classes) {
    std::vector<Int> ge = pair_with_all(lat, e);
    Int sq = 0;
    for (std::size_t j = 0; j < n; ++j) sq += e[j] * ge[j];
    if (sq != -1)
      throw std::invalid_argument("multi_reflection: class must have square -1");
    gcs.push_back(std::move(ge));
  }
  check_orthogonal(classes, gcs, "multi_reflection");

  IntMat m = IntMat::identity(n);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += 2 * classes[k][i] * gcs[k][j];
  Isometry f{lat, std::move(m), false};
  check_isometry(f);
  return f;
}

Isometry projective_twist_operator(const Lattice& lat) {
  return {lat, IntMat::identity(lat.gram.rows()), true};
}

FixedSublattice fixed_sublattice(const Isometry& f) {
  IntMat delta = f.matrix - IntMat::identity(f.matrix.rows());
  return {kernel_basis(delta)};
}

EquivariantSig involution_signatures(const Isometry& f) {
  const std::size_t n = f.matrix.rows();
  if (f.matrix * f.matrix != IntMat::identity(n))
    throw std::invalid_argument("involution_signatures: operator is not an involution");
  FixedSublattice fx = fixed_sublattice(f);
  RatMat b = to_rational(fx.basis);
  Inertia in = inertia(b * to_rational(f.lattice.gram) * b.transposed());
  EquivariantSig sig;
  sig.b_f_plus = static_cast<long long>(in.positive);
  sig.b_f_minus = static_cast<long long>(in.negative);
  sig.sigma_f = sig.b_f_plus - sig.b_f_minus;
  return sig;
}

}  // namespace nlat
