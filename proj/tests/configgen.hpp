#pragma once

#include <random>
#include <vector>

#include "nlat/lattice.hpp"
#include "nlat/linalg.hpp"
#include "testutil.hpp"

// Random lattices carrying orthogonal sphere/plane class configurations,
// built from blocks that each donate one class and then conjugated by a
// random change of basis so nothing stays block-diagonal.
namespace configgen {

struct ClassConfig {
  nlat::Lattice lat;
  std::vector<std::vector<nlat::Int>> classes;
  long long k_plus = 0;   // classes of square +2
  long long k_minus = 0;  // classes of square -2 (or -1 for reflections)
};

inline ClassConfig assemble(std::mt19937_64& rng, long long max_rank, bool reflections) {
  using namespace nlat;
  struct Block {
    IntMat gram;
    std::vector<Int> cls;  // empty: filler block
    int sign = 0;
  };
  std::vector<Block> pool;
  if (reflections) {
    pool.push_back({IntMat{{-1}}, {1}, -1});
  } else {
    pool.push_back({IntMat{{0, 1}, {1, 0}}, {1, -1}, -1});
    pool.push_back({IntMat{{0, 1}, {1, 0}}, {1, 1}, 1});
    pool.push_back({IntMat{{-2}}, {1}, -1});
  }
  pool.push_back({IntMat{{0, 1}, {1, 0}}, {}, 0});
  pool.push_back({IntMat{{1}}, {}, 0});
  pool.push_back({IntMat{{-1}}, {}, 0});
  pool.push_back({IntMat{{2}}, {}, 0});

  std::vector<Block> picked;
  long long rank = 0;
  while (true) {
    const Block& b = pool[rng() % pool.size()];
    long long br = static_cast<long long>(b.gram.rows());
    if (rank + br > max_rank) break;
    picked.push_back(b);
    rank += br;
    if (rng() % 3 == 0 && rank >= 2) break;
  }
  bool has_class = false;
  for (const Block& b : picked) has_class |= !b.cls.empty();
  if (!has_class) {
    while (rank + static_cast<long long>(pool[0].gram.rows()) > max_rank && !picked.empty()) {
      rank -= static_cast<long long>(picked.back().gram.rows());
      picked.pop_back();
    }
    picked.push_back(pool[0]);
    rank += static_cast<long long>(pool[0].gram.rows());
  }

  std::size_t n = static_cast<std::size_t>(rank);
  IntMat gram(n, n);
  ClassConfig cfg;
  std::size_t off = 0;
  for (const Block& b : picked) {
    for (std::size_t i = 0; i < b.gram.rows(); ++i)
      for (std::size_t j = 0; j < b.gram.cols(); ++j) gram(off + i, off + j) = b.gram(i, j);
    if (!b.cls.empty()) {
      std::vector<Int> c(n, 0);
      for (std::size_t i = 0; i < b.cls.size(); ++i) c[off + i] = b.cls[i];
      cfg.classes.push_back(std::move(c));
      (b.sign > 0 ? cfg.k_plus : cfg.k_minus) += 1;
    }
    off += b.gram.rows();
  }

  IntMat p = testutil::random_unimodular(rng, n);
  IntMat p_inv = to_integer(inverse(to_rational(p)));
  cfg.lat.gram = p.transposed() * gram * p;
  cfg.lat.label = "random config";
  for (auto& c : cfg.classes) c = p_inv.apply(c);
  return cfg;
}

inline ClassConfig random_twist_config(std::mt19937_64& rng, long long max_rank) {
  return assemble(rng, max_rank, false);
}

inline ClassConfig random_reflection_config(std::mt19937_64& rng, long long max_rank) {
  return assemble(rng, max_rank, true);
}

}  // namespace configgen
