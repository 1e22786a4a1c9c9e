#include <benchmark/benchmark.h>

#include <vector>

#include "nlat/classify.hpp"
#include "nlat/degtyarev.hpp"
#include "nlat/isometry.hpp"
#include "nlat/lattice.hpp"
#include "nlat/linalg.hpp"
#include "nlat/suite.hpp"

namespace {

void BM_smith_normal_form_k3(benchmark::State& state) {
  nlat::Lattice l = nlat::build_k3_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(nlat::smith_normal_form(l.gram));
}
BENCHMARK(BM_smith_normal_form_k3);

void BM_invariants_k3(benchmark::State& state) {
  nlat::Lattice l = nlat::build_k3_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(nlat::invariants(l));
}
BENCHMARK(BM_invariants_k3);

void BM_classify_roundtrip(benchmark::State& state) {
  nlat::LatticeInvariants inv = nlat::invariants(nlat::build_k3_lattice());
  for (auto _ : state) {
    nlat::ClassDescriptor d =
        nlat::classify_indefinite(inv.rank, inv.signature, inv.parity);
    benchmark::DoNotOptimize(nlat::standard_lattice(d.normal_form));
  }
}
BENCHMARK(BM_classify_roundtrip);

void BM_glue_d4d4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nlat::glue_d4d4_to_e8(1));
}
BENCHMARK(BM_glue_d4d4);

void BM_multi_twist_k3(benchmark::State& state) {
  nlat::Lattice l = nlat::build_k3_lattice();
  // u1 +- u2 in the first U summand (offset 16 after the two E8 blocks)
  std::vector<std::vector<nlat::Int>> classes(2, std::vector<nlat::Int>(22, 0));
  classes[0][16] = 1;
  classes[0][17] = 1;
  classes[1][16] = 1;
  classes[1][17] = -1;
  for (auto _ : state) {
    nlat::Isometry f = nlat::multi_twist_operator(l, classes);
    benchmark::DoNotOptimize(nlat::involution_signatures(f));
  }
}
BENCHMARK(BM_multi_twist_k3);

void BM_certificate(benchmark::State& state) {
  for (auto _ : state) {
    nlat::EigenlatticeCertificate c = nlat::build_certificate();
    benchmark::DoNotOptimize(nlat::verify_certificate(c));
  }
}
BENCHMARK(BM_certificate);

void BM_paper_suite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nlat::paper_suite());
}
BENCHMARK(BM_paper_suite);

}  // namespace

BENCHMARK_MAIN();
