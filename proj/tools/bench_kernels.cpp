// Compares the OpenMP kernels against the serial reference implementations on
// random metric Lie algebras. Exact arithmetic: outputs are asserted equal
// before timings are reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "framegeo/curvature.hpp"
#include "framegeo/derived.hpp"
#include "random_manifold.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(int reps, F&& fn) {
  const auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif
  std::printf("%-4s  %-22s  %12s  %12s  %8s\n", "dim", "kernel", "serial (ms)", "parallel (ms)", "speedup");

  std::mt19937_64 rng(20240531);
  for (int dim : {5, 7, 9}) {
    const framegeo::FrameManifold m = framegeo::testing::random_metric_lie_algebra(rng, dim, /*random_metric=*/true);
    const framegeo::Connection conn = framegeo::levi_civita(m);

    const framegeo::Tensor r_serial = framegeo::serial::riemann(m, conn);
    const framegeo::Tensor r_parallel = framegeo::riemann(m, conn);
    if (!(r_serial == r_parallel)) {
      std::fprintf(stderr, "FATAL: serial and parallel riemann disagree at dim %d\n", dim);
      return 1;
    }
    const double t_r_serial = time_ms(reps, [&] { (void)framegeo::serial::riemann(m, conn); });
    const double t_r_parallel = time_ms(reps, [&] { (void)framegeo::riemann(m, conn); });
    std::printf("%-4d  %-22s  %12.3f  %12.3f  %8.2fx\n", dim, "riemann", t_r_serial, t_r_parallel,
                t_r_serial / t_r_parallel);

    const framegeo::CurvaturePack pack = framegeo::curvature_pack(m, conn);
    const auto c_serial = framegeo::serial::derivation_condition(m, pack, framegeo::DerivationKind::SXiDotR);
    const auto c_parallel = framegeo::derivation_condition(m, pack, framegeo::DerivationKind::SXiDotR);
    if (c_serial.holds != c_parallel.holds || c_serial.witness != c_parallel.witness) {
      std::fprintf(stderr, "FATAL: serial and parallel condition scans disagree at dim %d\n", dim);
      return 1;
    }
    const double t_c_serial =
        time_ms(reps, [&] { (void)framegeo::serial::derivation_condition(m, pack, framegeo::DerivationKind::SXiDotR); });
    const double t_c_parallel =
        time_ms(reps, [&] { (void)framegeo::derivation_condition(m, pack, framegeo::DerivationKind::SXiDotR); });
    std::printf("%-4d  %-22s  %12.3f  %12.3f  %8.2fx\n", dim, "condition S(ξ,X)·R", t_c_serial, t_c_parallel,
                t_c_serial / t_c_parallel);
  }
  return 0;
}
