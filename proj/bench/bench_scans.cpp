// Copyright 2026 The coopshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times the serial reference scans against their OpenMP kernels on
// generated convex games and cross-checks that both return identical
// results. Usage: bench_scans [max_players] [repeats]

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "coopshare/core.hpp"
#include "coopshare/game.hpp"
#include "coopshare/lorenz.hpp"
#include "coopshare/payments.hpp"
#include "coopshare/scans.hpp"

using namespace coopshare;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(int repeats, F&& f) {
  const auto start = clock_type::now();
  for (int r = 0; r < repeats; ++r) {
    f();
  }
  const auto elapsed = clock_type::now() - start;
  return std::chrono::duration<double, std::milli>(elapsed).count() / repeats;
}

void report(const char* name, int n, double serial_ms, double parallel_ms) {
  std::cout << std::left << std::setw(14) << name << " n=" << std::setw(3) << n
            << std::right << std::fixed << std::setprecision(2)
            << std::setw(10) << serial_ms << " ms" << std::setw(10)
            << parallel_ms << " ms   x" << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int max_players = argc > 1 ? std::atoi(argv[1]) : 12;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel kernels run serially\n";
#endif
  std::cout << std::left << std::setw(14) << "kernel" << "     "
            << std::right << std::setw(10) << "serial" << std::setw(13)
            << "parallel" << "   speedup\n";

  for (int n = 8; n <= max_players; n += 2) {
    const TuGame game = gen_convex(n, 42, 3 * n);
    const Allocation vp = vickrey(game);
    const WeightVector weights = WeightVector::unit(n);
    const std::vector<Rat>& w = weights.entries();

    decltype(scans::supermod_violation_serial(game)) conv_s, conv_p;
    report("convexity", n,
           time_ms(repeats,
                   [&] { conv_s = scans::supermod_violation_serial(game); }),
           time_ms(repeats,
                   [&] { conv_p = scans::supermod_violation_parallel(game); }));
    if (conv_s.has_value() != conv_p.has_value()) {
      std::cerr << "MISMATCH: convexity kernels disagree\n";
      return 1;
    }

    scans::MaxAvgScan avg_s, avg_p;
    report("max-average", n,
           time_ms(repeats, [&] { avg_s = scans::max_average_serial(game, w); }),
           time_ms(repeats,
                   [&] { avg_p = scans::max_average_parallel(game, w); }));
    if (avg_s.maximizer_union != avg_p.maximizer_union ||
        avg_s.average != avg_p.average) {
      std::cerr << "MISMATCH: max-average kernels disagree\n";
      return 1;
    }

    decltype(scans::core_violation_serial(game, vp.payoffs)) core_s, core_p;
    report("core-check", n,
           time_ms(repeats,
                   [&] { core_s = scans::core_violation_serial(game, vp.payoffs); }),
           time_ms(repeats, [&] {
             core_p = scans::core_violation_parallel(game, vp.payoffs);
           }));
    if (core_s != core_p) {
      std::cerr << "MISMATCH: core-check kernels disagree\n";
      return 1;
    }

    decltype(scans::superadd_violation_serial(game)) add_s, add_p;
    report("superadditive", n,
           time_ms(repeats,
                   [&] { add_s = scans::superadd_violation_serial(game); }),
           time_ms(repeats,
                   [&] { add_p = scans::superadd_violation_parallel(game); }));
    if (add_s.has_value() != add_p.has_value()) {
      std::cerr << "MISMATCH: superadditivity kernels disagree\n";
      return 1;
    }
  }
  return 0;
}
