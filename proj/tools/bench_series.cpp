// Compares the serial reference kernels against the OpenMP ones on the
// standard schedule and confirms the outputs match exactly.

#include "semiflow/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>

using namespace semiflow;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels fall back to serial\n");
#endif

    auto s = GrowthSchedule::paper();
    const ClosedInterval seed(Rational(1, 2), Rational(3, 2));
    const std::uint64_t last = s.default_index_cap();  // through block 3

    for (Space space : {Space::X, Space::Y}) {
        DiamSeries serial{System::example1, seed, 0, 0, {}, {}};
        DiamSeries parallel = serial;
        double t_serial = time_ms([&] {
            serial = orbit_diam_series(s, space, seed, 0, last, Execution::serial);
        });
        double t_parallel = time_ms([&] {
            parallel = orbit_diam_series(s, space, seed, 0, last, Execution::parallel);
        });
        bool equal = serial.diams == parallel.diams;
        std::printf("diam series %s [0, %llu]: serial %8.1f ms, parallel %8.1f ms, "
                    "speedup %.2fx, identical: %s\n",
                    space_str(space).c_str(), static_cast<unsigned long long>(last), t_serial,
                    t_parallel, t_serial / t_parallel, equal ? "yes" : "NO");
        if (!equal) return 1;
    }

    {
        const Rational expected(1, 4);
        SweepResult sr, pr;
        double t_serial = time_ms(
            [&] { sr = sweep_block_diameter(s, Space::X, 8, last, expected, Execution::serial); });
        double t_parallel = time_ms([&] {
            pr = sweep_block_diameter(s, Space::X, 8, last, expected, Execution::parallel);
        });
        std::printf("block diameter sweep X [8, %llu]: serial %8.1f ms, parallel %8.1f ms, "
                    "speedup %.2fx, agree: %s\n",
                    static_cast<unsigned long long>(last), t_serial, t_parallel,
                    t_serial / t_parallel,
                    sr.all_match == pr.all_match && sr.checked == pr.checked ? "yes" : "NO");
        if (sr.all_match != pr.all_match) return 1;
    }
    return 0;
}
