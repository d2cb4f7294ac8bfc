#include "semiflow/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <limits>

namespace semiflow {

std::string system_str(System sys) {
    switch (sys) {
        case System::example1: return "example1";
        case System::example2_x: return "example2-X";
        case System::example2_y: return "example2-Y";
    }
    return "?";
}

System system_parse(const std::string& text) {
    if (text == "example1") return System::example1;
    if (text == "example2-X") return System::example2_x;
    if (text == "example2-Y") return System::example2_y;
    throw std::invalid_argument("unknown system: '" + text + "'");
}

DiamSeries tent_diam_series(const ClosedInterval& seed, std::uint64_t first, std::uint64_t last) {
    if (first > last) throw std::invalid_argument("empty series range");
    ClosedInterval cur = tent_iterate(seed, first);
    DiamSeries out{System::example1, seed, first, last, {}, Rational(0)};
    out.diams.reserve(last - first + 1);
    for (std::uint64_t n = first;; ++n) {
        out.diams.push_back(cur.diameter());
        if (n == last) break;
        cur = tent_map().image(cur);
    }
    return out;
}

namespace {

// Seats a cursor at index n carrying the seed transported from the base
// interval by the increasing bijection onto interval n.
OrbitCursor seeded_cursor(const GrowthSchedule& s, Space space, const ClosedInterval& seed,
                          std::uint64_t n, std::optional<std::uint64_t> max_index) {
    if (n == 0) return OrbitCursor(s, space, seed, max_index);
    ClosedInterval base(Rational(1, 2), Rational(3, 2));
    ClosedInterval target = block_locate(s, space, n, max_index).interval;
    ClosedInterval img = affine_image(AffineMap::bijection(base, target), seed);
    return OrbitCursor(s, space, n, img, max_index);
}

}  // namespace

DiamSeries orbit_diam_series(const GrowthSchedule& s, Space space, const ClosedInterval& seed,
                             std::uint64_t first, std::uint64_t last, Execution exec,
                             std::optional<std::uint64_t> max_index) {
    if (first > last) throw std::invalid_argument("empty series range");
    std::uint64_t cap = max_index.value_or(s.default_index_cap());
    if (last > cap) throw CapError("schedule index exceeds feasibility cap");
    if (!ClosedInterval(Rational(1, 2), Rational(3, 2)).contains(seed))
        throw std::domain_error("point outside dynamical core");

    System sys = space == Space::X ? System::example2_x : System::example2_y;
    DiamSeries out{sys, seed, first, last, {}, {}};
    const std::uint64_t count = last - first + 1;
    out.diams.resize(count);

#ifdef _OPENMP
    if (exec == Execution::parallel && count >= 256) {
        const std::uint64_t chunk = 8192;
        const std::uint64_t chunks = (count + chunk - 1) / chunk;
        bool failed = false;
        std::string what;
#pragma omp parallel for schedule(dynamic)
        for (std::uint64_t c = 0; c < chunks; ++c) {
            try {
                std::uint64_t lo = first + c * chunk;
                std::uint64_t hi = std::min(last, lo + chunk - 1);
                OrbitCursor cursor = seeded_cursor(s, space, seed, lo, cap);
                for (std::uint64_t n = lo;; ++n) {
                    out.diams[n - first] = cursor.diameter();
                    if (n == hi) break;
                    cursor.step();
                }
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    failed = true;
                    what = e.what();
                }
            }
        }
        if (failed) throw CapError(what);
        return out;
    }
#else
    (void)exec;
#endif

    OrbitCursor cursor = seeded_cursor(s, space, seed, first, cap);
    for (std::uint64_t n = first;; ++n) {
        out.diams[n - first] = cursor.diameter();
        if (n == last) break;
        cursor.step();
    }
    return out;
}

DiamSeries diam_series(System sys, const GrowthSchedule& s, const ClosedInterval& seed,
                       std::uint64_t first, std::uint64_t last, Execution exec,
                       std::optional<std::uint64_t> max_index) {
    switch (sys) {
        case System::example1: return tent_diam_series(seed, first, last);
        case System::example2_x:
            return orbit_diam_series(s, Space::X, seed, first, last, exec, max_index);
        case System::example2_y:
            return orbit_diam_series(s, Space::Y, seed, first, last, exec, max_index);
    }
    throw std::logic_error("unreachable");
}

SweepResult sweep_block_diameter(const GrowthSchedule& s, Space space, std::uint64_t first,
                                 std::uint64_t last, const Rational& expected, Execution exec,
                                 std::optional<std::uint64_t> max_index) {
    if (first > last) throw std::invalid_argument("empty sweep range");
    SweepResult result;
    result.checked = last - first + 1;
    std::uint64_t mismatch = std::numeric_limits<std::uint64_t>::max();

#ifdef _OPENMP
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) reduction(min : mismatch)
        for (std::uint64_t n = first; n <= last; ++n) {
            if (block_locate(s, space, n, max_index).interval.diameter() != expected)
                mismatch = std::min(mismatch, n);
        }
        result.all_match = mismatch == std::numeric_limits<std::uint64_t>::max();
        result.mismatch_index = result.all_match ? 0 : mismatch;
        return result;
    }
#else
    (void)exec;
#endif

    for (std::uint64_t n = first; n <= last; ++n) {
        if (block_locate(s, space, n, max_index).interval.diameter() != expected) {
            mismatch = n;
            break;
        }
    }
    result.all_match = mismatch == std::numeric_limits<std::uint64_t>::max();
    result.mismatch_index = result.all_match ? 0 : mismatch;
    return result;
}

}  // namespace semiflow
