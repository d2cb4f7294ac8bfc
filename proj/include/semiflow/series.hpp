#pragma once

#include "semiflow/plmaps.hpp"

#include <optional>

namespace semiflow {

enum class System { example1, example2_x, example2_y };

std::string system_str(System sys);
System system_parse(const std::string& text);

enum class Execution { serial, parallel };

/// Exact diameters diam(t.U) of a seed interval along an index range,
/// plus the diameter of the image under the absorbing element where the
/// system has one.
struct DiamSeries {
    System system;
    ClosedInterval seed;
    std::uint64_t first;
    std::uint64_t last;
    std::vector<Rational> diams;  // diams[i] is for index first + i
    std::optional<Rational> infinity_diam;

    const Rational& at(std::uint64_t n) const { return diams.at(n - first); }
};

/// Tent-map series (first system). The absorbing element maps everything
/// to a point, so infinity_diam is 0.
DiamSeries tent_diam_series(const ClosedInterval& seed, std::uint64_t first, std::uint64_t last);

/// Block-space series (second system, either axis). Serial execution is
/// the reference implementation: one cursor walked across the whole
/// range. Parallel execution splits the range into chunks, seats a cursor
/// at each chunk start via the enumerated interval, and walks chunks
/// concurrently; results are identical to serial execution.
DiamSeries orbit_diam_series(const GrowthSchedule& s, Space space, const ClosedInterval& seed,
                             std::uint64_t first, std::uint64_t last, Execution exec,
                             std::optional<std::uint64_t> max_index = {});

/// Entry point shared by the CLI: dispatches on the system.
DiamSeries diam_series(System sys, const GrowthSchedule& s, const ClosedInterval& seed,
                       std::uint64_t first, std::uint64_t last, Execution exec,
                       std::optional<std::uint64_t> max_index = {});

/// Checks diam(interval n) == expected for every n in [first, last] by
/// O(1) block arithmetic per index.
struct SweepResult {
    bool all_match = true;
    std::uint64_t mismatch_index = 0;  // meaningful when !all_match
    std::uint64_t checked = 0;
};

SweepResult sweep_block_diameter(const GrowthSchedule& s, Space space, std::uint64_t first,
                                 std::uint64_t last, const Rational& expected, Execution exec,
                                 std::optional<std::uint64_t> max_index = {});

}  // namespace semiflow
