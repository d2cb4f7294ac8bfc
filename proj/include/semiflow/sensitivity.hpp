#pragma once

#include "semiflow/series.hpp"
#include "semiflow/subsets.hpp"

namespace semiflow {

/// D(U, eps) = {t : diam(t.U) > eps} (or >= eps in non-strict mode),
/// resolved exactly along the series range. `members` is exact inside
/// [series.first, horizon]; the tail beyond the horizon is filled in only
/// when a certificate covers it (tent orbits reach the full interval and
/// stay there), and the certificate string says which case applies.
struct DSetResult {
    Rational epsilon;
    bool strict = true;
    std::uint64_t horizon = 0;
    SubsetDesc members;
    std::string certificate;
};

DSetResult d_set(const DiamSeries& series, const Rational& epsilon, bool strict);

/// Least n with the n-fold tent image of u equal to [0, 1]. Exists for
/// every non-degenerate rational subinterval; degenerate input is an error.
std::uint64_t tent_covering_time(const ClosedInterval& u);

struct MixingWitness {
    std::uint64_t covering_time = 0;
    bool infinity_hits = false;  // the absorbing element sends u to {0}
    std::string verdict;
};

/// Certifies that the hitting-time set D(u, v) of the tent system has
/// compact (finite) complement: from the covering time on, every iterate
/// of u is the whole interval.
MixingWitness strong_mixing_witness(const ClosedInterval& u, const ClosedInterval& v);

enum class Verdict { verified, refuted, bounded_evidence };

std::string verdict_str(Verdict v);

struct ClaimEntry {
    std::string claim;
    Verdict verdict;
    std::vector<std::string> witnesses;
};

struct SensitivityReport {
    std::string target;
    Rational epsilon;
    bool strict = true;
    std::uint64_t horizon = 0;
    std::uint64_t k_max = 0;
    std::vector<ClaimEntry> claims;

    bool all_verified() const;
    bool any_refuted() const;
    const ClaimEntry& find(const std::string& claim) const;
};

struct Example1Options {
    Rational epsilon{1, 2};
    std::uint64_t horizon = 272153;
    bool strict = true;
    /// (u, v) sample pairs for the mixing certificates; defaults provided.
    std::vector<std::pair<ClosedInterval, ClosedInterval>> mixing_samples;
    std::uint64_t oracle_subsets = 200;  // random subsets cross-checked per law
};

std::vector<std::pair<ClosedInterval, ClosedInterval>> default_mixing_samples();

/// Verifies the one-point-extension tent system: monoid and semi-flow
/// laws, failure of the syndetic and dual-syndetic properties, the
/// membership collapse of every subset class onto the absorbing element,
/// strong mixing on sample pairs, strong sensitivity, and the failure of
/// the four translate-based sensitivity variants, plus the non-sensitive
/// {0, inf} restriction.
SensitivityReport verify_example1(const Example1Options& opt);

struct Example2Options {
    Rational epsilon{1, 2};
    std::uint64_t horizon = 272153;
    std::uint64_t k_max = 3;
    bool strict = true;
    Execution exec = Execution::parallel;
};

/// Verifies the two-axis block-space cascade: the expanding fast-window
/// prefix of D(U, 1) by exact iteration plus per-window certificates
/// (thick sensitivity evidence), and the empty intersection of the two
/// axis D-sets at the configured epsilon (failure of multi-sensitivity).
SensitivityReport verify_example2(const GrowthSchedule& s, const Example2Options& opt);

}  // namespace semiflow
