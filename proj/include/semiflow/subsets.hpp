#pragma once

#include "semiflow/monoid.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semiflow {

enum class Ambient { naturals, g_monoid };

std::string ambient_str(Ambient a);

/// Sorted, disjoint, non-adjacent closed runs [lo, hi] of naturals.
/// Compact carrier for the finite part of a subset description; large
/// horizon-exact member sets stay cheap to store and query.
class IndexRuns {
public:
    IndexRuns() = default;
    explicit IndexRuns(std::vector<std::pair<std::uint64_t, std::uint64_t>> runs);

    static IndexRuns from_points(const std::vector<std::uint64_t>& points);

    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    bool member(std::uint64_t n) const;
    /// True iff every point of [lo, hi] is a member.
    bool covers(std::uint64_t lo, std::uint64_t hi) const;
    std::uint64_t count() const;

    IndexRuns complement_below(std::uint64_t bound) const;
    IndexRuns shifted(std::uint64_t offset) const;
    IndexRuns intersect(const IndexRuns& other) const;

    friend bool operator==(const IndexRuns& a, const IndexRuns& b) { return a.runs_ == b.runs_; }

    /// "{3, 5..9, 12}"
    std::string str() const;

private:
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs_;
};

/// Finitely-described subset of the naturals or of their one-point
/// extension: explicit members below a threshold, an eventually periodic
/// tail (membership for n >= threshold iff n mod period is a listed
/// residue), and an inf-membership flag.
struct SubsetDesc {
    Ambient ambient = Ambient::naturals;
    IndexRuns prefix;                 // members below threshold
    std::uint64_t threshold = 0;      // T
    std::uint64_t period = 1;         // p >= 1
    std::set<std::uint64_t> residues; // subset of [0, p)
    bool contains_infinity = false;

    static SubsetDesc make(Ambient ambient, IndexRuns prefix, std::uint64_t threshold,
                           std::uint64_t period, std::set<std::uint64_t> residues,
                           bool contains_infinity);

    bool member(std::uint64_t n) const;
    bool member(const GElement& g) const;
    bool finite() const { return residues.empty(); }
    bool empty() const;

    /// Structural equality of the description (not extensional equality).
    friend bool operator==(const SubsetDesc& a, const SubsetDesc& b) = default;

    /// Mini-grammar form: "ambient=G; finite={..}; T=..; p=..; R={..}; inf=yes|no".
    std::string str() const;
    static SubsetDesc parse(const std::string& text);
};

/// Verdicts for one subset description. Witness strings name the
/// certificate found (smallest K, translate, or progression step).
struct ClassificationVerdict {
    bool compact = false;
    bool syndetic = false;
    bool thick = false;
    bool thickly_syndetic = false;
    bool periodic = false;
    bool thickly_periodic = false;
    std::map<std::string, std::string> witnesses;

    friend bool operator==(const ClassificationVerdict& a, const ClassificationVerdict& b) {
        return a.compact == b.compact && a.syndetic == b.syndetic && a.thick == b.thick &&
               a.thickly_syndetic == b.thickly_syndetic && a.periodic == b.periodic &&
               a.thickly_periodic == b.thickly_periodic;
    }
};

/// Decision procedure over the eventually-periodic class. Exact.
ClassificationVerdict subset_classify(const SubsetDesc& b);

/// Exact complement within the declared ambient.
SubsetDesc subset_complement(const SubsetDesc& b);

/// {t + x : x in b}; translating a non-empty set by inf collapses it to {inf}.
SubsetDesc subset_translate(const GElement& t, const SubsetDesc& b);

/// Independent bounded oracle: enumerates finite translates/windows with
/// all quantifiers over naturals bounded by k_bound/t_bound (inf is always
/// included in the ranges for the one-point ambient). Uses only pointwise
/// membership. Verdicts are evidence within the bounds, used to cross-check
/// subset_classify.
ClassificationVerdict brute_force_classify(const SubsetDesc& b, std::uint64_t k_bound,
                                           std::uint64_t t_bound);

/// Monoid-level syndetic-property / dual-syndetic-property verdicts.
struct MonoidPropertyVerdict {
    bool sp = false;
    bool dsp = false;
    std::string witness;
};
MonoidPropertyVerdict monoid_properties(Ambient ambient);

}  // namespace semiflow
