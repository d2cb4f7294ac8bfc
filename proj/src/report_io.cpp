#include "semiflow/report_io.hpp"

#include <ostream>

namespace semiflow {

ordered_json to_json(const ClassificationVerdict& v, const SubsetDesc& subject) {
    ordered_json j;
    j["subset"] = subject.str();
    j["ambient"] = ambient_str(subject.ambient);
    j["compact"] = v.compact;
    j["syndetic"] = v.syndetic;
    j["thick"] = v.thick;
    j["thickly_syndetic"] = v.thickly_syndetic;
    j["periodic"] = v.periodic;
    j["thickly_periodic"] = v.thickly_periodic;
    ordered_json w;
    for (const auto& [key, text] : v.witnesses) w[key] = text;
    j["witnesses"] = std::move(w);
    return j;
}

ordered_json to_json(const SensitivityReport& rep, const std::string& timestamp) {
    ordered_json j;
    j["target"] = rep.target;
    if (!timestamp.empty()) j["timestamp"] = timestamp;
    ordered_json claims = ordered_json::array();
    for (const auto& c : rep.claims) {
        ordered_json e;
        e["claim"] = c.claim;
        e["verdict"] = verdict_str(c.verdict);
        e["epsilon"] = rep.epsilon.str();
        e["strict"] = rep.strict;
        e["horizon"] = rep.horizon;
        e["k_max"] = rep.k_max;
        e["witnesses"] = c.witnesses;
        claims.push_back(std::move(e));
    }
    j["claims"] = std::move(claims);
    std::uint64_t verified = 0, refuted = 0, bounded = 0;
    for (const auto& c : rep.claims) {
        if (c.verdict == Verdict::verified) ++verified;
        else if (c.verdict == Verdict::refuted) ++refuted;
        else ++bounded;
    }
    j["summary"] = {{"verified", verified}, {"refuted", refuted}, {"bounded_evidence", bounded}};
    return j;
}

ordered_json to_json(const DiamSeries& series) {
    ordered_json j;
    j["system"] = system_str(series.system);
    j["seed"] = series.seed.str();
    j["first"] = series.first;
    j["last"] = series.last;
    if (series.infinity_diam) j["infinity_diam"] = series.infinity_diam->str();
    ordered_json entries = ordered_json::array();
    for (std::uint64_t n = series.first; n <= series.last; ++n) {
        const Rational& d = series.at(n);
        entries.push_back({{"n", n}, {"diam", d.str()}, {"decimal", d.decimal()}});
    }
    j["entries"] = std::move(entries);
    return j;
}

ordered_json to_json(const BlockDescriptor& d) {
    ordered_json j;
    j["space"] = space_str(d.space);
    j["block"] = d.block;
    j["count"] = d.count.get_str();
    j["piece_length"] = d.piece_length.str();
    j["stride"] = d.stride.str();
    j["base"] = d.base.str();
    return j;
}

void write_series_csv(std::ostream& os, const DiamSeries& series) {
    os << "n,diam_exact,diam_decimal\n";
    for (std::uint64_t n = series.first; n <= series.last; ++n) {
        const Rational& d = series.at(n);
        os << n << ',' << d.str() << ',' << d.decimal() << '\n';
    }
    if (series.infinity_diam)
        os << "inf," << series.infinity_diam->str() << ',' << series.infinity_diam->decimal()
           << '\n';
}

void write_report_human(std::ostream& os, const SensitivityReport& rep,
                        const std::string& timestamp) {
    os << "target " << rep.target << "  epsilon=" << rep.epsilon.str()
       << (rep.strict ? " (strict)" : " (non-strict)") << "  horizon=" << rep.horizon
       << "  k_max=" << rep.k_max << '\n';
    if (!timestamp.empty()) os << "run at " << timestamp << '\n';
    for (const auto& c : rep.claims) {
        const char* mark = c.verdict == Verdict::verified   ? "✓"
                           : c.verdict == Verdict::refuted  ? "✗"
                                                            : "~";
        os << mark << ' ' << c.claim;
        if (!c.witnesses.empty()) os << " — " << c.witnesses.front();
        os << '\n';
    }
}

void write_report_csv(std::ostream& os, const SensitivityReport& rep) {
    os << "claim,verdict,detail\n";
    for (const auto& c : rep.claims) {
        std::string detail = c.witnesses.empty() ? "" : c.witnesses.front();
        for (auto& ch : detail)
            if (ch == ',') ch = ';';
        os << c.claim << ',' << verdict_str(c.verdict) << ',' << detail << '\n';
    }
}

}  // namespace semiflow
