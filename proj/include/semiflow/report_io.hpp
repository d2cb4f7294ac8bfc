#pragma once

#include "semiflow/schedule.hpp"
#include "semiflow/sensitivity.hpp"

#include <json.hpp>

#include <iosfwd>

namespace semiflow {

using ordered_json = nlohmann::ordered_json;

/// Serialization keeps a stable field order and renders every exact value
/// as a string, so identical inputs produce identical bytes.
ordered_json to_json(const ClassificationVerdict& v, const SubsetDesc& subject);
ordered_json to_json(const SensitivityReport& rep, const std::string& timestamp = "");
ordered_json to_json(const DiamSeries& series);
ordered_json to_json(const BlockDescriptor& d);

/// "n,diam_exact,diam_decimal" rows.
void write_series_csv(std::ostream& os, const DiamSeries& series);

/// One line per claim, prefixed with a verdict mark.
void write_report_human(std::ostream& os, const SensitivityReport& rep,
                        const std::string& timestamp = "");
void write_report_csv(std::ostream& os, const SensitivityReport& rep);

}  // namespace semiflow
