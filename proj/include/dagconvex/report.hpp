#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dagconvex/enumeration.hpp"
#include "dagconvex/families.hpp"

namespace dagconvex {

using Json = nlohmann::ordered_json;

/// Stable shape: class, n, count, sum, average_num, average_den, average
/// (six-digit decimal string), histogram (length n, entry k-1 for size k).
/// average_num/average_den are 0/1 for an empty report.
Json report_to_json(const EnumerationReport& report);
/// Inverse of report_to_json; validates the internal tallies.
EnumerationReport report_from_json(const Json& j);
/// Two-space indented JSON followed by a newline.
std::string dump_json(const Json& j);

/// Rows "k,count,bound,pass" with bound = n - k + 1.
void write_report_csv(std::ostream& out, const EnumerationReport& report);
void write_report_table(std::ostream& out, const EnumerationReport& report);
void write_size_bound_table(std::ostream& out, const SizeBoundTable& table);

/// One row of the average-size trend over a generated family.
struct TrendRow {
  int param = 0;
  int order = 0;
  /// Absent when the order exceeds the brute-force cap.
  std::optional<EnumerationReport> convex;
  EnumerationReport connected_convex;

  /// Average size divided by √n.
  static double normalized(const EnumerationReport& r);
  /// cc/co when the convex report is present.
  std::optional<Fraction> cc_over_co() const;
};

struct EnumerationCaps {
  int brute_force = kBruteForceMaxOrder;
  int extension = kExtensionMaxOrder;
};

/// Convex sets by brute force when n <= caps.brute_force; connected convex
/// sets by extension (throws Error{OrderTooLarge} above caps.extension).
TrendRow trend_row(const FamilyInstance& instance, const EnumerationCaps& caps = {});
std::vector<TrendRow> trend(Family family, const std::vector<int>& params, const EnumerationCaps& caps = {});

enum class OutputFormat { Table, Json, Csv };

void write_trend(std::ostream& out, Family family, const std::vector<TrendRow>& rows, OutputFormat format);

}  // namespace dagconvex
