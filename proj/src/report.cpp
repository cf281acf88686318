#include "dagconvex/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "dagconvex/error.hpp"

namespace dagconvex {

Json report_to_json(const EnumerationReport& report) {
  Json j;
  j["class"] = std::string(to_string(report.set_class));
  j["n"] = report.order;
  j["count"] = report.count;
  j["sum"] = report.size_sum;
  if (report.count > 0) {
    Fraction avg = report.average();
    j["average_num"] = avg.num();
    j["average_den"] = avg.den();
    j["average"] = avg.to_decimal(6);
  } else {
    j["average_num"] = 0;
    j["average_den"] = 1;
    j["average"] = Fraction(0, 1).to_decimal(6);
  }
  j["histogram"] = report.histogram;
  return j;
}

EnumerationReport report_from_json(const Json& j) {
  try {
    EnumerationReport r;
    r.set_class = parse_set_class(j.at("class").get<std::string>());
    r.order = j.at("n").get<int>();
    r.count = j.at("count").get<std::uint64_t>();
    r.size_sum = j.at("sum").get<std::uint64_t>();
    r.histogram = j.at("histogram").get<std::vector<std::uint64_t>>();
    if (r.order < 0 || r.histogram.size() != static_cast<std::size_t>(r.order)) {
      throw Error(ErrorCode::Parse, "histogram length does not match n");
    }
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < r.histogram.size(); ++k) {
      count += r.histogram[k];
      sum += (k + 1) * r.histogram[k];
    }
    if (count != r.count || sum != r.size_sum) {
      throw Error(ErrorCode::Parse, "count/sum disagree with the histogram");
    }
    if (r.count > 0) {
      Fraction avg = r.average();
      if (avg.num() != j.at("average_num").get<std::uint64_t>() ||
          avg.den() != j.at("average_den").get<std::uint64_t>()) {
        throw Error(ErrorCode::Parse, "average fraction disagrees with sum/count");
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, std::string("malformed report JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_report_csv(std::ostream& out, const EnumerationReport& report) {
  out << "k,count,bound,pass\n";
  const int n = report.order;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t count = report.histogram[static_cast<std::size_t>(k - 1)];
    auto bound = static_cast<std::uint64_t>(n - k + 1);
    out << k << ',' << count << ',' << bound << ',' << (count >= bound ? "true" : "false") << '\n';
  }
}

void write_report_table(std::ostream& out, const EnumerationReport& report) {
  out << "class:   " << to_string(report.set_class) << '\n';
  out << "n:       " << report.order << '\n';
  out << "count:   " << report.count << '\n';
  out << "sum:     " << report.size_sum << '\n';
  if (report.count > 0) {
    Fraction avg = report.average();
    out << "average: " << avg.to_string() << " = " << avg.to_decimal(6) << '\n';
  } else {
    out << "average: -\n";
  }
  out << "   k        count\n";
  for (std::size_t k = 0; k < report.histogram.size(); ++k) {
    out << std::setw(4) << (k + 1) << ' ' << std::setw(12) << report.histogram[k] << '\n';
  }
}

void write_size_bound_table(std::ostream& out, const SizeBoundTable& table) {
  out << "   k        count        bound  verdict\n";
  for (const auto& row : table.rows) {
    out << std::setw(4) << row.size << ' ' << std::setw(12) << row.count << ' ' << std::setw(12)
        << row.bound << "  " << (row.pass ? (row.count == row.bound ? "pass (tight)" : "pass") : "FAIL")
        << '\n';
  }
}

double TrendRow::normalized(const EnumerationReport& r) {
  return r.average().to_double() / std::sqrt(static_cast<double>(r.order));
}

std::optional<Fraction> TrendRow::cc_over_co() const {
  if (!convex) return std::nullopt;
  return Fraction(connected_convex.count, convex->count);
}

TrendRow trend_row(const FamilyInstance& instance, const EnumerationCaps& caps) {
  TrendRow row;
  row.param = instance.spec.param;
  row.order = instance.graph.order();
  if (row.order <= caps.brute_force) {
    row.convex = enumerate_brute(instance.graph, SetClass::Convex, {}, caps.brute_force);
  }
  row.connected_convex = enumerate_cc_extension(instance.graph, std::nullopt, {}, caps.extension);
  return row;
}

std::vector<TrendRow> trend(Family family, const std::vector<int>& params, const EnumerationCaps& caps) {
  if (family != Family::Dt && family != Family::Gi && family != Family::Path) {
    throw Error(ErrorCode::InvalidParameter, "trend supports the dt, gi and path families");
  }
  std::vector<TrendRow> rows;
  for (int param : params) {
    FamilySpec spec;
    spec.family = family;
    spec.param = param;
    rows.push_back(trend_row(generate(spec), caps));
  }
  return rows;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string family_name(Family f) {
  FamilySpec spec;
  spec.family = f;
  std::string s = spec.to_string();
  return s.substr(0, s.find(':'));
}

struct TrendCells {
  std::string param, n, co, co_sum, co_avg, co_norm, cc, cc_sum, cc_avg, cc_norm, ratio;
};

TrendCells cells(const TrendRow& row) {
  TrendCells c;
  c.param = std::to_string(row.param);
  c.n = std::to_string(row.order);
  c.co = c.co_sum = c.co_avg = c.co_norm = c.ratio = "-";
  if (row.convex) {
    c.co = std::to_string(row.convex->count);
    c.co_sum = std::to_string(row.convex->size_sum);
    c.co_avg = row.convex->average().to_decimal(6);
    c.co_norm = fixed6(TrendRow::normalized(*row.convex));
    c.ratio = row.cc_over_co()->to_decimal(6);
  }
  c.cc = std::to_string(row.connected_convex.count);
  c.cc_sum = std::to_string(row.connected_convex.size_sum);
  c.cc_avg = row.connected_convex.average().to_decimal(6);
  c.cc_norm = fixed6(TrendRow::normalized(row.connected_convex));
  return c;
}

Json fraction_json(const Fraction& f) {
  Json j;
  j["num"] = f.num();
  j["den"] = f.den();
  j["decimal"] = f.to_decimal(6);
  return j;
}

}  // namespace

void write_trend(std::ostream& out, Family family, const std::vector<TrendRow>& rows, OutputFormat format) {
  const std::string name = family_name(family);
  const char* param_name = family == Family::Dt ? "t" : family == Family::Gi ? "i" : "param";
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["family"] = name;
      Json arr = Json::array();
      for (const auto& row : rows) {
        TrendCells c = cells(row);
        Json r;
        r["param"] = row.param;
        r["n"] = row.order;
        r["convex"] = row.convex ? report_to_json(*row.convex) : Json(nullptr);
        r["connected_convex"] = report_to_json(row.connected_convex);
        r["co_average_over_sqrt_n"] = row.convex ? Json(c.co_norm) : Json(nullptr);
        r["cc_average_over_sqrt_n"] = c.cc_norm;
        r["cc_over_co"] = row.convex ? fraction_json(*row.cc_over_co()) : Json(nullptr);
        arr.push_back(std::move(r));
      }
      j["rows"] = std::move(arr);
      out << dump_json(j);
      return;
    }
    case OutputFormat::Csv: {
      out << param_name << ",n,co,co_sum,co_avg,co_avg_over_sqrt_n,cc,cc_sum,cc_avg,cc_avg_over_sqrt_n,cc_over_co\n";
      for (const auto& row : rows) {
        TrendCells c = cells(row);
        out << c.param << ',' << c.n << ',' << c.co << ',' << c.co_sum << ',' << c.co_avg << ',' << c.co_norm
            << ',' << c.cc << ',' << c.cc_sum << ',' << c.cc_avg << ',' << c.cc_norm << ',' << c.ratio << '\n';
      }
      return;
    }
    case OutputFormat::Table: {
      out << "family: " << name << '\n';
      out << std::setw(5) << param_name << std::setw(5) << "n" << std::setw(12) << "co" << std::setw(12)
          << "avg_co" << std::setw(12) << "avg_co/rtn" << std::setw(12) << "cc" << std::setw(12) << "avg_cc"
          << std::setw(12) << "avg_cc/rtn" << std::setw(12) << "cc/co" << '\n';
      for (const auto& row : rows) {
        TrendCells c = cells(row);
        out << std::setw(5) << c.param << std::setw(5) << c.n << std::setw(12) << c.co << std::setw(12)
            << c.co_avg << std::setw(12) << c.co_norm << std::setw(12) << c.cc << std::setw(12) << c.cc_avg
            << std::setw(12) << c.cc_norm << std::setw(12) << c.ratio << '\n';
      }
      return;
    }
  }
}

}  // namespace dagconvex
