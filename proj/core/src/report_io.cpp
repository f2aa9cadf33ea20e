#include "reflectra/report_io.hpp"

#include <algorithm>
#include <json.hpp>

namespace reflectra {

namespace {

using nlohmann::json;

struct Row {
  std::string label;
  std::uint32_t iterations;
  std::uint64_t count;
};

std::vector<Row> sorted_rows(const ScanReport& report) {
  std::vector<Row> rows;
  for (const auto& [key, by_iter] : report.histogram)
    for (const auto& [iters, count] : by_iter)
      rows.push_back({class_label(key), iters, count});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.label != b.label ? a.label < b.label
                              : a.iterations < b.iterations;
  });
  return rows;
}

constexpr std::int64_t pow10ll(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

std::string class_label(ReflectiveInt class_key) {
  return class_key == 0 ? "zero" : "cycle-" + std::to_string(class_key);
}

std::string emit_scan_csv(const ScanReport& report) {
  std::string out = "limit_class,iterations,count\n";
  for (const Row& r : sorted_rows(report)) {
    out += r.label;
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += std::to_string(r.count);
    out += '\n';
  }
  return out;
}

std::string emit_scan_json(const ScanReport& report) {
  json doc;
  doc["range"] = {{"lo", report.range.lo}, {"hi", report.range.hi}};
  doc["totals"] = report.total;
  json counts = json::object();
  for (const auto& [key, count] : report.class_counts)
    counts[class_label(key)] = count;
  doc["class_counts"] = std::move(counts);
  json hist = json::array();
  for (const Row& r : sorted_rows(report))
    hist.push_back({{"limit_class", r.label},
                    {"iterations", r.iterations},
                    {"count", r.count}});
  doc["histogram"] = std::move(hist);
  json maxima = json::object();
  for (const auto& [key, m] : report.max_iterations)
    maxima[class_label(key)] = m;
  doc["max_iterations"] = std::move(maxima);
  doc["elapsed_ms"] = report.elapsed.count();
  doc["worker_count"] = report.worker_count;
  return doc.dump(2) + "\n";
}

namespace {

ReflectiveInt key_from_label(const std::string& label) {
  if (label == "zero") return 0;
  constexpr std::string_view prefix = "cycle-";
  if (label.rfind(prefix, 0) != 0)
    throw std::invalid_argument("unknown limit_class label: " + label);
  return std::stoll(label.substr(prefix.size()));
}

}  // namespace

ScanReport parse_scan_json(std::string_view text) {
  const json doc = json::parse(text);
  ScanReport report;
  report.range.lo = doc.at("range").at("lo").get<std::int64_t>();
  report.range.hi = doc.at("range").at("hi").get<std::int64_t>();
  for (int d = 1; d <= 18; ++d) {
    if (report.range.lo == pow10ll(d - 1) && report.range.hi == pow10ll(d) - 1)
      report.range.digit_width = d;
  }
  report.total = doc.at("totals").get<std::uint64_t>();
  for (const auto& [label, count] : doc.at("class_counts").items())
    report.class_counts[key_from_label(label)] = count.get<std::uint64_t>();
  for (const auto& row : doc.at("histogram"))
    report.histogram[key_from_label(row.at("limit_class"))]
                    [row.at("iterations").get<std::uint32_t>()] =
        row.at("count").get<std::uint64_t>();
  for (const auto& [label, m] : doc.at("max_iterations").items())
    report.max_iterations[key_from_label(label)] = m.get<std::uint32_t>();
  report.elapsed = std::chrono::milliseconds(
      doc.at("elapsed_ms").get<std::int64_t>());
  report.worker_count = doc.at("worker_count").get<unsigned>();
  return report;
}

std::string emit_verification_report(
    const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const CheckResult& r : results)
    arr.push_back({{"check_name", r.name},
                   {"claimed", r.claimed},
                   {"computed", r.computed},
                   {"holds", r.holds}});
  return arr.dump(2) + "\n";
}

}  // namespace reflectra
