#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "reflectra/report_io.hpp"
#include "reflectra/scanner.hpp"

using namespace reflectra;
using nlohmann::json;

TEST_CASE("class labels") {
  CHECK(class_label(0) == "zero");
  CHECK(class_label(2178) == "cycle-2178");
  CHECK(class_label(11436678) == "cycle-11436678");
}

TEST_CASE("2-digit CSV is byte-exact") {
  const ScanReport r = scan(ScanRange::for_digits(2));
  CHECK(emit_scan_csv(r) ==
        "limit_class,iterations,count\n"
        "zero,1,9\n"
        "zero,2,17\n"
        "zero,3,16\n"
        "zero,4,16\n"
        "zero,5,16\n"
        "zero,6,16\n");
}

TEST_CASE("CSV of an empty report is the header only") {
  ScanReport empty;
  CHECK(emit_scan_csv(empty) == "limit_class,iterations,count\n");
}

TEST_CASE("4-digit CSV covers zero 1..13 and cycle-2178 1..4, in order") {
  const ScanReport r = scan(ScanRange::for_digits(4));
  const std::string csv = emit_scan_csv(r);
  std::vector<std::string> lines;
  for (std::size_t pos = 0; pos < csv.size();) {
    const std::size_t nl = csv.find('\n', pos);
    REQUIRE(nl != std::string::npos);  // every line LF-terminated
    lines.push_back(csv.substr(pos, nl - pos));
    pos = nl + 1;
  }
  REQUIRE(lines.size() == 1 + 4 + 13);
  CHECK(lines[0] == "limit_class,iterations,count");
  for (int i = 1; i <= 4; ++i)
    CHECK(lines[i].rfind("cycle-2178," + std::to_string(i) + ",", 0) == 0);
  for (int i = 1; i <= 13; ++i)
    CHECK(lines[4 + i].rfind("zero," + std::to_string(i) + ",", 0) == 0);
  CHECK(csv.back() == '\n');
  CHECK(csv.find("\n\n") == std::string::npos);  // no blank line
}

TEST_CASE("rows sort lexicographically by label, then by iterations") {
  ScanReport r;
  r.range = {1, 2, std::nullopt};
  r.histogram[0][2] = 1;
  r.histogram[0][1] = 1;
  r.histogram[11436678][1] = 1;
  r.histogram[2178][3] = 1;
  CHECK(emit_scan_csv(r) ==
        "limit_class,iterations,count\n"
        "cycle-11436678,1,1\n"
        "cycle-2178,3,1\n"
        "zero,1,1\n"
        "zero,2,1\n");
}

TEST_CASE("scan JSON carries the documented fields with sorted keys") {
  const ScanReport r = scan(ScanRange::for_digits(4), {.workers = 2});
  const std::string text = emit_scan_json(r);
  const json doc = json::parse(text);
  CHECK(doc.at("range").at("lo") == 1000);
  CHECK(doc.at("range").at("hi") == 9999);
  CHECK(doc.at("totals") == 9000);
  CHECK(doc.at("class_counts").at("zero") == 8363);
  CHECK(doc.at("class_counts").at("cycle-2178") == 637);
  CHECK(doc.at("worker_count") == 2);
  CHECK(doc.at("histogram").is_array());
  CHECK(doc.at("histogram").front().at("limit_class") == "cycle-2178");
  CHECK(doc.at("max_iterations").at("zero") == 13);
  CHECK(doc.contains("elapsed_ms"));

  // nlohmann objects iterate in sorted key order; confirm on the raw text
  const auto pos = [&](const char* key) {
    return text.find("\"" + std::string(key) + "\"");
  };
  CHECK(pos("class_counts") < pos("elapsed_ms"));
  CHECK(pos("elapsed_ms") < pos("histogram"));
  CHECK(pos("histogram") < pos("max_iterations"));
  CHECK(pos("max_iterations") < pos("range"));
  CHECK(pos("range") < pos("totals"));
  CHECK(pos("totals") < pos("worker_count"));
}

TEST_CASE("JSON round-trips every report field") {
  const ScanReport r = scan(ScanRange::for_digits(4), {.workers = 3});
  const ScanReport back = parse_scan_json(emit_scan_json(r));
  CHECK(back.range == r.range);
  CHECK(back.range.digit_width == 4);
  CHECK(back.class_counts == r.class_counts);
  CHECK(back.histogram == r.histogram);
  CHECK(back.max_iterations == r.max_iterations);
  CHECK(back.total == r.total);
  CHECK(back.elapsed == r.elapsed);
  CHECK(back.worker_count == r.worker_count);
}

TEST_CASE("CSV and JSON agree on every histogram triple") {
  const ScanReport r = scan({100, 5000, std::nullopt});
  const json doc = json::parse(emit_scan_json(r));
  std::string csv_from_json = "limit_class,iterations,count\n";
  for (const auto& row : doc.at("histogram"))
    csv_from_json += row.at("limit_class").get<std::string>() + "," +
                     std::to_string(row.at("iterations").get<std::uint64_t>()) +
                     "," + std::to_string(row.at("count").get<std::uint64_t>()) +
                     "\n";
  CHECK(csv_from_json == emit_scan_csv(r));
}

TEST_CASE("output bytes are stable across runs and worker counts") {
  ScanReport a = scan(ScanRange::for_digits(3), {.workers = 1});
  ScanReport b = scan(ScanRange::for_digits(3), {.workers = 4});
  CHECK(emit_scan_csv(a) == emit_scan_csv(b));
  // elapsed_ms and worker_count describe the run, not the result; align
  // them before comparing the full documents byte for byte.
  b.elapsed = a.elapsed;
  b.worker_count = a.worker_count;
  CHECK(emit_scan_json(a) == emit_scan_json(b));
}

TEST_CASE("verification report keeps failing entries") {
  const std::vector<CheckResult> results{
      {"good", 3, 3, true},
      {"bad", 343, 363, false},
  };
  const json doc = json::parse(emit_verification_report(results));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0].at("check_name") == "good");
  CHECK(doc[0].at("holds") == true);
  CHECK(doc[1].at("check_name") == "bad");
  CHECK(doc[1].at("claimed") == 343);
  CHECK(doc[1].at("computed") == 363);
  CHECK(doc[1].at("holds") == false);
}

TEST_CASE("parse_scan_json rejects unknown labels") {
  const char* text = R"({"class_counts":{"sideways-2178":1},
    "elapsed_ms":0,"histogram":[],"max_iterations":{},
    "range":{"hi":2,"lo":1},"totals":1,"worker_count":1})";
  CHECK_THROWS_AS(parse_scan_json(text), std::invalid_argument);
}
