// reflectra: classify integers under the reflect-and-add iteration, scan
// whole digit widths, and run the built-in verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 a verification check failed,
// 3 step budget exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reflectra/catalog.hpp"
#include "reflectra/report_io.hpp"
#include "reflectra/scanner.hpp"
#include "reflectra/trajectory.hpp"

namespace {

using nlohmann::json;
using namespace reflectra;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string format = "json";
  std::string output;
  std::uint64_t max_steps = kDefaultStepBudget;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  MemoMode memo = MemoMode::PerWorker;
  std::uint64_t chunk_size = 1u << 16;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_scan_opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", opts.output,
                  "Write output to this path instead of stdout");
  cmd->add_option("--max-steps", opts.max_steps,
                  "Iteration guard per classification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  if (with_scan_opts) {
    cmd->add_option("--workers,-w", opts.workers, "Worker thread count")
        ->envname("REFLECTRA_WORKERS")
        ->check(CLI::PositiveNumber);
    std::map<std::string, MemoMode> modes{{"off", MemoMode::Off},
                                          {"worker", MemoMode::PerWorker},
                                          {"shared", MemoMode::Shared}};
    cmd->add_option("--memo", opts.memo, "Memoization mode")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("worker");
    cmd->add_option("--chunk", opts.chunk_size, "Chunk size for workers")
        ->check(CLI::PositiveNumber);
  }
}

ScanOptions scan_options(const CommonOpts& opts) {
  ScanOptions s;
  s.workers = opts.workers;
  s.memo = opts.memo;
  s.chunk_size = opts.chunk_size;
  s.max_steps = opts.max_steps;
  return s;
}

int emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << opts.output << "\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

json terminal_to_json(const TerminalKind& t) {
  json j;
  if (t.kind == LimitKind::Zero) {
    j["limit"] = "zero";
  } else {
    j["limit"] = "cycle";
    j["canonical"] = t.cycle_canonical;
    j["period"] = t.period;
  }
  return j;
}

std::string formula_token(const FamilyFormula& f) {
  switch (f.kind) {
    case FormulaKind::PairRepunit22: return "pair22";
    case FormulaKind::PairRepunit66: return "pair66";
    case FormulaKind::Spaced2178: return "spaced2178";
    case FormulaKind::Spaced6534: return "spaced6534";
    case FormulaKind::Fourteen198: return "fourteen198";
    case FormulaKind::Irregular: return "irregular";
  }
  return "irregular";
}

json family_to_json(const CycleFamily& f) {
  json j;
  j["name"] = f.name;
  j["canonical"] = f.canonical;
  j["period"] = f.period;
  j["digit_width"] = f.digit_width;
  j["members"] = f.members;
  if (f.formula)
    j["formula"] = {{"kind", formula_token(*f.formula)},
                    {"parameter", f.formula->parameter}};
  else
    j["formula"] = nullptr;
  return j;
}

int run_classify(ReflectiveInt value, const CommonOpts& opts) {
  const Classification c = classify(value, opts.max_steps);
  if (opts.format == "csv") {
    std::string text = "input,limit,canonical,period,iterations\n";
    text += std::to_string(c.input) + ",";
    if (c.limit.kind == LimitKind::Cycle)
      text += "cycle," + std::to_string(c.limit.cycle_canonical) + "," +
              std::to_string(c.limit.period);
    else
      text += "zero,,";
    text += "," + std::to_string(c.iterations) + "\n";
    return emit(opts, text);
  }
  json j = terminal_to_json(c.limit);
  j["input"] = c.input;
  j["iterations"] = c.iterations;
  return emit(opts, j.dump(2) + "\n");
}

int run_sequence_cmd(ReflectiveInt value, const CommonOpts& opts) {
  const Trajectory t = run_sequence(value, opts.max_steps);
  if (opts.format == "csv") {
    std::string text = "index,value\n";
    for (std::size_t i = 0; i < t.iterates.size(); ++i)
      text += std::to_string(i + 1) + "," + std::to_string(t.iterates[i]) +
              "\n";
    return emit(opts, text);
  }
  json j = terminal_to_json(t.terminal);
  j["start"] = t.start;
  j["iterates"] = t.iterates;
  j["tail_length"] = t.tail_length;
  return emit(opts, j.dump(2) + "\n");
}

int run_scan(const ScanRange& range, const CommonOpts& opts) {
  const ScanReport report = scan(range, scan_options(opts));
  return emit(opts, opts.format == "csv" ? emit_scan_csv(report)
                                         : emit_scan_json(report));
}

int run_cycles(int digits, bool do_scan, const CommonOpts& opts) {
  const auto known = known_cycles_for_width(digits);
  json j;
  j["digit_width"] = digits;
  json families = json::array();
  for (const auto& f : known) families.push_back(family_to_json(f));
  j["families"] = std::move(families);

  bool mismatch = false;
  if (do_scan) {
    const auto found =
        discovered_cycles(ScanRange::for_digits(digits), scan_options(opts));
    std::vector<ReflectiveInt> found_keys{0};  // zero limit is always hit
    for (const auto& f : found) found_keys.push_back(f.canonical);
    std::sort(found_keys.begin(), found_keys.end());
    std::vector<ReflectiveInt> known_keys;
    for (const auto& f : known) known_keys.push_back(f.canonical);
    std::sort(known_keys.begin(), known_keys.end());
    j["discovered_canonicals"] = found_keys;
    mismatch = found_keys != known_keys;
    j["catalog_matches_discovered"] = !mismatch;
  }

  if (opts.format == "csv") {
    std::string text = "name,canonical,period,digit_width,members\n";
    for (const auto& f : known) {
      text += f.name + "," + std::to_string(f.canonical) + "," +
              std::to_string(f.period) + "," + std::to_string(f.digit_width) +
              ",";
      for (std::size_t i = 0; i < f.members.size(); ++i)
        text += (i ? "|" : "") + std::to_string(f.members[i]);
      text += "\n";
    }
    const int rc = emit(opts, text);
    return rc != kExitOk ? rc : (mismatch ? kExitMismatch : kExitOk);
  }
  const int rc = emit(opts, j.dump(2) + "\n");
  return rc != kExitOk ? rc : (mismatch ? kExitMismatch : kExitOk);
}

int run_first_cyclic(int digits, const CommonOpts& opts) {
  const ReflectiveInt v = first_cyclic_in_width(digits, opts.max_steps);
  if (opts.format == "csv")
    return emit(opts, "digit_width,value\n" + std::to_string(digits) + "," +
                          std::to_string(v) + "\n");
  json j;
  j["digit_width"] = digits;
  j["value"] = v;
  return emit(opts, j.dump(2) + "\n");
}

// ----- verify suites -----

struct Table1Row {
  int digits;
  std::vector<std::pair<ReflectiveInt, std::uint64_t>> expected;
};

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {4, {{0, 8363}, {2178, 637}}},
      {5, {{0, 45600}, {2178, 38030}, {21978, 6370}}},
      {6, {{0, 460458}, {2178, 241749}, {21978, 178686}, {219978, 19107}}},
  };
  return rows;
}

std::vector<CheckResult> verify_table1(const CommonOpts& opts) {
  std::vector<CheckResult> out;
  for (const Table1Row& row : table1_rows()) {
    const ScanReport report =
        scan(ScanRange::for_digits(row.digits), scan_options(opts));
    std::uint64_t cyclic_total = 0;
    for (const auto& [key, expected] : row.expected) {
      const auto it = report.class_counts.find(key);
      const std::uint64_t got = it == report.class_counts.end() ? 0 : it->second;
      if (key != 0) cyclic_total += got;
      // the table's "%" columns are really fractions; present the
      // recomputed share alongside the count
      char share[32];
      std::snprintf(share, sizeof share, " (share %.3f)",
                    static_cast<double>(got) /
                        static_cast<double>(report.total));
      out.push_back({"table1/" + std::to_string(row.digits) + "dig/" +
                         class_label(key) + share,
                     static_cast<long long>(expected),
                     static_cast<long long>(got), got == expected});
    }
    out.push_back({"table1/" + std::to_string(row.digits) + "dig/classes",
                   static_cast<long long>(row.expected.size()),
                   static_cast<long long>(report.class_counts.size()),
                   report.class_counts.size() == row.expected.size()});
    if (row.digits == 4) {
      // The prose claims 537 cyclic 4-digit numbers; the table and the scan
      // say 637. Kept here so the discrepancy is part of the record.
      out.push_back({"table1/4dig/cyclic-prose-claim", 537,
                     static_cast<long long>(cyclic_total), false});
    }
  }
  return out;
}

std::vector<CheckResult> verify_lemma(const CommonOpts& opts) {
  std::vector<CheckResult> out;
  auto divides = [](ReflectiveInt x) {
    return step(x) % first_step_divisor(x) == 0;
  };
  for (int d = 2; d <= 6; ++d) {
    long long failures = 0;
    ReflectiveInt lo = 1;
    for (int i = 1; i < d; ++i) lo *= 10;
    for (ReflectiveInt x = lo; x <= lo * 10 - 1; ++x) {
      if (!divides(x)) ++failures;
      if (!divides(-x)) ++failures;
    }
    out.push_back({"lemma/" + std::to_string(d) + "dig-exhaustive", 0,
                   failures, failures == 0});
  }
  std::mt19937_64 rng(0x5eed0001);
  const long long per_width = 1'000'000 / 12 + 1;
  for (int d = 7; d <= 18; ++d) {
    ReflectiveInt lo = 1;
    for (int i = 1; i < d; ++i) lo *= 10;
    std::uniform_int_distribution<ReflectiveInt> dist(lo, lo * 10 - 1);
    long long failures = 0;
    for (long long i = 0; i < per_width; ++i) {
      ReflectiveInt x = dist(rng);
      if (rng() & 1) x = -x;
      if (!divides(x)) ++failures;
    }
    out.push_back({"lemma/" + std::to_string(d) + "dig-random-" +
                       std::to_string(per_width),
                   0, failures, failures == 0});
  }
  (void)opts;
  return out;
}

std::vector<CheckResult> verify_formulas(const CommonOpts& opts) {
  std::vector<CheckResult> out;
  for (int k = 2; k <= 16; ++k) {
    const ReflectiveInt a = generate_family(FormulaKind::PairRepunit22, k);
    const ReflectiveInt b = generate_family(FormulaKind::PairRepunit66, k);
    const auto members = cycle_members(a);
    out.push_back({"pair/k" + std::to_string(k) + "/period", 4,
                   static_cast<long long>(members.size()),
                   members.size() == 4});
    std::vector<ReflectiveInt> sorted(members);
    std::sort(sorted.begin(), sorted.end());
    const std::vector<ReflectiveInt> expected{-b, -a, a, b};
    out.push_back({"pair/k" + std::to_string(k) + "/member-set", 1,
                   sorted == expected ? 1 : 0, sorted == expected});
  }
  for (int k = 4; k <= 14; ++k) {
    for (const auto kind : {FormulaKind::Spaced2178, FormulaKind::Spaced6534}) {
      const ReflectiveInt v = generate_family(kind, k);
      bool on_cycle = true;
      try {
        cycle_members(v);
      } catch (const NotOnCycleError&) {
        on_cycle = false;
      }
      out.push_back({std::string("spaced") +
                         (kind == FormulaKind::Spaced2178 ? "2178" : "6534") +
                         "/k" + std::to_string(k) + "/on-cycle",
                     1, on_cycle ? 1 : 0, on_cycle});
    }
  }
  const std::vector<std::pair<int, ReflectiveInt>> firsts{
      {5, 10012}, {6, 100012}, {7, 1000012}};
  for (const auto& [d, expected] : firsts) {
    const ReflectiveInt got = first_cyclic_in_width(d, opts.max_steps);
    out.push_back({"first-cyclic/" + std::to_string(d) + "dig", expected,
                   got, got == expected});
  }
  return out;
}

int run_verify(const std::string& suite, const CommonOpts& opts) {
  std::vector<CheckResult> results;
  if (suite == "table1") results = verify_table1(opts);
  else if (suite == "lemma") results = verify_lemma(opts);
  else if (suite == "curiosities") results = verify_curiosities();
  else if (suite == "factorizations") results = verify_factorizations();
  else if (suite == "formulas") results = verify_formulas(opts);

  std::string text;
  if (opts.format == "csv") {
    text = "check_name,claimed,computed,holds\n";
    for (const CheckResult& r : results)
      text += "\"" + r.name + "\"," + std::to_string(r.claimed) + "," +
              std::to_string(r.computed) + "," +
              (r.holds ? "true" : "false") + "\n";
  } else {
    text = emit_verification_report(results);
  }
  const int rc = emit(opts, text);
  if (rc != kExitOk) return rc;
  for (const CheckResult& r : results)
    if (!r.holds) return kExitMismatch;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflective-number toolkit: digit-reversal iteration, "
               "trajectory classification, exhaustive range scans"};
  app.require_subcommand(1);

  CommonOpts opts;
  ReflectiveInt value = 0;
  int digits = 0;
  ReflectiveInt from = 0, to = 0;
  bool no_scan = false, force_scan = false;
  std::string suite;

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify one integer's limit");
  classify_cmd->add_option("value", value, "Integer to classify (use -- "
                           "before negative values)")
      ->required();
  add_common(classify_cmd, opts, false);

  auto* sequence_cmd =
      app.add_subcommand("sequence", "Print the iterate list for one integer");
  sequence_cmd->add_option("value", value)->required();
  add_common(sequence_cmd, opts, false);

  auto* scan_cmd = app.add_subcommand("scan", "Classify every integer in a "
                                              "range and aggregate");
  auto* dig_opt = scan_cmd->add_option("--digits,-d", digits,
                                       "Scan the full d-digit range");
  auto* from_opt = scan_cmd->add_option("--from", from, "Range start");
  auto* to_opt = scan_cmd->add_option("--to", to, "Range end (inclusive)");
  dig_opt->excludes(from_opt)->excludes(to_opt);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  add_common(scan_cmd, opts, true);

  auto* cycles_cmd = app.add_subcommand(
      "cycles", "Print the cycle inventory for a digit width");
  cycles_cmd->add_option("--digits,-d", digits)->required();
  cycles_cmd->add_flag("--no-scan", no_scan,
                       "Skip the discovery cross-check scan");
  cycles_cmd->add_flag("--scan", force_scan,
                       "Force the cross-check scan (default off above 8 "
                       "digits)");
  add_common(cycles_cmd, opts, true);

  auto* first_cmd = app.add_subcommand(
      "first-cyclic", "Smallest d-digit integer with a cyclic limit");
  first_cmd->add_option("--digits,-d", digits)->required();
  add_common(first_cmd, opts, false);

  auto* verify_cmd =
      app.add_subcommand("verify", "Run a named verification suite");
  verify_cmd->add_option("suite", suite, "One of: table1 lemma curiosities "
                                         "factorizations formulas")
      ->required()
      ->check(CLI::IsMember(
          {"table1", "lemma", "curiosities", "factorizations", "formulas"}));
  add_common(verify_cmd, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(value, opts);
    if (sequence_cmd->parsed()) return run_sequence_cmd(value, opts);
    if (scan_cmd->parsed()) {
      if (dig_opt->count() == 0 && from_opt->count() == 0) {
        std::cerr << "scan needs --digits or --from/--to\n";
        return kExitUsage;
      }
      const ScanRange range = dig_opt->count() > 0
                                  ? ScanRange::for_digits(digits)
                                  : ScanRange{from, to, std::nullopt};
      return run_scan(range, opts);
    }
    if (cycles_cmd->parsed()) {
      const bool do_scan = force_scan || (!no_scan && digits <= 8);
      return run_cycles(digits, do_scan, opts);
    }
    if (first_cmd->parsed()) return run_first_cyclic(digits, opts);
    if (verify_cmd->parsed()) return run_verify(suite, opts);
  } catch (const StepBudgetError& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
