#include "reflectra/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace reflectra {

namespace {

constexpr long long pow10ll(int e) {
  long long p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

long long digit_sum(long long m) {
  long long s = 0;
  for (m = std::llabs(m); m != 0; m /= 10) s += m % 10;
  return s;
}

ReflectiveInt fourteen_seed(int width) {
  switch (width) {
    case 8: return 11436678;
    case 9: return 114396678;  // the transposed 114369678 is not on a cycle
    case 10: return 1143996678;
    default:
      throw std::out_of_range("no period-14 family seed for width " +
                              std::to_string(width));
  }
}

CycleFamily make_family(std::string name, ReflectiveInt seed,
                        std::optional<FamilyFormula> formula) {
  CycleFamily f;
  f.members = cycle_members(seed);
  f.period = static_cast<std::uint32_t>(f.members.size());
  f.canonical = static_cast<ReflectiveInt>(
      detail::magnitude_of(f.members.front()));
  f.digit_width = digit_count(f.canonical);
  f.formula = formula;
  f.name = std::move(name);
  return f;
}

}  // namespace

ReflectiveInt generate_family(FormulaKind kind, int k) {
  long long value = 0;
  switch (kind) {
    case FormulaKind::PairRepunit22:
    case FormulaKind::PairRepunit66: {
      const long long factor = kind == FormulaKind::PairRepunit22 ? 22 : 66;
      if (k < 2 || k > 16)
        throw std::out_of_range("pair generator needs 2 <= k <= 16");
      value = factor * (pow10ll(k) - 1);
      break;
    }
    case FormulaKind::Spaced2178:
    case FormulaKind::Spaced6534: {
      const long long factor = kind == FormulaKind::Spaced2178 ? 2178 : 6534;
      if (k < 4 || k > 14)
        throw std::out_of_range("spaced generator needs 4 <= k <= 14");
      value = factor * (pow10ll(k) + 1);
      break;
    }
    case FormulaKind::Fourteen198:
      value = fourteen_seed(k);
      break;
    case FormulaKind::Irregular:
      throw std::invalid_argument("irregular families have no generator");
  }
  cycle_members(value);  // every generated value must lie on a cycle
  return value;
}

std::vector<CycleFamily> known_cycles_for_width(int d) {
  if (d < 1) throw std::invalid_argument("digit width must be positive");
  if (d > 10)
    throw std::out_of_range("cycle inventory stops at width 10; scan to "
                            "discover cycles beyond it");

  std::vector<CycleFamily> out;
  CycleFamily zero;
  zero.name = "zero";
  zero.canonical = 0;
  zero.period = 1;
  zero.members = {0};
  zero.digit_width = 1;
  out.push_back(std::move(zero));

  for (int k = 2; k + 2 <= d; ++k) {
    const ReflectiveInt seed = 22 * (pow10ll(k) - 1);
    out.push_back(make_family("pair-" + std::to_string(seed), seed,
                              FamilyFormula{FormulaKind::PairRepunit22, k}));
  }
  if (d >= 8) {
    for (int k = 4; k + 4 <= d; ++k) {
      const ReflectiveInt seed = 2178 * (pow10ll(k) + 1);
      out.push_back(make_family("spaced-" + std::to_string(seed), seed,
                                FamilyFormula{FormulaKind::Spaced2178, k}));
    }
    for (int w = 8; w <= d; ++w) {
      const ReflectiveInt seed = fourteen_seed(w);
      out.push_back(make_family("fourteen-" + std::to_string(seed), seed,
                                FamilyFormula{FormulaKind::Fourteen198, w}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CycleFamily& a, const CycleFamily& b) {
              return a.canonical < b.canonical;
            });
  return out;
}

ReflectiveInt four_digit_candidate(int k) {
  if (k < 0 || k > 817)
    throw std::out_of_range("1012 + 11k leaves 4 digits for k outside "
                            "[0, 817]");
  return 1012 + 11LL * k;
}

std::vector<CheckResult> verify_curiosities() {
  struct Quotient {
    long long numerator, denominator, claimed;
  };
  const Quotient table[] = {
      {2178, digit_sum(2178), 121},
      {6534, digit_sum(6534), 343},  // prints 343; exact division says 363
      {6534, 2178, 3},
      {65934, 21978, 3},
      {659934, 219978, 3},
      {6599934, 2199978, 3},
      {219978, 2178, 101},
      {659934, 6534, 101},
      {21999978, 2178, 10101},
      {65999934, 6534, 10101},
      {21782178, 2178, 10001},
      {65346534, 6534, 10001},
  };
  std::vector<CheckResult> out;
  for (const auto& q : table) {
    CheckResult r;
    r.name = std::to_string(q.numerator) + "/" + std::to_string(q.denominator);
    if (q.denominator == digit_sum(q.numerator) && q.denominator < 100)
      r.name = std::to_string(q.numerator) + "/digitsum(" +
               std::to_string(q.numerator) + ")";
    r.claimed = q.claimed;
    r.computed = q.numerator / q.denominator;
    r.holds = q.numerator % q.denominator == 0 && r.computed == q.claimed;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct FactorLine {
  long long value;
  std::vector<std::pair<long long, int>> factors;  // as printed, base^exp
  long long mult_base;  // 198 / 594 / 4 pattern, 0 when absent
  long long mult_arg;
  std::string formula;  // display form of the generator, empty when absent
  long long formula_value;
};

std::string factor_string(const std::vector<std::pair<long long, int>>& fs) {
  std::string s;
  for (const auto& [base, exp] : fs) {
    if (!s.empty()) s += "*";
    s += std::to_string(base);
    if (exp > 1) s += "^" + std::to_string(exp);
  }
  return s;
}

const std::vector<FactorLine>& factor_table() {
  static const std::vector<FactorLine> table = [] {
    std::vector<FactorLine> t;
    auto add = [&t](long long value,
                    std::vector<std::pair<long long, int>> factors,
                    long long mb, long long ma, std::string formula,
                    long long fv) {
      t.push_back({value, std::move(factors), mb, ma, std::move(formula), fv});
    };
    // pair families, 22 * (10^k - 1) == 198 * repunit(k)
    add(2178, {{2, 1}, {3, 2}, {11, 2}}, 198, 11, "22*(10^2-1)",
        22 * (pow10ll(2) - 1));
    add(21978, {{2, 1}, {3, 3}, {11, 1}, {27, 1}}, 198, 111, "22*(10^3-1)",
        22 * (pow10ll(3) - 1));  // the printed 27 does not multiply out
    add(219978, {{2, 1}, {3, 2}, {11, 2}, {101, 1}}, 198, 1111,
        "22*(10^4-1)", 22 * (pow10ll(4) - 1));
    add(2199978, {{2, 1}, {3, 2}, {11, 1}, {41, 1}, {271, 1}}, 198, 11111,
        "22*(10^5-1)", 22 * (pow10ll(5) - 1));
    add(21999978, {{2, 1}, {3, 3}, {7, 1}, {11, 2}, {13, 1}, {37, 1}}, 198,
        111111, "22*(10^6-1)", 22 * (pow10ll(6) - 1));
    add(219999978, {{2, 1}, {3, 2}, {11, 1}, {239, 1}, {4649, 1}}, 198,
        1111111, "22*(10^7-1)", 22 * (pow10ll(7) - 1));
    add(2199999978, {{2, 1}, {3, 2}, {11, 2}, {73, 1}, {101, 1}, {137, 1}},
        198, 11111111, "22*(10^8-1)", 22 * (pow10ll(8) - 1));
    // their partners, 66 * (10^k - 1) == 594 * repunit(k)
    add(6534, {{2, 1}, {3, 3}, {11, 2}}, 594, 11, "66*(10^2-1)",
        66 * (pow10ll(2) - 1));
    add(65934, {{2, 1}, {3, 4}, {11, 1}, {27, 1}}, 594, 111, "66*(10^3-1)",
        66 * (pow10ll(3) - 1));  // same misprinted 27
    add(659934, {{2, 1}, {3, 3}, {11, 2}, {101, 1}}, 594, 1111,
        "66*(10^4-1)", 66 * (pow10ll(4) - 1));
    add(6599934, {{2, 1}, {3, 3}, {11, 1}, {41, 1}, {271, 1}}, 594, 11111,
        "66*(10^5-1)", 66 * (pow10ll(5) - 1));
    add(65999934, {{2, 1}, {3, 4}, {7, 1}, {11, 2}, {13, 1}, {37, 1}}, 594,
        111111, "66*(10^6-1)", 66 * (pow10ll(6) - 1));
    add(659999934, {{2, 1}, {3, 3}, {11, 1}, {239, 1}, {4649, 1}}, 594,
        1111111, "66*(10^7-1)", 66 * (pow10ll(7) - 1));
    add(6599999934, {{2, 1}, {3, 3}, {11, 2}, {73, 1}, {101, 1}, {137, 1}},
        594, 11111111, "66*(10^8-1)", 66 * (pow10ll(8) - 1));
    // spaced families, 2178 * (10^k + 1)
    add(21782178, {{2, 1}, {3, 2}, {11, 2}, {73, 1}, {137, 1}}, 198, 110011,
        "2178*(10^4+1)", 2178 * (pow10ll(4) + 1));
    add(217802178, {{2, 1}, {3, 2}, {11, 3}, {9091, 1}}, 198, 1100011,
        "2178*(10^5+1)", 2178 * (pow10ll(5) + 1));
    add(2178002178, {{2, 1}, {3, 2}, {11, 2}, {101, 1}, {9901, 1}}, 198,
        11000011, "2178*(10^6+1)", 2178 * (pow10ll(6) + 1));
    // spaced partners, 6534 * (10^k + 1)
    add(65346534, {{2, 1}, {3, 3}, {11, 2}, {73, 1}, {137, 1}}, 594, 110011,
        "6534*(10^4+1)", 6534 * (pow10ll(4) + 1));
    add(653406534, {{2, 1}, {3, 3}, {11, 3}, {9091, 1}}, 594, 1100011,
        "6534*(10^5+1)", 6534 * (pow10ll(5) + 1));
    add(6534006534, {{2, 1}, {3, 3}, {11, 2}, {101, 1}, {9901, 1}}, 594,
        11000011, "6534*(10^6+1)", 6534 * (pow10ll(6) + 1));
    // period-14 family seeds
    add(11436678, {{2, 1}, {3, 2}, {11, 2}, {59, 1}, {89, 1}}, 198, 57761,
        "", 0);
    add(114396678, {{2, 1}, {3, 3}, {11, 1}, {192587, 1}}, 198, 577761, "",
        0);
    add(1143996678, {{2, 1}, {3, 2}, {11, 2}, {23, 1}, {41, 1}, {557, 1}},
        198, 5777761, "", 0);
    // first cyclic numbers per width
    add(10012, {{2, 2}, {2503, 1}}, 4, 2503, "", 0);
    add(100012, {{2, 2}, {11, 1}, {2273, 1}}, 4, 25003, "", 0);
    add(1000012, {{2, 2}, {13, 1}, {19231, 1}}, 4, 250003, "", 0);
    return t;
  }();
  return table;
}

}  // namespace

std::vector<CheckResult> verify_factorizations() {
  std::vector<CheckResult> out;
  for (const auto& line : factor_table()) {
    const std::string value = std::to_string(line.value);
    long long product = 1;
    for (const auto& [base, exp] : line.factors)
      for (int i = 0; i < exp; ++i) product *= base;
    out.push_back({value + " = " + factor_string(line.factors), line.value,
                   product, product == line.value});
    if (line.mult_base != 0) {
      const long long m = line.mult_base * line.mult_arg;
      out.push_back({value + " = " + std::to_string(line.mult_base) + "*" +
                         std::to_string(line.mult_arg),
                     line.value, m, m == line.value});
    }
    if (!line.formula.empty())
      out.push_back({value + " = " + line.formula, line.value,
                     line.formula_value, line.formula_value == line.value});
  }
  // The period-14 members are described as sharing the 198-multiple
  // pattern; count for how many of them that is actually true.
  for (int width : {8, 9, 10}) {
    const ReflectiveInt seed = generate_family(FormulaKind::Fourteen198, width);
    const auto members = cycle_members(seed);
    long long divisible = 0;
    for (ReflectiveInt m : members)
      if (detail::magnitude_of(m) % 198 == 0) ++divisible;
    out.push_back({"fourteen-" + std::to_string(seed) +
                       ": members divisible by 198",
                   static_cast<long long>(members.size()), divisible,
                   divisible == static_cast<long long>(members.size())});
  }
  return out;
}

std::vector<std::pair<long long, int>> trial_factorize(long long n) {
  if (n < 2) throw std::invalid_argument("trial_factorize needs n >= 2");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace reflectra
