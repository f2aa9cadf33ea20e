#pragma once

// Closed-form cycle generators and the per-width inventory of terminal
// cycles, plus executable checks of the catalog's arithmetic identities and
// factorization table. Member sets are always computed by iterating from
// the canonical seeds, never hard-coded, so the identity checks can catch
// misprints in the source material instead of enshrining them.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflectra/trajectory.hpp"

namespace reflectra {

enum class FormulaKind : std::uint8_t {
  PairRepunit22,  // 22 * (10^k - 1), k >= 2
  PairRepunit66,  // 66 * (10^k - 1), k >= 2
  Spaced2178,     // 2178 * (10^k + 1), k >= 4
  Spaced6534,     // 6534 * (10^k + 1), k >= 4
  Fourteen198,    // the period-14 families; parameter is the digit width
  Irregular,
};

struct FamilyFormula {
  FormulaKind kind = FormulaKind::Irregular;
  int parameter = 0;

  friend bool operator==(const FamilyFormula&, const FamilyFormula&) = default;
};

struct CycleFamily {
  std::string name;
  ReflectiveInt canonical = 0;
  std::uint32_t period = 0;
  std::vector<ReflectiveInt> members;
  int digit_width = 0;
  std::optional<FamilyFormula> formula;
};

// Evaluates a generator formula. The result always lies on a cycle; that is
// checked at call time via cycle_members. Throws std::out_of_range when k
// is outside the kind's range (or the value would reach 10^18), and
// std::invalid_argument for FormulaKind::Irregular.
ReflectiveInt generate_family(FormulaKind kind, int k);

// Full inventory of terminal cycles reachable from d-digit inputs,
// 1 <= d <= 10: the trivial zero family, the pair families of widths
// 4..d, and from width 8 up the spaced and period-14 families. Throws
// std::out_of_range beyond width 10 (scanning can still discover cycles
// there; the inventory just does not vouch for them).
std::vector<CycleFamily> known_cycles_for_width(int d);

// 1012 + 11*k, the arithmetic progression containing every 4-digit number
// with a cyclic limit (not every progression member is cyclic). k in
// [0, 817] keeps the result at 4 digits.
ReflectiveInt four_digit_candidate(int k);

struct CheckResult {
  std::string name;
  long long claimed = 0;
  long long computed = 0;
  bool holds = false;
};

// The quotient curiosities (2178/18 = 121 and friends), evaluated with
// exact integer arithmetic. Failures are reported, never thrown: the
// report is the product.
std::vector<CheckResult> verify_curiosities();

// Multiplies out every claimed factorization (prime form, 198/594-multiple
// form, generator form) and compares against the stated value. Also counts
// how many members of each period-14 family are 198-multiples, since the
// source claims the pattern without qualification.
std::vector<CheckResult> verify_factorizations();

// Trial division up to sqrt(n); returns (prime, exponent) pairs in
// ascending prime order. Used as the oracle for the factorization checks.
std::vector<std::pair<long long, int>> trial_factorize(long long n);

}  // namespace reflectra
