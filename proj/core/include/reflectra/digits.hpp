#pragma once

// Digit kernel for the reflective iteration: reverse an integer's decimal
// digits, flip its sign, add. Everything is plain 64-bit arithmetic; digit
// extraction is repeated div/mod, never text. Values are capped at 18
// digits so no intermediate result can leave the signed 64-bit range
// (|step(x)| < 10^d(x), so iterates only shrink).

#include <cstdint>

#include "reflectra/errors.hpp"

namespace reflectra {

// The iteration state: a signed integer with |value| < 10^18.
using ReflectiveInt = std::int64_t;

inline constexpr std::int64_t kMagnitudeLimit = 1'000'000'000'000'000'000;
inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

namespace detail {

constexpr std::uint64_t magnitude_of(std::int64_t x) noexcept {
  return x < 0 ? 0ULL - static_cast<std::uint64_t>(x)
               : static_cast<std::uint64_t>(x);
}

constexpr void require_supported(ReflectiveInt x) {
  if (x >= kMagnitudeLimit || x <= -kMagnitudeLimit) throw OverflowError(x);
}

}  // namespace detail

// Decimal digits of m written in reverse order; trailing zeros of m become
// leading zeros and vanish (7250 -> 527).
constexpr std::uint64_t reverse_digits(std::uint64_t m) noexcept {
  std::uint64_t r = 0;
  while (m != 0) {
    r = r * 10 + m % 10;
    m /= 10;
  }
  return r;
}

constexpr bool is_palindrome(std::uint64_t m) noexcept {
  return reverse_digits(m) == m;
}

// Number of decimal digits of |x|; digit_count(0) == 1.
constexpr int digit_count(ReflectiveInt x) noexcept {
  std::uint64_t m = detail::magnitude_of(x);
  int d = 1;
  while (m >= 10) {
    m /= 10;
    ++d;
  }
  return d;
}

// -sign(x) * reverse_digits(|x|); reflect(0) == 0.
constexpr ReflectiveInt reflect(ReflectiveInt x) {
  detail::require_supported(x);
  const auto reversed =
      static_cast<std::int64_t>(reverse_digits(detail::magnitude_of(x)));
  return x < 0 ? reversed : -reversed;
}

// x + reflect(x), equivalently sign(x) * (|x| - reverse_digits(|x|)).
constexpr ReflectiveInt step(ReflectiveInt x) {
  detail::require_supported(x);
  const std::uint64_t m = detail::magnitude_of(x);
  const std::int64_t diff =
      static_cast<std::int64_t>(m) -
      static_cast<std::int64_t>(reverse_digits(m));
  return x < 0 ? -diff : diff;
}

// The divisor guaranteed for step(x): 99 when |x| has an odd number of
// digits, 9 when even.
constexpr int first_step_divisor(ReflectiveInt x) {
  if (x == 0) throw std::invalid_argument("first_step_divisor: zero input");
  return digit_count(x) % 2 != 0 ? 99 : 9;
}

namespace detail {

// step without the range check, for callers that already validated the
// start value (iterates never grow, so one check per trajectory suffices).
constexpr std::int64_t step_unchecked(std::int64_t x) noexcept {
  const std::uint64_t m = magnitude_of(x);
  const std::int64_t diff = static_cast<std::int64_t>(m) -
                            static_cast<std::int64_t>(reverse_digits(m));
  return x < 0 ? -diff : diff;
}

}  // namespace detail

}  // namespace reflectra
