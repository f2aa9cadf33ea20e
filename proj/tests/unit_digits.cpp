#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "reflectra/digits.hpp"
#include "support/reference.hpp"
#include "support/testutil.hpp"

using namespace reflectra;
using testutil::pow10ll;

TEST_CASE("reflect reverses digits and flips the sign") {
  CHECK(reflect(328) == -823);
  CHECK(reflect(-7250) == 527);  // leading zero of 0527 drops
  CHECK(reflect(5) == -5);
  CHECK(reflect(0) == 0);
  CHECK(reflect(1000) == -1);
}

TEST_CASE("step adds the reflection") {
  CHECK(step(571) == 396);
  CHECK(step(-297) == 495);
  CHECK(step(484) == 0);  // palindrome
  CHECK(step(-6534) == -2178);
  CHECK(step(0) == 0);
}

TEST_CASE("both step formulations agree bit for bit") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    long long x = testutil::value_up_to_width(rng, 18);
    if (rng() & 1) x = -x;
    CHECK(step(x) == x + reflect(x));
  }
  for (long long x = -2000; x <= 2000; ++x) CHECK(step(x) == x + reflect(x));
}

TEST_CASE("digit_count") {
  CHECK(digit_count(7259) == 4);
  CHECK(digit_count(-99) == 2);
  CHECK(digit_count(0) == 1);
  CHECK(digit_count(9) == 1);
  CHECK(digit_count(10) == 2);
  CHECK(digit_count(kMagnitudeLimit - 1) == 18);
}

TEST_CASE("first_step_divisor: 99 for odd widths, 9 for even") {
  CHECK(first_step_divisor(571) == 99);
  CHECK(first_step_divisor(3817) == 9);
  CHECK(first_step_divisor(10) == 9);
  CHECK(first_step_divisor(-5) == 99);
  CHECK_THROWS_AS(first_step_divisor(0), std::invalid_argument);
}

TEST_CASE("inputs of 19 or more digits are rejected, 18 accepted") {
  CHECK_THROWS_AS(reflect(kMagnitudeLimit), OverflowError);
  CHECK_THROWS_AS(step(-kMagnitudeLimit), OverflowError);
  CHECK_THROWS_AS(step(std::numeric_limits<std::int64_t>::min()),
                  OverflowError);
  CHECK_THROWS_AS(step(std::numeric_limits<std::int64_t>::max()),
                  OverflowError);
  CHECK_NOTHROW(step(kMagnitudeLimit - 1));
  CHECK_NOTHROW(reflect(-(kMagnitudeLimit - 1)));
}

TEST_CASE("odd symmetry: step(-x) == -step(x)") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10000; ++i) {
    const long long x = testutil::value_up_to_width(rng, 18);
    CHECK(step(-x) == -step(x));
  }
}

TEST_CASE("reflect is an involution when the last digit is nonzero") {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 10000) {
    long long x = testutil::value_up_to_width(rng, 18);
    if (x % 10 == 0) continue;
    if (rng() & 1) x = -x;
    CHECK(reflect(reflect(x)) == x);
    ++checked;
  }
  CHECK(reflect(reflect(-7250)) != -7250);  // trailing zero is lost
}

TEST_CASE("boundedness: |step(x)| stays below 10^digit_count(x)") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10000; ++i) {
    long long x = testutil::value_up_to_width(rng, 18);
    if (rng() & 1) x = -x;
    const long long bound = pow10ll(digit_count(x));
    const long long s = step(x);
    CHECK(s < bound);
    CHECK(s > -bound);
  }
}

TEST_CASE("palindromes annihilate in one step") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> width(1, 18);
  for (int i = 0; i < 10000; ++i) {
    const long long p = testutil::random_palindrome(rng, width(rng));
    CHECK(is_palindrome(static_cast<std::uint64_t>(p)));
    CHECK(step(p) == 0);
    CHECK(step(-p) == 0);
  }
}

TEST_CASE("divisor lemma, exhaustive at 2-4 digits and sampled wide") {
  for (long long x = 10; x <= 9999; ++x) {
    CHECK(step(x) % first_step_divisor(x) == 0);
    CHECK(step(-x) % first_step_divisor(-x) == 0);
  }
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20000; ++i) {
    std::uniform_int_distribution<int> w(7, 18);
    long long x = testutil::value_of_width(rng, w(rng));
    if (rng() & 1) x = -x;
    CHECK(step(x) % first_step_divisor(x) == 0);
  }
}

TEST_CASE("3-digit closed form: step == (a2 - a0) * 99") {
  for (long long x = 100; x <= 999; ++x) {
    const long long a2 = x / 100, a0 = x % 10;
    CHECK(step(x) == (a2 - a0) * 99);
  }
}

TEST_CASE("kernel matches the digit-string reference on small widths") {
  for (long long x = -999; x <= 999; ++x) {
    CHECK(reflect(x) == refimpl::reflect(x));
    CHECK(step(x) == refimpl::step(x));
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100000; ++i) {
    long long x = testutil::value_up_to_width(rng, 18);
    if (rng() & 1) x = -x;
    CHECK(step(x) == refimpl::step(x));
  }
}

TEST_CASE("reverse_digits is usable at compile time") {
  static_assert(reverse_digits(7250) == 527);
  static_assert(step(571) == 396);
  static_assert(digit_count(0) == 1);
}
