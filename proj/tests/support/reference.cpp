#include "support/reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace refimpl {

long long reverse_value(long long magnitude) {
  if (magnitude < 0) throw std::invalid_argument("reverse_value wants |x|");
  std::string s = std::to_string(magnitude);
  std::reverse(s.begin(), s.end());
  std::size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  return std::stoll(s.substr(first));
}

long long reflect(long long x) {
  if (x >= 0) return -reverse_value(x);
  return reverse_value(-x);
}

long long step(long long x) { return x + reflect(x); }

bool is_palindrome(long long x) {
  std::string s = std::to_string(x < 0 ? -x : x);
  std::string r = s;
  std::reverse(r.begin(), r.end());
  return s == r;
}

RefClassification classify(long long start) {
  if (start == 0) return {false, 0, 0};
  std::unordered_map<long long, int> seen;
  std::vector<long long> path{start};
  seen[start] = 0;
  long long v = start;
  for (int k = 1;; ++k) {
    v = step(v);
    if (v == 0) return {false, 0, k};
    auto it = seen.find(v);
    if (it != seen.end()) {
      int j = it->second;
      long long canonical = 0;
      for (int i = j; i < k; ++i) {
        long long mag = std::llabs(path[i]);
        if (canonical == 0 || mag < canonical) canonical = mag;
      }
      return {true, canonical, std::max(j, 1)};
    }
    seen[v] = k;
    path.push_back(v);
    if (k > 2000000) throw std::runtime_error("reference classify runaway");
  }
}

std::vector<long long> cycle_members(long long seed) {
  if (seed == 0) return {0};
  std::vector<long long> orbit{seed};
  long long v = step(seed);
  while (v != seed) {
    if (v == 0 || (long long)orbit.size() > 2000000)
      throw std::invalid_argument("seed does not lie on a cycle");
    orbit.push_back(v);
    v = step(v);
  }
  auto best = orbit.begin();
  for (auto it = orbit.begin(); it != orbit.end(); ++it) {
    long long m = std::llabs(*it), bm = std::llabs(*best);
    if (m < bm || (m == bm && *it > *best)) best = it;
  }
  std::rotate(orbit.begin(), best, orbit.end());
  return orbit;
}

}  // namespace refimpl
