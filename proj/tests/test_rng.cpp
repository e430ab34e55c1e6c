#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "phasekit/rng.hpp"

using namespace phasekit;

TEST_CASE("generator is deterministic per seed") {
  SplitMix64 a(42), b(42), c(43);
  bool diverged = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = a.next();
    CHECK(x == b.next());
    if (x != c.next()) diverged = true;
  }
  CHECK(diverged);
}

TEST_CASE("derived streams depend on every path element and its order") {
  const std::uint64_t base = 7;
  CHECK(derive_stream(base, {0, 1}) != derive_stream(base, {1, 0}));
  CHECK(derive_stream(base, {0}) != derive_stream(base, {0, 0}));
  CHECK(derive_stream(base, {5, 9}) == derive_stream(base, {5, 9}));
  CHECK(derive_stream(base, {5, 9}) != derive_stream(base + 1, {5, 9}));

  // no low-dimensional collisions among nearby trial/substream pairs
  std::set<std::uint64_t> seen;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    for (std::uint64_t sub = 0; sub < 3; ++sub) {
      seen.insert(derive_stream(base, {trial, sub}));
    }
  }
  CHECK(seen.size() == 300);
}

TEST_CASE("unit draws stay in [0, 1)") {
  SplitMix64 rng(1);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_unit();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("bounded draws cover every residue without bias") {
  SplitMix64 rng(2);
  std::vector<int> counts(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t k = rng.next_below(7);
    REQUIRE(k < 7);
    ++counts[static_cast<std::size_t>(k)];
  }
  for (int c : counts) {
    CHECK(c > 9000);  // expected 10000, 5 sigma is ~480
    CHECK(c < 11000);
  }
}

TEST_CASE("gaussian draws have the right first moments") {
  SplitMix64 rng(3);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.01);
  CHECK(std::fabs(var - 1.0) < 0.03);
}

TEST_CASE("bit draws are balanced") {
  SplitMix64 rng(4);
  int ones = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) ones += rng.next_bit() ? 1 : 0;
  CHECK(ones > 49000);
  CHECK(ones < 51000);
}
