#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "galoisjd/combinat.hpp"
#include "galoisjd/error.hpp"

using namespace galoisjd;
using combinat::Partition;

namespace {

// p(n) by the standard "parts at most k" recurrence, independent of the
// pentagonal one used by the library.
std::uint64_t count_by_parts(int n) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) ways[i] += ways[i - k];
  return ways[n];
}

using IntPoly = std::vector<std::int64_t>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("partitions: counts against an independent recurrence") {
  CHECK(combinat::partitions_of(0).size() == 1);
  CHECK(combinat::partitions_of(0)[0].size() == 0);
  CHECK(combinat::partitions_of(4).size() == 5);
  CHECK(combinat::partitions_of(10).size() == 42);
  for (int n = 0; n <= 40; ++n) CHECK(combinat::partition_count(n) == count_by_parts(n));
  for (int n = 0; n <= 14; ++n) {
    const auto ps = combinat::partitions_of(n);
    REQUIRE(ps.size() == count_by_parts(n));
    CHECK(std::is_sorted(ps.begin(), ps.end(), combinat::canonical_less));
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    for (const auto& p : ps) CHECK(p.size() == n);
    if (n > 0) {
      CHECK(ps.front() == Partition({n}));
      CHECK(ps.back() == Partition(std::vector<int>(n, 1)));
    }
  }
  CHECK_THROWS_AS(combinat::partitions_of(41), Error);
  CHECK_THROWS_AS(combinat::partitions_of(-1), Error);
}

TEST_CASE("partitions: malformed parts are rejected") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_NOTHROW(Partition({3, 3, 1}));
}

TEST_CASE("hooks and n(lambda)") {
  auto sorted = [](std::vector<int> v) { std::sort(v.begin(), v.end()); return v; };
  CHECK(sorted(combinat::hook_multiset(Partition({4}))) == std::vector<int>{1, 2, 3, 4});
  CHECK(combinat::n_stat(Partition({4})) == 0);
  CHECK(sorted(combinat::hook_multiset(Partition({1, 1, 1, 1}))) == std::vector<int>{1, 2, 3, 4});
  CHECK(combinat::n_stat(Partition({1, 1, 1, 1})) == 6);
  CHECK(sorted(combinat::hook_multiset(Partition({2, 1}))) == std::vector<int>{1, 1, 3});
  CHECK(combinat::n_stat(Partition({2, 1})) == 1);
  CHECK(sorted(combinat::hook_multiset(Partition({3, 2}))) == std::vector<int>{1, 1, 2, 3, 4});

  // n(lambda) = sum over cells of (hook - 1) restricted to legs; equivalently
  // sum of hooks = n(lambda) + n(lambda') + |lambda|.
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : combinat::partitions_of(n)) {
      const auto h = combinat::hook_multiset(p);
      CHECK(h.size() == static_cast<std::size_t>(n));
      CHECK(std::accumulate(h.begin(), h.end(), 0) == combinat::n_stat(p) + combinat::n_stat(p.transpose()) + n);
      CHECK(p.transpose().transpose() == p);
    }
  }
}

TEST_CASE("unipotent degrees") {
  CHECK(combinat::unipotent_degree(Partition({3}), 7) == 1);
  CHECK(combinat::unipotent_degree(Partition({1, 1}), 5) == 5);
  CHECK(combinat::unipotent_degree(Partition({1, 1, 1}), 2) == 8);
  CHECK(combinat::unipotent_degree(Partition({2, 1}), 2) == 6);  // q^2 + q

  for (BigInt Q : {BigInt(2), BigInt(3), BigInt(4)}) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& p : combinat::partitions_of(n)) {
        // same hooks, so only the Q-power differs
        const auto d = combinat::unipotent_degree(p, Q);
        const auto dt = combinat::unipotent_degree(p.transpose(), Q);
        BigInt lhs = d;
        BigInt rhs = dt;
        for (int i = 0; i < combinat::n_stat(p.transpose()); ++i) lhs *= Q;
        for (int i = 0; i < combinat::n_stat(p); ++i) rhs *= Q;
        CHECK(lhs == rhs);
        CHECK(d >= 1);
      }
    }
  }
}

TEST_CASE("number theory helpers") {
  CHECK(combinat::moebius(1) == 1);
  CHECK(combinat::moebius(4) == 0);
  CHECK(combinat::moebius(6) == 1);
  CHECK(combinat::moebius(30) == -1);
  CHECK(combinat::euler_phi(1) == 1);
  CHECK(combinat::euler_phi(24) == 8);
  CHECK(combinat::euler_phi(360) == 96);
  CHECK(combinat::gcd(12, 18) == 6);
  std::vector<BigInt> v{BigInt(4), BigInt(6), BigInt(10)};
  CHECK(combinat::lcm_all(v) == 60);
  CHECK(combinat::prime_power(9) == std::pair<std::uint64_t, int>{3, 2});
  CHECK(combinat::prime_power(12) == std::pair<std::uint64_t, int>{0, 0});
  CHECK(combinat::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(combinat::checked_pow(10, 30), Error);

  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    CHECK(combinat::euler_phi(n) == phi);
    int mu_sum = 0;
    for (auto d : combinat::divisors(n)) mu_sum += combinat::moebius(d);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("cyclotomic polynomials multiply to X^n - 1") {
  CHECK(combinat::cyclotomic_poly(4) == IntPoly{1, 0, 1});
  CHECK(combinat::cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
  for (std::uint64_t n = 1; n <= 60; ++n) {
    IntPoly prod{1};
    for (auto d : combinat::divisors(n)) prod = mul(prod, combinat::cyclotomic_poly(d));
    IntPoly want(n + 1, 0);
    want[0] = -1;
    want[n] = 1;
    CHECK(prod == want);
    CHECK(combinat::cyclotomic_poly(n).size() == combinat::euler_phi(n) + 1);
  }
}
