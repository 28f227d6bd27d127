#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace galoisjd {

using BigInt = boost::multiprecision::cpp_int;

namespace combinat {

/// A weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidLabel unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  Partition transpose() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order: by size, then reverse-lexicographic on parts, so (n)
/// precedes every other partition of n and (1^n) comes last.
std::strong_ordering canonical_compare(const Partition& a, const Partition& b);

inline bool canonical_less(const Partition& a, const Partition& b) {
  return canonical_compare(a, b) < 0;
}

inline constexpr int kMaxPartitionSize = 40;

/// All partitions of n in canonical order. DegenerateSize for n outside [0, 40].
std::vector<Partition> partitions_of(int n);

/// Number of partitions p(n), via Euler's pentagonal recurrence.
std::uint64_t partition_count(int n);

std::vector<int> hook_multiset(const Partition& lambda);

/// n(lambda) = sum (i-1) lambda_i.
int n_stat(const Partition& lambda);

/// Degree of the unipotent character of GL_m(Q) labelled by lambda:
///   Q^{n(lambda)} prod_{i<=m}(Q^i - 1) / prod_{hooks}(Q^h - 1).
BigInt unipotent_degree(const Partition& lambda, const BigInt& Q);

// Elementary number theory.

int moebius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
BigInt lcm_all(std::span<const BigInt> values);
bool is_prime(std::uint64_t n);

/// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// If q = p^k with p prime, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint64_t, int> prime_power(std::uint64_t q);

/// Phi_m as an integer coefficient vector, constant term first.
std::vector<std::int64_t> cyclotomic_poly(std::uint64_t m);

/// x^e with overflow detection; throws DegenerateSize on overflow.
std::uint64_t checked_pow(std::uint64_t x, unsigned e);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace combinat
}  // namespace galoisjd
