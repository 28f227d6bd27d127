#include "galoisjd/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "galoisjd/error.hpp"

namespace galoisjd::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::InvalidLabel, "partition parts must be positive and weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int row : parts_) {
      for (int j = 0; j < row; ++j) ++t[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(t));
}

std::strong_ordering canonical_compare(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Larger lexicographic first.
  return std::lexicographical_compare_three_way(b.parts().begin(), b.parts().end(),
                                                a.parts().begin(), a.parts().end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0 || n > kMaxPartitionSize) {
    throw Error(ErrorCode::DegenerateSize, "partitions_of: n must lie in [0, 40], got " + std::to_string(n));
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<std::int64_t>(p[static_cast<std::size_t>(i - g1)]);
      int g2 = k * (3 * k + 1) / 2;
      if (g2 <= i) acc += sign * static_cast<std::int64_t>(p[static_cast<std::size_t>(i - g2)]);
    }
    p[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(acc);
  }
  return p[static_cast<std::size_t>(n)];
}

std::vector<int> hook_multiset(const Partition& lambda) {
  const auto conj = lambda.transpose();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i) {
    const int row = lambda.parts()[static_cast<std::size_t>(i)];
    for (int j = 0; j < row; ++j) {
      const int arm = row - j - 1;
      const int leg = conj.parts()[static_cast<std::size_t>(j)] - i - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  std::sort(hooks.begin(), hooks.end());
  return hooks;
}

int n_stat(const Partition& lambda) {
  int n = 0;
  for (int i = 0; i < lambda.length(); ++i) n += i * lambda.parts()[static_cast<std::size_t>(i)];
  return n;
}

BigInt unipotent_degree(const Partition& lambda, const BigInt& Q) {
  if (Q < 2) throw Error(ErrorCode::DegenerateSize, "unipotent_degree: Q must be at least 2");
  BigInt num = boost::multiprecision::pow(Q, static_cast<unsigned>(n_stat(lambda)));
  BigInt qi = 1;
  for (int i = 1; i <= lambda.size(); ++i) {
    qi *= Q;
    num *= qi - 1;
  }
  BigInt den = 1;
  for (int h : hook_multiset(lambda)) den *= boost::multiprecision::pow(Q, static_cast<unsigned>(h)) - 1;
  if (num % den != 0) throw Error(ErrorCode::NonIntegralDegree, "q-hook formula left a remainder");
  return num / den;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = d.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) d.push_back(d[j] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

BigInt lcm_all(std::span<const BigInt> values) {
  BigInt acc = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    acc = acc / boost::multiprecision::gcd(acc, v) * v;
  }
  return acc;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, int> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

std::vector<std::int64_t> cyclotomic_poly(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::DegenerateSize, "cyclotomic_poly: m must be positive");
  // Phi_m = prod_{d | m} (X^d - 1)^{mu(m/d)}; multiply the numerators and
  // divide out the denominators, all exact over Z.
  std::vector<std::int64_t> poly{1};
  auto mul_binomial = [&](std::uint64_t d) {
    std::vector<std::int64_t> out(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      out[i + d] += poly[i];
      out[i] -= poly[i];
    }
    poly = std::move(out);
  };
  auto div_binomial = [&](std::uint64_t d) {
    // poly / (X^d - 1): synthetic division from the top.
    const std::size_t deg = poly.size() - 1;
    std::vector<std::int64_t> quot(deg - d + 1, 0);
    std::vector<std::int64_t> rem = poly;
    for (std::size_t k = deg + 1; k-- > d;) {
      const std::int64_t c = rem[k];
      quot[k - d] = c;
      rem[k] -= c;
      rem[k - d] += c;
    }
    poly = std::move(quot);
  };
  const auto ds = divisors(m);
  for (auto d : ds) {
    if (moebius(m / d) == 1) mul_binomial(d);
  }
  for (auto d : ds) {
    if (moebius(m / d) == -1) div_binomial(d);
  }
  return poly;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::DegenerateSize, "integer overflow");
  return r;
}

std::uint64_t checked_pow(std::uint64_t x, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, x);
  return r;
}

}  // namespace galoisjd::combinat
