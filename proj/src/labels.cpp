#include "galoisjd/labels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <omp.h>

namespace galoisjd::labels {

namespace {

void check_bounds(int n, std::uint64_t q, const Limits& limits) {
  if (n < 1 || n > limits.max_n) {
    throw Error(ErrorCode::DegenerateSize, "n = " + std::to_string(n) + " outside [1, " +
                                               std::to_string(limits.max_n) + "]");
  }
  if (q > limits.max_q) {
    throw Error(ErrorCode::DegenerateSize, "q = " + std::to_string(q) + " exceeds max q " +
                                               std::to_string(limits.max_q));
  }
  if (combinat::checked_pow(q, static_cast<unsigned>(n)) > limits.cap) {
    throw Error(ErrorCode::DegenerateSize, "q^n exceeds the enumeration cap");
  }
}

void enumerate_rec(const std::vector<IrreduciblePoly>& polys, std::size_t start, int remaining,
                   std::vector<SemisimpleEntry>& cur, int n, std::uint32_t q, std::vector<SemisimpleLabel>& out) {
  if (remaining == 0) {
    out.push_back(SemisimpleLabel{n, q, cur});
    return;
  }
  for (std::size_t i = start; i < polys.size(); ++i) {
    const int deg = polys[i].degree();
    if (deg > remaining) break;
    for (int mult = 1; mult * deg <= remaining; ++mult) {
      cur.push_back(SemisimpleEntry{polys[i], mult});
      enumerate_rec(polys, i + 1, remaining - mult * deg, cur, n, q, out);
      cur.pop_back();
    }
  }
}

BigInt strip_p(BigInt x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x;
}

}  // namespace

std::strong_ordering SemisimpleLabel::operator<=>(const SemisimpleLabel& other) const {
  if (auto c = n <=> other.n; c != 0) return c;
  if (auto c = q <=> other.q; c != 0) return c;
  return std::lexicographical_compare_three_way(entries.begin(), entries.end(), other.entries.begin(),
                                                other.entries.end());
}

std::strong_ordering CharacterLabel::operator<=>(const CharacterLabel& other) const {
  if (auto c = s <=> other.s; c != 0) return c;
  return std::lexicographical_compare_three_way(nu.begin(), nu.end(), other.nu.begin(), other.nu.end(),
                                                combinat::canonical_compare);
}

SemisimpleLabel make_semisimple(int n, std::uint32_t q, std::vector<SemisimpleEntry> entries) {
  auto F = ffield::FiniteField::of_order(q);
  int weight = 0;
  for (const auto& e : entries) {
    if (e.mult < 1) throw Error(ErrorCode::InvalidLabel, "multiplicities must be positive");
    // Re-validate: labels may arrive from JSON.
    (void)IrreduciblePoly::checked(*F, e.poly.coeffs());
    if (e.poly.constant_term().code == 0) {
      throw Error(ErrorCode::InvalidLabel, "semisimple eigenvalues must be nonzero (constant term 0)");
    }
    weight += e.poly.degree() * e.mult;
  }
  if (weight != n) {
    throw Error(ErrorCode::InvalidLabel, "entry weights sum to " + std::to_string(weight) + ", expected " +
                                             std::to_string(n));
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].poly == entries[i - 1].poly) throw Error(ErrorCode::InvalidLabel, "duplicate polynomial");
  }
  return SemisimpleLabel{n, q, std::move(entries)};
}

CharacterLabel make_character(int n, std::uint32_t q, std::vector<SemisimpleEntry> entries,
                              std::vector<Partition> nu) {
  if (nu.size() != entries.size()) throw Error(ErrorCode::InvalidLabel, "nu must align with the entries of s");
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return entries[a] < entries[b]; });
  std::vector<Partition> sorted_nu;
  for (auto i : order) {
    if (nu[i].size() != entries[i].mult) {
      throw Error(ErrorCode::InvalidLabel, "partition size must equal the multiplicity of its polynomial");
    }
    sorted_nu.push_back(nu[i]);
  }
  return CharacterLabel{make_semisimple(n, q, std::move(entries)), std::move(sorted_nu)};
}

std::vector<SemisimpleLabel> enumerate_semisimple(int n, std::uint64_t q, const Limits& limits) {
  check_bounds(n, q, limits);
  auto F = ffield::FiniteField::of_order(q, limits.cap);
  std::vector<IrreduciblePoly> polys;
  for (int d = 1; d <= n; ++d) {
    auto batch = ffield::enumerate_irreducibles(F, static_cast<unsigned>(d), true, limits.cap);
    polys.insert(polys.end(), batch.begin(), batch.end());
  }
  std::vector<SemisimpleLabel> out;
  std::vector<SemisimpleEntry> cur;
  enumerate_rec(polys, 0, n, cur, n, static_cast<std::uint32_t>(q), out);
  std::sort(out.begin(), out.end());
  return out;
}

CentralizerShape centralizer_shape(const SemisimpleLabel& s) {
  CentralizerShape shape;
  for (const auto& e : s.entries) shape.push_back(CentralizerFactor{e.poly.degree(), e.mult});
  return shape;
}

BigInt gl_order(int n, const BigInt& Q) {
  BigInt order = boost::multiprecision::pow(Q, static_cast<unsigned>(n * (n - 1) / 2));
  BigInt qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= Q;
    order *= qi - 1;
  }
  return order;
}

BigInt centralizer_order(const SemisimpleLabel& s) {
  BigInt order = 1;
  for (const auto& f : centralizer_shape(s)) {
    order *= gl_order(f.mult, boost::multiprecision::pow(BigInt(s.q), static_cast<unsigned>(f.degree)));
  }
  return order;
}

std::uint64_t semisimple_order(const SemisimpleLabel& s) {
  auto F = ffield::FiniteField::of_order(s.q);
  std::uint64_t acc = 1;
  for (const auto& e : s.entries) {
    const std::uint64_t o = ffield::root_order(F, e.poly);
    acc = acc / std::gcd(acc, o) * o;
  }
  return acc;
}

std::vector<CharacterLabel> lusztig_series(const SemisimpleLabel& s) {
  std::vector<CharacterLabel> out{CharacterLabel{s, {}}};
  for (const auto& e : s.entries) {
    std::vector<CharacterLabel> next;
    for (const auto& partial : out) {
      for (auto& lambda : combinat::partitions_of(e.mult)) {
        CharacterLabel L = partial;
        L.nu.push_back(lambda);
        next.push_back(std::move(L));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<CharacterLabel> enumerate_characters(int n, std::uint64_t q, const Limits& limits) {
  std::vector<CharacterLabel> out;
  for (const auto& s : enumerate_semisimple(n, q, limits)) {
    auto series = lusztig_series(s);
    out.insert(out.end(), std::make_move_iterator(series.begin()), std::make_move_iterator(series.end()));
  }
  return out;
}

BigInt character_degree(const CharacterLabel& L) {
  const auto [p, k] = combinat::prime_power(L.s.q);
  const BigInt group = strip_p(gl_order(L.s.n, BigInt(L.s.q)), p);
  const BigInt cent = strip_p(centralizer_order(L.s), p);
  if (group % cent != 0) throw Error(ErrorCode::NonIntegralDegree, "p'-part of |C(s)| does not divide |G|");
  BigInt deg = group / cent;
  for (std::size_t i = 0; i < L.nu.size(); ++i) {
    const BigInt Q = boost::multiprecision::pow(BigInt(L.s.q), static_cast<unsigned>(L.s.entries[i].poly.degree()));
    deg *= combinat::unipotent_degree(L.nu[i], Q);
  }
  return deg;
}

SemisimpleLabel identity_label(int n, std::uint32_t q) {
  auto F = ffield::FiniteField::of_order(q);
  // X - 1
  auto poly = IrreduciblePoly::trusted({F->neg(F->one()), F->one()});
  return SemisimpleLabel{n, q, {SemisimpleEntry{poly, n}}};
}

BigInt degree_square_sum(const std::vector<CharacterLabel>& chars, Exec exec) {
  const auto count = static_cast<std::int64_t>(chars.size());
  if (exec == Exec::Serial) {
    BigInt total = 0;
    for (const auto& L : chars) {
      const BigInt d = character_degree(L);
      total += d * d;
    }
    return total;
  }
  std::vector<BigInt> squares(chars.size());
  bool failed = false;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const BigInt d = character_degree(chars[static_cast<std::size_t>(i)]);
      squares[static_cast<std::size_t>(i)] = d * d;
    } catch (...) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) throw Error(ErrorCode::NonIntegralDegree, "degree computation failed inside the parallel sweep");
  BigInt total = 0;
  for (const auto& sq : squares) total += sq;
  return total;
}

}  // namespace galoisjd::labels
