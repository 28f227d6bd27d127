#pragma once

// Brute-force references: GL_2(q) element enumeration, class membership by
// characteristic polynomial, Harish-Chandra induction from the Borel by
// direct summation, and irreducibility by sieving products.

#include <array>
#include <map>
#include <set>
#include <vector>

#include "galoisjd/ffield.hpp"
#include "galoisjd/oracle/gl2.hpp"

namespace brute {

using galoisjd::ffield::FiniteField;
using galoisjd::ffield::FqElement;
using galoisjd::ffield::Poly;

// [a b; c d]
using M2 = std::array<FqElement, 4>;

inline M2 mul(const FiniteField& F, const M2& x, const M2& y) {
  return {F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])), F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
          F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])), F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))};
}

inline FqElement det(const FiniteField& F, const M2& x) { return F.sub(F.mul(x[0], x[3]), F.mul(x[1], x[2])); }

inline M2 inverse(const FiniteField& F, const M2& x) {
  const auto di = F.inv(det(F, x));
  return {F.mul(x[3], di), F.neg(F.mul(x[1], di)), F.neg(F.mul(x[2], di)), F.mul(x[0], di)};
}

inline std::vector<M2> all_gl2(const FiniteField& F) {
  std::vector<M2> out;
  const std::uint32_t q = F.q();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          M2 x{FqElement{a}, FqElement{b}, FqElement{c}, FqElement{d}};
          if (det(F, x).code != 0) out.push_back(x);
        }
  return out;
}

/// Sorts every element of GL_2(q) into the oracle's class list using only the
/// characteristic polynomial and whether the element is scalar.
struct GL2Census {
  std::shared_ptr<const FiniteField> field;
  std::vector<M2> elements;
  std::vector<std::size_t> class_of;  // per element
  std::vector<std::uint64_t> counts;  // per table class
  std::vector<M2> reps;               // first element met in each class
  std::vector<std::uint32_t> log;     // log against the table's g, by code

  explicit GL2Census(const galoisjd::oracle::GL2Table& T) {
    using Kind = galoisjd::oracle::GL2Class::Kind;
    field = FiniteField::of_order(T.q());
    const auto& F = *field;
    log.assign(F.q(), 0);
    FqElement x = F.one();
    for (std::uint32_t e = 0; e + 1 < F.q(); ++e) {
      log[x.code] = e;
      x = F.mul(x, T.small_generator());
    }
    std::map<std::tuple<int, std::uint64_t, std::uint64_t>, std::size_t> index;
    std::map<Poly, std::size_t> elliptic;
    for (std::size_t c = 0; c < T.classes().size(); ++c) {
      const auto& cl = T.classes()[c];
      if (cl.kind == Kind::Elliptic) {
        elliptic[T.ext().min_poly(T.ext().pow(T.big_generator(), cl.a)).coeffs()] = c;
      } else {
        index[{static_cast<int>(cl.kind), cl.a, cl.b}] = c;
      }
    }
    elements = all_gl2(F);
    counts.assign(T.classes().size(), 0);
    reps.assign(T.classes().size(), M2{});
    for (const auto& g : elements) {
      const auto tr = F.add(g[0], g[3]);
      const auto dt = det(F, g);
      std::vector<FqElement> roots;
      for (std::uint32_t r = 0; r < F.q(); ++r) {
        const FqElement z{r};
        if (F.add(F.sub(F.mul(z, z), F.mul(tr, z)), dt).code == 0) roots.push_back(z);
      }
      std::size_t c;
      if (roots.empty()) {
        c = elliptic.at(Poly{dt, F.neg(tr), F.one()});
      } else if (roots.size() == 2) {
        auto i = log[roots[0].code], j = log[roots[1].code];
        if (i > j) std::swap(i, j);
        c = index.at({static_cast<int>(Kind::Split), i, j});
      } else {
        const bool scalar = g[1].code == 0 && g[2].code == 0 && g[0] == g[3];
        c = index.at({static_cast<int>(scalar ? Kind::Central : Kind::NonSemisimple), log[roots[0].code], 0});
      }
      if (counts[c]++ == 0) reps[c] = g;
      class_of.push_back(c);
    }
  }

  /// Ind_B^G(alpha_u x alpha_v) at each class representative, by summing
  /// the inflated Borel character over all conjugates.
  std::vector<galoisjd::cyclo::CycloNumber> induced_row(const galoisjd::oracle::GL2Table& T, std::uint64_t u,
                                                       std::uint64_t v) const {
    using galoisjd::cyclo::CycloNumber;
    using galoisjd::cyclo::Rational;
    const auto& F = *field;
    const std::uint64_t q1 = T.q() - 1;
    const auto borel = static_cast<std::int64_t>(T.q() * q1 * q1);
    std::vector<CycloNumber> row;
    for (const auto& g : reps) {
      std::vector<std::int64_t> hits(q1, 0);
      for (const auto& x : elements) {
        const auto y = mul(F, mul(F, x, g), inverse(F, x));
        if (y[2].code != 0) continue;
        ++hits[(u * log[y[0].code] + v * log[y[3].code]) % q1];
      }
      auto val = CycloNumber::zero(T.m());
      for (std::uint64_t e = 0; e < q1; ++e) {
        if (hits[e]) val += CycloNumber::root_of_unity(T.m(), static_cast<std::int64_t>(e * (T.m() / q1))) * Rational(hits[e], borel);
      }
      row.push_back(val);
    }
    return row;
  }
};

/// Monic irreducibles of degree d with nonzero constant term, found by
/// crossing out every product of two monic polynomials of positive degree.
inline std::set<Poly> sieve_irreducibles(const FiniteField& F, unsigned d) {
  auto monic_of_degree = [&](unsigned k) {
    std::vector<Poly> out;
    std::vector<std::uint32_t> digits(k, 0);
    while (true) {
      Poly f;
      for (auto x : digits) f.push_back(FqElement{x});
      f.push_back(F.one());
      out.push_back(f);
      unsigned i = 0;
      while (i < k && ++digits[i] == F.q()) digits[i++] = 0;
      if (i == k) break;
    }
    return out;
  };
  std::set<Poly> composite;
  for (unsigned a = 1; a <= d / 2; ++a) {
    for (const auto& f : monic_of_degree(a)) {
      for (const auto& g : monic_of_degree(d - a)) composite.insert(galoisjd::ffield::poly_mul(F, f, g));
    }
  }
  std::set<Poly> out;
  for (const auto& f : monic_of_degree(d)) {
    if (f.front().code != 0 && !composite.count(f)) out.insert(f);
  }
  return out;
}

}  // namespace brute
