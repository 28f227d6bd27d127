#include <random>
#include <set>

#include "doctest.h"
#include "galoisjd/error.hpp"
#include "galoisjd/ffield.hpp"
#include "support/brute.hpp"
#include "support/properties.hpp"

using namespace galoisjd;
using namespace galoisjd::ffield;

namespace {

Poly P(std::initializer_list<std::uint32_t> codes) {
  Poly f;
  for (auto c : codes) f.push_back(FqElement{c});
  return f;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("build_field") {
  const auto F2 = FiniteField::build(2, 1);
  CHECK(F2->q() == 2);
  CHECK(F2->modulus() == std::vector<std::uint32_t>{0, 1});
  const auto F9 = FiniteField::build(3, 2);
  CHECK(F9->q() == 9);
  CHECK(F9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField::build(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(code_of([] { FiniteField::build(4, 1); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { FiniteField::build(3, 0); }) == ErrorCode::DegenerateSize);
  CHECK(code_of([] { FiniteField::build(2, 30); }) == ErrorCode::DegenerateSize);
  CHECK(code_of([] { FiniteField::of_order(12); }) == ErrorCode::NotPrime);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const auto F = FiniteField::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const FqElement x{a};
      CHECK(F->add(x, F->neg(x)) == F->zero());
      if (a != 0) {
        CHECK(F->mul(x, F->inv(x)) == F->one());
        CHECK(F->pow(x, q - 1) == F->one());
        CHECK(F->exp(F->log(x)) == x);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        const FqElement y{b};
        CHECK(F->mul(x, y) == F->mul(y, x));
        CHECK(F->sub(F->add(x, y), y) == x);
        for (std::uint32_t c = 0; c < q; c += 3) {
          const FqElement z{c};
          CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
        }
      }
    }
    CHECK(F->pow(F->generator(), (q - 1)) == F->one());
    for (auto [p, e] : combinat::factorize(q - 1)) CHECK(F->pow(F->generator(), (q - 1) / p) != F->one());
  }
  const auto F = FiniteField::of_order(5);
  CHECK(code_of([&] { F->inv(F->zero()); }) == ErrorCode::ZeroElement);
}

TEST_CASE("is_irreducible") {
  const auto F2 = FiniteField::of_order(2);
  const auto F3 = FiniteField::of_order(3);
  CHECK(is_irreducible(*F2, P({1, 1, 1})));
  CHECK_FALSE(is_irreducible(*F2, P({1, 0, 1})));
  CHECK(is_irreducible(*F3, P({1, 0, 1})));
  CHECK(code_of([&] { IrreduciblePoly::checked(*F2, P({1, 0, 1})); }) == ErrorCode::NotIrreducible);
}

TEST_CASE("irreducible counts: formula, enumeration and sieve agree") {
  CHECK(count_irreducibles(2, 2) == 1);
  CHECK(count_irreducibles(3, 2) == 3);
  CHECK(count_irreducibles(2, 3) == 2);
  CHECK(enumerate_irreducibles(FiniteField::of_order(2), 2).front().coeffs() == P({1, 1, 1}));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto F = FiniteField::of_order(q);
    for (unsigned d = 1; d <= 4; ++d) {
      if (combinat::checked_pow(q, d) > 5000) continue;
      const auto list = enumerate_irreducibles(F, d, true);
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(list.size() == count_irreducibles(q, d, true));
      CHECK(enumerate_irreducibles(F, d).size() == count_irreducibles(q, d));
      std::set<Poly> from_list;
      for (const auto& f : list) from_list.insert(f.coeffs());
      CHECK(from_list == brute::sieve_irreducibles(*F, d));
    }
  }
}

TEST_CASE("extension elements: min_poly, order and the fixed generator") {
  const auto F2 = FiniteField::of_order(2);
  const auto F3 = FiniteField::of_order(3);
  const auto E4 = ExtField::canonical(F2, 2);
  const auto E9 = ExtField::canonical(F3, 2);
  CHECK(min_poly(E4, E4.one()).coeffs() == P({1, 1}));
  CHECK(element_order(E4, E4.one()) == 1);
  CHECK(min_poly(E4, E4.x()).coeffs() == P({1, 1, 1}));
  CHECK(element_order(E4, E4.x()) == 3);
  // X^2 + 1 is the modulus of F_9, so X squares to -1
  const auto i = E9.x();
  CHECK(E9.mul(i, i) == E9.neg(E9.one()));
  CHECK(min_poly(E9, i).coeffs() == P({1, 0, 1}));
  CHECK(element_order(E9, i) == 4);

  CHECK(fixed_generator(ExtField::canonical(F2, 1)) == ExtField::canonical(F2, 1).one());
  const auto E3 = ExtField::canonical(F3, 1);
  CHECK(E3.code(fixed_generator(E3)) == 2);
  // both nonunits of F_4 generate; the least code wins
  const auto g4 = fixed_generator(E4);
  CHECK(element_order(E4, g4) == 3);
  CHECK(min_poly(E4, g4).coeffs() == P({1, 1, 1}));
  for (std::uint64_t c = 2; c < 4; ++c) CHECK(E4.code(g4) <= c);

  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto F = FiniteField::of_order(q);
    for (unsigned d = 1; d <= 3; ++d) {
      const auto E = ExtField::canonical(F, d);
      const auto g = fixed_generator(E);
      CHECK(element_order(E, g) == E.order() - 1);
      for (std::uint64_t c = 1; c < E.code(g); ++c) CHECK(element_order(E, E.from_code(c)) < E.order() - 1);
      const DiscreteLog L(E, g);
      for (std::uint64_t e = 0; e < L.group_order(); e += 7) CHECK(L.log(L.exp(e)) == e);
      // min_poly has degree equal to the Frobenius orbit length and kills beta
      for (std::uint64_t c = 1; c < E.order(); c += 5) {
        const auto b = E.from_code(c);
        const auto f = min_poly(E, b);
        CHECK(d % f.degree() == 0);
        auto acc = E.zero();
        auto pw = E.one();
        for (const auto& coeff : f.coeffs()) {
          acc = E.add(acc, E.mul(E.embed(coeff), pw));
          pw = E.mul(pw, b);
        }
        CHECK(E.is_zero(acc));
      }
    }
  }
}

TEST_CASE("power_map") {
  const auto F3 = FiniteField::of_order(3);
  const auto F5 = FiniteField::of_order(5);
  const auto X2p1 = IrreduciblePoly::checked(*F3, P({1, 0, 1}));
  CHECK(power_map(F3, X2p1, 3) == X2p1);
  CHECK(power_map(F3, X2p1, 1) == X2p1);
  const auto Xm1 = IrreduciblePoly::checked(*F5, P({4, 1}));
  for (std::uint64_t r : {1, 3, 7, 11}) CHECK(power_map(F5, Xm1, r) == Xm1);
  // X - 2 -> X - 3 under cubing
  CHECK(power_map(F5, IrreduciblePoly::checked(*F5, P({3, 1})), 3).coeffs() == P({2, 1}));
  CHECK(code_of([&] { power_map(F3, X2p1, 2); }) == ErrorCode::NonCoprimePower);
  CHECK(power_map(F3, X2p1, 2, false).coeffs() == P({1, 1}));

  // brute force through the extension: min_poly(beta^r)
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const auto F = FiniteField::of_order(q);
    for (unsigned d = 1; d <= 3; ++d) {
      if (combinat::checked_pow(q, d) > 400) continue;
      const auto E = ExtField::canonical(F, d);
      for (std::uint64_t c = 1; c < E.order(); c += 3) {
        const auto b = E.from_code(c);
        const auto f = min_poly(E, b);
        for (std::uint64_t r = 1; r < 12; ++r) {
          CHECK(power_map(F, f, r, false) == min_poly(E, E.pow(b, r)));
        }
      }
    }
  }
}

TEST_CASE("power_map laws") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned d = 1; d <= 3; ++d) {
      if (combinat::checked_pow(q, d) > 800) continue;
      const auto t = props::power_map_laws(q, d);
      INFO(t.first);
      CHECK(t.ok());
      CHECK(t.checks > 0);
    }
  }
}
