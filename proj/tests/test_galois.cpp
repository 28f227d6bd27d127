#include <fstream>
#include <random>

#include "doctest.h"
#include "galoisjd/error.hpp"
#include "galoisjd/galois.hpp"
#include "json.hpp"
#include "support/properties.hpp"

using namespace galoisjd;
using namespace galoisjd::galois;
using labels::make_character;
using labels::make_semisimple;

namespace {

labels::IrreduciblePoly poly(std::uint64_t q, std::initializer_list<std::uint32_t> codes) {
  ffield::Poly f;
  for (auto c : codes) f.push_back(ffield::FqElement{c});
  return labels::IrreduciblePoly::checked(*ffield::FiniteField::of_order(q), f);
}

labels::CharacterLabel regular(int n, std::uint64_t q, std::vector<labels::IrreduciblePoly> fs) {
  std::vector<labels::SemisimpleEntry> entries;
  std::vector<combinat::Partition> nu;
  for (auto& f : fs) {
    entries.push_back({f, 1});
    nu.push_back(combinat::Partition({1}));
  }
  return make_character(n, static_cast<std::uint32_t>(q), entries, nu);
}

}  // namespace

TEST_CASE("ambient exponent") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) CHECK(ambient_exponent(1, q) == q - 1);
  CHECK(ambient_exponent(2, 2) == 6);
  CHECK(ambient_exponent(2, 3) == 24);
  CHECK(ambient_exponent(2, 4) == 30);
  CHECK(units_mod(12) == std::vector<std::uint64_t>{1, 5, 7, 11});
  CHECK(is_subgroup({1, 11}, 12));
  CHECK_FALSE(is_subgroup({1, 5, 7}, 12));
  CHECK_FALSE(is_subgroup({5}, 12));
  CHECK(GaloisElement::make(12, -1).r == 11);
  CHECK(GaloisElement::make(12, 5).compose(GaloisElement::make(12, 7)).r == 11);
  CHECK_THROWS_AS(GaloisElement::make(12, 4), Error);
}

TEST_CASE("act_on_label examples") {
  const auto L = regular(1, 5, {poly(5, {3, 1})});  // s = 2
  CHECK(act_on_label(L, 1) == L);
  CHECK(act_on_label(L, 3) == regular(1, 5, {poly(5, {2, 1})}));
  CHECK_FALSE(is_rational_character(L));

  const auto pair = regular(2, 5, {poly(5, {3, 1}), poly(5, {2, 1})});  // {2, 3}
  CHECK(act_on_label(pair, 7) == pair);
  CHECK(is_rational_character(pair));
  CHECK_THROWS_AS(act_on_label(pair, 2), Error);
  CHECK_THROWS_AS(act_on_label(pair, 0), Error);

  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& U : labels::lusztig_series(labels::identity_label(n, static_cast<std::uint32_t>(q)))) {
        CHECK(is_rational_character(U));
        const auto v = field_of_values(U);
        CHECK(v.degree == 1);
        CHECK(v.stabilizer == units_mod(ambient_exponent(n, q)));
      }
    }
  }
}

TEST_CASE("semisimple action is the power map on each factor") {
  for (std::uint64_t q : {3, 4, 5}) {
    const auto F = ffield::FiniteField::of_order(q);
    const auto m = ambient_exponent(2, q);
    for (const auto& s : labels::enumerate_semisimple(2, q)) {
      for (auto r : units_mod(m)) {
        const auto img = act_on_semisimple(s, static_cast<std::int64_t>(r));
        std::vector<labels::SemisimpleEntry> want;
        for (const auto& e : s.entries) want.push_back({ffield::power_map(F, e.poly, r), e.mult});
        CHECK(img == make_semisimple(2, static_cast<std::uint32_t>(q), want));
      }
    }
  }
}

TEST_CASE("orbits") {
  const auto o1 = galois_orbits(1, 2);
  REQUIRE(o1.size() == 1);
  CHECK(o1[0].size() == 1);
  const auto o2 = galois_orbits(2, 2);
  REQUIRE(o2.size() == 3);
  for (const auto& o : o2) CHECK(o.size() == 1);

  for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {2, 5}, {2, 9}, {3, 3}, {3, 4}, {4, 3}}) {
    const auto serial = galois_orbits(n, q, Exec::Serial);
    const auto parallel = galois_orbits(n, q, Exec::Parallel);
    CHECK(serial == parallel);
    std::size_t total = 0;
    const auto action = Action::get(n, q);
    for (const auto& o : serial) {
      total += o.size();
      CHECK(std::is_sorted(o.begin(), o.end()));
      for (const auto& L : o) {
        CHECK(action->orbit_representative(L) == o.front());
        CHECK(field_of_values(L).degree == o.size());
      }
    }
    CHECK(total == labels::enumerate_characters(n, q).size());
  }
}

TEST_CASE("orbit sizes match the frozen fixture") {
  std::ifstream in(GALOISJD_FIXTURE_DIR "/gl2_orbits.json");
  REQUIRE(in.good());
  const auto fixture = nlohmann::json::parse(in);
  for (const auto& [key, sizes] : fixture.at("sizes").items()) {
    const auto q = std::stoull(key);
    std::vector<std::size_t> got;
    for (const auto& o : galois_orbits(2, q)) got.push_back(o.size());
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == sizes.get<std::vector<std::size_t>>(), "q=" << q);
  }
}

TEST_CASE("action laws under random sampling") {
  std::mt19937_64 rng(99);
  for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{
           {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}) {
    const auto t = props::action_laws(n, q, rng, 60);
    INFO(t.first);
    CHECK(t.ok());
  }
}

TEST_CASE("stabilizers are subgroups of the right index") {
  for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {2, 5}, {2, 8}, {3, 3}, {4, 2}}) {
    const auto t = props::stabilizer_subgroups(n, q);
    INFO(t.first);
    CHECK(t.ok());
  }
}
