#include <fstream>
#include <map>
#include <set>

#include "doctest.h"
#include "galoisjd/error.hpp"
#include "galoisjd/galois.hpp"
#include "galoisjd/json_io.hpp"
#include "galoisjd/oracle/bfs.hpp"
#include "galoisjd/oracle/gl2.hpp"
#include "support/brute.hpp"

using namespace galoisjd;
using namespace galoisjd::oracle;
using cyclo::Rational;

namespace {

const std::vector<std::uint64_t> kQs{2, 3, 4, 5, 7, 8, 9};

std::multiset<std::uint64_t> degrees(const GL2Table& T) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : T.characters()) out.insert(c.degree);
  return out;
}

void require_clean(const Report& r) {
  INFO(r.name << " q=" << r.q << (r.ok() ? "" : " first: " + r.mismatches.front().check + " " + r.mismatches.front().detail));
  CHECK(r.ok());
  CHECK(r.checks > 0);
}

}  // namespace

TEST_CASE("table shape") {
  CHECK(degrees(*GL2Table::get(2)) == std::multiset<std::uint64_t>{1, 1, 2});
  CHECK(degrees(*GL2Table::get(3)) == std::multiset<std::uint64_t>{1, 1, 2, 2, 2, 3, 3, 4});
  const auto T5 = GL2Table::get(5);
  CHECK(T5->size() == 24);
  std::uint64_t sq = 0;
  for (auto d : degrees(*T5)) sq += d * d;
  CHECK(sq == 480);
  CHECK(GL2Table::get(4)->m() == 30);
  for (auto q : kQs) {
    const auto T = GL2Table::get(q);
    CHECK(T->size() == q * q - 1);
    CHECK(T->classes().size() == q * q - 1);
    CHECK(T->group_order() == q * (q - 1) * (q * q - 1));
  }
  CHECK_THROWS_AS(GL2Table::get(6), Error);
  CHECK_THROWS_AS(GL2Table::get(11), Error);
}

TEST_CASE("labels of named rows") {
  const auto T = GL2Table::get(3);
  for (std::size_t i = 0; i < T->size(); ++i) {
    const auto& ch = T->characters()[i];
    const auto& L = T->label(i);
    CHECK(labels::character_degree(L) == ch.degree);
    if (ch.kind == GL2Character::Kind::Linear && ch.u == 0) {
      CHECK(L.s == labels::identity_label(2, 3));
      CHECK(L.nu == std::vector<combinat::Partition>{combinat::Partition({2})});
    }
    if (ch.kind == GL2Character::Kind::SteinbergTwist && ch.u == 0) {
      CHECK(L.s == labels::identity_label(2, 3));
      CHECK(L.nu == std::vector<combinat::Partition>{combinat::Partition({1, 1})});
    }
    if (ch.kind == GL2Character::Kind::Cuspidal && std::gcd(ch.u, std::uint64_t{8}) == 1) {
      REQUIRE(L.s.entries.size() == 1);
      CHECK(L.s.entries[0].poly.degree() == 2);
      CHECK(labels::semisimple_order(L.s) == 8);
      // the order-8 cuspidal is valued in Q(sqrt(-2)), a quadratic field
      const auto v = galois::field_of_values(L);
      CHECK(v.degree == 2);
    }
  }
}

TEST_CASE("class sizes agree with a brute-force census") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto T = GL2Table::get(q);
    const brute::GL2Census census(*T);
    CHECK(census.elements.size() == T->group_order());
    CHECK(census.counts == T->class_sizes());
  }
}

TEST_CASE("Harish-Chandra induction by direct summation") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto T = GL2Table::get(q);
    const brute::GL2Census census(*T);
    for (std::uint64_t u = 0; u + 1 < q; ++u) {
      for (std::uint64_t v = u; v + 1 < q; ++v) {
        INFO("q=" << q << " u=" << u << " v=" << v);
        const auto induced = census.induced_row(*T, u, v);
        CHECK(induced == T->dl_row(Torus::Split, u, v));
        if (u == v) {
          // alpha o det + St twisted by alpha
          const auto hit = T->find_row(induced);
          CHECK_FALSE(hit.has_value());
          CHECK(T->inner(induced, induced) == Rational(2));
        } else {
          const auto hit = T->find_row(induced);
          REQUIRE(hit.has_value());
          CHECK(T->characters()[*hit].kind == GL2Character::Kind::Principal);
        }
      }
    }
  }
}

TEST_CASE("verification suites report no mismatches") {
  for (auto q : kQs) {
    require_clean(verify_table(q));
    require_clean(verify_main_theorem_all(q, Exec::Parallel));
    require_clean(verify_field_of_values(q, Exec::Parallel));
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    require_clean(verify_series(q));
    require_clean(verify_induction_commutes(q));
    require_clean(verify_inner_product_property(q));
  }
  require_clean(verify_main_theorem(5, 7));
  require_clean(verify_main_theorem(7, 5));
  require_clean(verify_main_theorem(3, 1));
  CHECK_THROWS_AS(verify_main_theorem(5, 2), Error);
}

TEST_CASE("serial and parallel paths agree") {
  for (auto q : kQs) {
    const auto T = GL2Table::get(q);
    const auto a = galois_permutation(*T, Exec::Serial);
    const auto b = galois_permutation(*T, Exec::Parallel);
    CHECK(a.units == b.units);
    CHECK(a.perm == b.perm);
  }
  const auto G = MatrixGroup::general_linear(2, 5);
  const auto elems = bfs_closure(G);
  CHECK(exponent_of(G, elems, Exec::Serial) == exponent_of(G, elems, Exec::Parallel));
  CHECK(verify_series(5, Exec::Serial).checks == verify_series(5, Exec::Parallel).checks);
}

TEST_CASE("BFS guards") {
  const auto gl2 = MatrixGroup::general_linear(2, 2);
  CHECK(bfs_closure(gl2).size() == 6);
  CHECK(bfs_exponent(gl2) == 6);
  CHECK(bfs_exponent(MatrixGroup::general_linear(2, 3)) == 24);

  try {
    bfs_closure(MatrixGroup::general_linear(3, 3), 1000);
    FAIL("expected SizeGuard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeGuard);
  }

  // [[1,1],[0,1]] generates a group of order 3, not 6
  const auto j = nlohmann::json::parse(R"({"dim":2,"p":3,"gens":[[[1,1],[0,1]]],"order":6})");
  auto G = json_io::matrix_group_from_json(j);
  try {
    bfs_closure(G);
    FAIL("expected OrderMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }
  G.expected_order.reset();
  CHECK(bfs_closure(G).size() == 3);
  CHECK(bfs_exponent(G) == 3);

  const auto singular = nlohmann::json::parse(R"({"dim":2,"p":3,"gens":[[[1,1],[1,1]]]})");
  CHECK_THROWS_AS(bfs_closure(json_io::matrix_group_from_json(singular)), Error);
  CHECK_THROWS_AS(json_io::matrix_group_from_json(nlohmann::json::parse(R"({"dim":2,"p":3,"gens":[[[1,1]]]})")),
                  Error);
}

TEST_CASE("type B and C groups from the built-in generators") {
  const auto sp4 = MatrixGroup::symplectic(2, 3);
  const auto elems = bfs_closure(sp4);
  CHECK(elems.size() == 51840);
  CHECK(exponent_of(sp4, elems, Exec::Parallel) == 360);
  const auto sl2 = bfs_exponent(MatrixGroup::symplectic(1, 3));
  const auto pgl2 = bfs_exponent(MatrixGroup::orthogonal_odd(1, 3));
  CHECK(sl2 == pgl2);
}
