// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "galoisjd/error.hpp"
#include "galoisjd/expo.hpp"
#include "galoisjd/labels.hpp"
#include "galoisjd/oracle/bfs.hpp"
#include "galoisjd/oracle/gl2.hpp"
#include "support/properties.hpp"

using namespace galoisjd;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::uint64_t> kGL2 = {2, 3, 4, 5, 7, 8, 9};
const std::vector<std::uint64_t> kGL2Small = {2, 3, 4, 5, 7};

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!out.ok) ++failures;
  std::printf("[%s] %d %s (%.2fs) %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs, out.detail.c_str());
  std::fflush(stdout);
}

Outcome from_reports(const std::vector<oracle::Report>& reports) {
  std::uint64_t checks = 0;
  std::uint64_t bad = 0;
  std::string first;
  for (const auto& r : reports) {
    checks += r.checks;
    if (!r.ok() && first.empty()) first = r.name + " q=" + std::to_string(r.q) + ": " + r.mismatches.front().detail;
    bad += r.mismatches.size();
  }
  std::ostringstream os;
  os << checks << " checks, " << bad << " mismatches";
  if (!first.empty()) os << "; first " << first;
  return {bad == 0 && checks > 0, os.str()};
}

// Coefficient of x^n in prod_i (1 - x^i) / (1 - q x^i).
BigInt class_number(int n, std::uint64_t q) {
  std::vector<BigInt> series(n + 1, 0);
  series[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = n; k >= i; --k) series[k] -= series[k - i];
    for (int k = i; k <= n; ++k) series[k] += BigInt(q) * series[k - i];
  }
  return series[n];
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

int main() {
  criterion(1, "parametrization: sum of squared degrees and class count", [] {
    const auto t0 = Clock::now();
    const std::vector<std::pair<int, std::uint64_t>> cases{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9},
                                                          {3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 2}, {4, 3}};
    Outcome out;
    for (auto [n, q] : cases) {
      const auto chars = labels::enumerate_characters(n, q);
      const bool squares = labels::degree_square_sum(chars, Exec::Parallel) == labels::gl_order(n, q);
      const bool classes = BigInt(chars.size()) == class_number(n, q);
      if (!squares || !classes) {
        out.ok = false;
        out.detail += "GL_" + std::to_string(n) + "(" + std::to_string(q) + ") ";
      }
    }
    const double secs = seconds_since(t0);
    if (secs >= 10) out.ok = false;
    out.detail += std::to_string(cases.size()) + " groups, " + std::to_string(secs) + "s (limit 10s)";
    return out;
  });

  criterion(2, "sigma_r on labels matches sigma_r on GL2(q) rows, every coprime r", [] {
    const auto t0 = Clock::now();
    std::vector<oracle::Report> rs;
    for (auto q : kGL2) rs.push_back(oracle::verify_main_theorem_all(q, Exec::Parallel));
    auto out = from_reports(rs);
    const double secs = seconds_since(t0);
    if (secs >= 60) out.ok = false;
    out.detail += ", " + std::to_string(secs) + "s (limit 60s)";
    return out;
  });

  criterion(3, "field of values matches label stabilizers", [] {
    std::vector<oracle::Report> rs;
    for (auto q : kGL2) rs.push_back(oracle::verify_field_of_values(q, Exec::Parallel));
    return from_reports(rs);
  });

  criterion(4, "Galois action maps series E(s) onto E(s^r)", [] {
    std::vector<oracle::Report> rs;
    for (auto q : kGL2Small) rs.push_back(oracle::verify_series(q, Exec::Parallel));
    return from_reports(rs);
  });

  criterion(5, "Galois action commutes with Deligne-Lusztig induction", [] {
    std::vector<oracle::Report> rs;
    for (auto q : kGL2Small) rs.push_back(oracle::verify_induction_commutes(q));
    return from_reports(rs);
  });

  criterion(6, "signed multiplicities <chi, R_T(s)>", [] {
    std::vector<oracle::Report> rs;
    for (auto q : kGL2Small) rs.push_back(oracle::verify_inner_product_property(q));
    return from_reports(rs);
  });

  criterion(7, "exponent duality and BFS cross-checks", [] {
    const auto t0 = Clock::now();
    Outcome out;
    std::ostringstream os;
    int formula_bad = 0;
    for (unsigned m = 1; m <= 6; ++m) {
      for (std::uint64_t q : {3, 5, 7, 9}) formula_bad += !expo::check_duality_equality(m, q).equal;
    }
    os << "formula pairs unequal: " << formula_bad << ";";
    if (formula_bad) out.ok = false;

    using oracle::MatrixGroup;
    auto measure = [&](const MatrixGroup& G) {
      const auto elems = oracle::bfs_closure(G);
      return std::pair<std::uint64_t, std::uint64_t>{elems.size(), oracle::exponent_of(G, elems, Exec::Parallel)};
    };
    auto expect = [&](const std::string& name, std::pair<std::uint64_t, std::uint64_t> got, std::uint64_t order,
                      std::uint64_t exponent) {
      const bool ok = got.first == order && got.second == exponent;
      os << " " << name << " order " << got.first << "/" << order << " exp " << got.second << "/" << exponent
         << (ok ? "" : " MISMATCH") << ";";
      if (!ok) out.ok = false;
    };
    expect("GL2(2)", measure(MatrixGroup::general_linear(2, 2)), 6, 6);
    expect("GL2(3)", measure(MatrixGroup::general_linear(2, 3)), 48, 24);
    const auto sl2 = measure(MatrixGroup::symplectic(1, 3));
    const auto pgl2 = measure(MatrixGroup::orthogonal_odd(1, 3));
    os << " SL2(3) exp " << sl2.second << " vs PGL2(3) exp " << pgl2.second << ";";
    if (sl2.second != pgl2.second) out.ok = false;
    expect("Sp4(3)", measure(MatrixGroup::symplectic(2, 3)), 51840, 360);
    // Stated target for SO5(3): order 25920 and exponent 360.
    expect("SO5(3)", measure(MatrixGroup::orthogonal_odd(2, 3)), 25920, 360);
    const auto omega = measure(MatrixGroup::omega_odd(2, 3));
    os << " [diagnostic: Omega5(3) order " << omega.first << " exp " << omega.second << "]";
    const double secs = seconds_since(t0);
    if (secs >= 300) out.ok = false;
    os << " " << secs << "s (limit 300s)";
    out.detail = os.str();
    return out;
  });

  criterion(8, "algebraic property suites", [] {
    props::Tally t;
    std::mt19937_64 rng(20240601);
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{
             {1, 5}, {1, 9}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}) {
      t.merge(props::action_laws(n, q, rng, 80));
      t.merge(props::stabilizer_subgroups(n, q));
    }
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      for (unsigned d = 1; d <= 3; ++d) {
        if (combinat::checked_pow(q, d) <= 800) t.merge(props::power_map_laws(q, d));
      }
    }
    for (std::uint64_t m = 1; m <= 64; ++m) t.merge(props::cyclo_automorphisms(m, rng, 10));
    std::vector<oracle::Report> tables;
    for (auto q : kGL2) tables.push_back(oracle::verify_table(q));
    auto out = from_reports(tables);
    out.ok = out.ok && t.ok();
    out.detail = std::to_string(t.checks) + " property checks, " + std::to_string(t.failures) + " failures" +
                 (t.ok() ? "" : " (first: " + t.first + ")") + "; tables: " + out.detail;
    return out;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
