#include "galoisjd/expo.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "galoisjd/error.hpp"

namespace galoisjd::expo {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::Sp: return "sp";
    case Family::SOodd: return "so";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "gl") return Family::GL;
  if (lower == "sp") return Family::Sp;
  if (lower == "so" || lower == "soodd") return Family::SOodd;
  throw Error(ErrorCode::UnsupportedFamily, "unknown group family '" + std::string(name) + "'");
}

GroupSpec GroupSpec::make(Family family, unsigned rank, std::uint64_t q) {
  if (rank == 0) throw Error(ErrorCode::DegenerateSize, "rank must be at least 1");
  auto [p, k] = combinat::prime_power(q);
  if (p == 0) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  if (family == Family::SOodd && p == 2) {
    throw Error(ErrorCode::EvenCharSOodd, "SO_{2m+1}(q) requires odd q");
  }
  return GroupSpec{family, rank, q};
}

unsigned GroupSpec::dimension() const {
  switch (family) {
    case Family::GL: return rank;
    case Family::Sp: return 2 * rank;
    case Family::SOodd: return 2 * rank + 1;
  }
  return 0;
}

BigInt least_p_power_at_least(std::uint64_t p, std::uint64_t bound) {
  BigInt pk = 1;
  while (pk < bound) pk *= p;
  return pk;
}

BigInt unipotent_exponent(const GroupSpec& g) {
  const auto p = combinat::prime_power(g.q).first;
  if (g.family == Family::GL) return least_p_power_at_least(p, g.rank);
  // Smallest p-power strictly larger than 2m - 1.
  return least_p_power_at_least(p, 2 * std::uint64_t{g.rank});
}

BigInt semisimple_exponent(const GroupSpec& g) {
  std::vector<BigInt> terms;
  BigInt qd = 1;
  for (unsigned d = 1; d <= g.rank; ++d) {
    qd *= g.q;
    terms.push_back(qd - 1);
    if (g.family != Family::GL) terms.push_back(qd + 1);
  }
  return combinat::lcm_all(terms);
}

BigInt exponent_formula(const GroupSpec& g) { return unipotent_exponent(g) * semisimple_exponent(g); }

BigInt group_order(const GroupSpec& g) {
  const BigInt Q(g.q);
  BigInt order = 1;
  if (g.family == Family::GL) {
    order = boost::multiprecision::pow(Q, g.rank * (g.rank - 1) / 2);
    BigInt qi = 1;
    for (unsigned i = 1; i <= g.rank; ++i) {
      qi *= Q;
      order *= qi - 1;
    }
    return order;
  }
  // |Sp_{2m}(q)| = |SO_{2m+1}(q)| = q^{m^2} prod_{i<=m} (q^{2i} - 1)
  order = boost::multiprecision::pow(Q, g.rank * g.rank);
  for (unsigned i = 1; i <= g.rank; ++i) order *= boost::multiprecision::pow(Q, 2 * i) - 1;
  return order;
}

GroupSpec dual_of(const GroupSpec& g) {
  switch (g.family) {
    case Family::GL: return g;
    case Family::Sp: return GroupSpec::make(Family::SOodd, g.rank, g.q);
    case Family::SOodd: return GroupSpec::make(Family::Sp, g.rank, g.q);
  }
  return g;
}

DualityReport check_duality_equality(unsigned m, std::uint64_t q) {
  if (m < 1 || m > 6) throw Error(ErrorCode::DegenerateSize, "rank must lie in [1, 6]");
  const auto sp = GroupSpec::make(Family::Sp, m, q);
  const auto so = GroupSpec::make(Family::SOodd, m, q);
  DualityReport report;
  report.m = m;
  report.q = q;
  report.sp_exponent = exponent_formula(sp);
  report.so_exponent = exponent_formula(so);
  report.equal = report.sp_exponent == report.so_exponent;
  return report;
}

}  // namespace galoisjd::expo
