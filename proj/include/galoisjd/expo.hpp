#pragma once

// Group exponents for GL_n(q), Sp_{2m}(q) and SO_{2m+1}(q).
//
// The exponent of a finite reductive group is the maximal order of a
// unipotent element times the lcm of semisimple element orders. The
// unipotent part is attained by a regular unipotent element: the least
// p-power >= n for GL_n (one Jordan block) and the least p-power > 2m - 1 for
// types B_m and C_m. Semisimple orders come from the maximal tori, which are
// products of cyclic groups of orders q^d - 1 (GL) or q^d +- 1 (B/C).

#include <cstdint>
#include <string>
#include <string_view>

#include "galoisjd/combinat.hpp"

namespace galoisjd::expo {

enum class Family { GL, Sp, SOodd };

std::string_view family_name(Family f);
/// Accepts gl, sp, so, soodd (case-insensitive). UnsupportedFamily otherwise.
Family parse_family(std::string_view name);

struct GroupSpec {
  Family family = Family::GL;
  unsigned rank = 1;  // n for GL_n, m for Sp_{2m} / SO_{2m+1}
  std::uint64_t q = 2;

  /// NotPrime unless q is a prime power; DegenerateSize for rank 0;
  /// EvenCharSOodd for SOodd with q even.
  static GroupSpec make(Family family, unsigned rank, std::uint64_t q);
  /// Matrix dimension of the natural representation.
  unsigned dimension() const;
};

/// Least power of p that is >= bound.
BigInt least_p_power_at_least(std::uint64_t p, std::uint64_t bound);

BigInt unipotent_exponent(const GroupSpec& g);
BigInt semisimple_exponent(const GroupSpec& g);
BigInt exponent_formula(const GroupSpec& g);
BigInt group_order(const GroupSpec& g);

/// The dual group: GL_n is self-dual, Sp_{2m} and SO_{2m+1} are swapped.
GroupSpec dual_of(const GroupSpec& g);

struct DualityReport {
  unsigned m = 0;
  std::uint64_t q = 0;
  BigInt sp_exponent;
  BigInt so_exponent;
  bool equal = false;
};

/// Compares the Sp_{2m}(q) and SO_{2m+1}(q) exponent formulas. Requires q odd
/// (EvenCharSOodd) and 1 <= m <= 6 (DegenerateSize).
DualityReport check_duality_equality(unsigned m, std::uint64_t q);

}  // namespace galoisjd::expo
