#pragma once

// Exact arithmetic in Q(zeta_m) with the Galois maps sigma_r : zeta_m -> zeta_m^r.
//
// A CycloNumber is a dense vector of rationals over the power basis
// {zeta^i : 0 <= i < phi(m)} after reduction mod Phi_m. Products, Galois
// images and inner products are accumulated in the group ring Q[Z/m] (where
// sigma_r is an index permutation) and reduced once at the end.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace galoisjd::cyclo {

using Rational = boost::rational<std::int64_t>;

class CyclotomicField {
 public:
  /// Shared, immutable context for Q(zeta_m); cached per m.
  static std::shared_ptr<const CyclotomicField> get(std::uint64_t m);

  std::uint64_t m() const noexcept { return m_; }
  std::size_t phi() const noexcept { return phi_; }
  const std::vector<std::int64_t>& phi_poly() const noexcept { return phi_poly_; }
  /// Sparse reduced form of zeta^k, k taken mod m.
  const std::vector<std::pair<std::uint32_t, std::int64_t>>& reduction(std::uint64_t k) const {
    return reduction_[k % m_];
  }

  /// Reduces a group-ring vector of length m into the power basis.
  std::vector<Rational> reduce(const std::vector<Rational>& group_ring) const;

 private:
  explicit CyclotomicField(std::uint64_t m);

  std::uint64_t m_;
  std::size_t phi_;
  std::vector<std::int64_t> phi_poly_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> reduction_;
};

class CycloNumber {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycloNumber();
  static CycloNumber zero(std::uint64_t m);
  static CycloNumber from_rational(std::uint64_t m, Rational value);
  /// zeta_m^k, reduced. Negative k allowed.
  static CycloNumber root_of_unity(std::uint64_t m, std::int64_t k);
  /// Takes ownership of power-basis coordinates; DimensionMismatch unless
  /// coeffs.size() == phi(m).
  static CycloNumber from_coeffs(std::uint64_t m, std::vector<Rational> coeffs);

  std::uint64_t m() const noexcept { return field_->m(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const CyclotomicField& field() const noexcept { return *field_; }

  bool is_zero() const;
  bool is_rational() const;
  /// True iff the value is a rational integer.
  bool is_integer() const;
  /// NotRational unless is_rational().
  Rational rational_value() const;

  CycloNumber& operator+=(const CycloNumber& other);
  CycloNumber& operator-=(const CycloNumber& other);
  CycloNumber& operator*=(const Rational& scalar);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& s) { return a *= s; }
  friend CycloNumber operator*(const Rational& s, CycloNumber a) { return a *= s; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  CycloNumber operator-() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

 private:
  CycloNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  void require_same_field(const CycloNumber& other) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;

  friend CycloNumber galois_apply(const CycloNumber& x, std::int64_t r);
  friend Rational inner_product(std::span<const CycloNumber> u, std::span<const CycloNumber> v,
                                std::span<const std::uint64_t> class_sizes, std::uint64_t group_order);
};

inline CycloNumber root_of_unity(std::uint64_t m, std::int64_t k) { return CycloNumber::root_of_unity(m, k); }

/// The automorphism zeta_m -> zeta_m^r. NonCoprime unless gcd(r, m) = 1.
CycloNumber galois_apply(const CycloNumber& x, std::int64_t r);

/// Complex conjugation, sigma_{-1}.
inline CycloNumber conj(const CycloNumber& x) { return galois_apply(x, -1); }

/// (1/|G|) sum_c |c| u_c conj(v_c). DimensionMismatch on ragged input or when
/// the class sizes do not sum to the group order; NotRational if the result
/// leaves Q.
Rational inner_product(std::span<const CycloNumber> u, std::span<const CycloNumber> v,
                       std::span<const std::uint64_t> class_sizes, std::uint64_t group_order);

std::size_t hash_value(const CycloNumber& x);

/// Hash of a whole row of values, for locating rows by content.
std::size_t hash_row(std::span<const CycloNumber> row);

}  // namespace galoisjd::cyclo

template <>
struct std::hash<galoisjd::cyclo::CycloNumber> {
  std::size_t operator()(const galoisjd::cyclo::CycloNumber& x) const { return galoisjd::cyclo::hash_value(x); }
};
