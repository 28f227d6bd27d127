#pragma once

// Exact arithmetic in F_q = F_p[X]/(g) and its extensions F_{q^d}, plus the
// irreducible-polynomial operations that drive the semisimple side of the
// character parametrization.
//
// Elements carry an integer code. For F_q the code of c_0 + c_1 X + ... is
// sum c_i p^{k-1-i}, i.e. the coefficient vector read from the constant term
// as the most significant digit. Extension elements are coded the same way
// with base q. Comparing codes is therefore the lexicographic order on
// coefficient vectors used for every canonical choice in this library.

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace galoisjd::ffield {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

struct FqElement {
  std::uint32_t code = 0;
  auto operator<=>(const FqElement&) const = default;
};

/// Polynomial over F_q, constant term first. Zero is the empty vector.
using Poly = std::vector<FqElement>;

class FiniteField;

/// Monic irreducible polynomial over F_q of degree >= 1.
class IrreduciblePoly {
 public:
  IrreduciblePoly() = default;

  /// Validates monic + irreducible; throws NotIrreducible / DegenerateSize.
  static IrreduciblePoly checked(const FiniteField& field, Poly coeffs);
  /// Caller guarantees irreducibility (results of min_poly, enumeration).
  static IrreduciblePoly trusted(Poly coeffs);

  const Poly& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  FqElement constant_term() const noexcept { return coeffs_.front(); }

  bool operator==(const IrreduciblePoly&) const = default;
  /// Canonical order: degree, then coefficient codes from the constant term up.
  std::strong_ordering operator<=>(const IrreduciblePoly& other) const;

 private:
  explicit IrreduciblePoly(Poly coeffs) : coeffs_(std::move(coeffs)) {}
  Poly coeffs_;
};

/// F_q = F_p[X]/(modulus) with the canonical modulus (lexicographically least
/// monic irreducible of degree k). Immutable; obtained through build().
class FiniteField {
 public:
  /// NotPrime unless p is prime; DegenerateSize if k == 0 or p^k > cap.
  static std::shared_ptr<const FiniteField> build(std::uint64_t p, unsigned k,
                                                  std::uint64_t cap = kDefaultCap);
  /// Same, from the field order q = p^k (NotPrime if q is not a prime power).
  static std::shared_ptr<const FiniteField> of_order(std::uint64_t q, std::uint64_t cap = kDefaultCap);

  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Modulus over Z/p, constant term first, monic, length k + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FqElement zero() const noexcept { return {0}; }
  FqElement one() const noexcept { return one_; }
  /// Image of an integer under Z -> F_p -> F_q.
  FqElement from_int(std::int64_t n) const;
  FqElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FqElement a) const;
  /// Throws DegenerateSize for codes >= q.
  FqElement from_code(std::uint64_t code) const;

  FqElement add(FqElement a, FqElement b) const;
  FqElement sub(FqElement a, FqElement b) const;
  FqElement neg(FqElement a) const;
  FqElement mul(FqElement a, FqElement b) const;
  FqElement inv(FqElement a) const;  // ZeroElement on zero
  FqElement pow(FqElement a, std::uint64_t e) const;

  /// Least element (by code) of multiplicative order q - 1.
  FqElement generator() const noexcept { return exp_[1 % exp_.size()]; }
  /// Discrete log against generator(); ZeroElement on zero.
  std::uint32_t log(FqElement a) const;
  FqElement exp(std::uint64_t e) const { return exp_[e % exp_.size()]; }

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^{k-1-i}
  FqElement one_;
  std::vector<FqElement> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_table_;  // q*q when q is small
};

// Polynomial arithmetic over F_q.

void trim(Poly& f);
Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b);
/// Remainder and quotient; the divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly poly_gcd(const FiniteField& F, Poly a, Poly b);
Poly poly_monic(const FiniteField& F, const Poly& a);
Poly poly_powmod(const FiniteField& F, const Poly& base, std::uint64_t e, const Poly& modulus);

/// Ben-Or test: gcd(X^{q^i} - X, f) = 1 for all i <= deg/2. DegenerateSize on
/// the zero polynomial; constants are not irreducible.
bool is_irreducible(const FiniteField& F, const Poly& f);

/// Necklace count N_q(d) = (1/d) sum_{e | d} mu(e) q^{d/e}.
std::uint64_t count_irreducibles(std::uint64_t q, unsigned d, bool nonzero_constant = false);

/// All monic irreducibles of degree d in canonical order. With
/// `nonzero_constant`, X is dropped. DegenerateSize if d == 0 or q^d > cap.
std::vector<IrreduciblePoly> enumerate_irreducibles(const std::shared_ptr<const FiniteField>& F, unsigned d,
                                                    bool nonzero_constant = false,
                                                    std::uint64_t cap = kDefaultCap);

struct ExtElement {
  std::vector<FqElement> coeffs;  // over F_q, length d
  bool operator==(const ExtElement&) const = default;
};

/// F_{q^d} = F_q[X]/(modulus) for an irreducible modulus over F_q.
class ExtField {
 public:
  /// NotIrreducible unless the modulus is irreducible over the base.
  ExtField(std::shared_ptr<const FiniteField> base, IrreduciblePoly modulus);

  /// Skips the irreducibility check; for moduli already known irreducible.
  static ExtField trusted(std::shared_ptr<const FiniteField> base, IrreduciblePoly modulus);

  /// Uses the canonical (lexicographically least) modulus of degree d.
  static ExtField canonical(std::shared_ptr<const FiniteField> base, unsigned d,
                            std::uint64_t cap = kDefaultCap);

  const FiniteField& base() const noexcept { return *base_; }
  const std::shared_ptr<const FiniteField>& base_ptr() const noexcept { return base_; }
  unsigned degree() const noexcept { return d_; }
  const IrreduciblePoly& modulus() const noexcept { return modulus_; }
  /// q^d; DegenerateSize on 64-bit overflow.
  std::uint64_t order() const { return order_; }

  ExtElement zero() const;
  ExtElement one() const;
  /// The class of X.
  ExtElement x() const;
  ExtElement embed(FqElement a) const;
  std::uint64_t code(const ExtElement& a) const;
  ExtElement from_code(std::uint64_t code) const;

  bool is_zero(const ExtElement& a) const;
  /// True iff a lies in the base field F_q.
  bool in_base(const ExtElement& a) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement pow(const ExtElement& a, std::uint64_t e) const;
  /// a -> a^q, computed as an F_q-linear map.
  ExtElement frobenius(const ExtElement& a) const;

  /// Exact multiplicative order; ZeroElement on zero.
  std::uint64_t element_order(const ExtElement& a) const;
  /// prod_{i < t} (X - a^{q^i}) over the Frobenius orbit of a.
  IrreduciblePoly min_poly(const ExtElement& a) const;
  /// Least element by code of order q^d - 1.
  ExtElement fixed_generator() const;

 private:
  std::shared_ptr<const FiniteField> base_;
  IrreduciblePoly modulus_;
  unsigned d_ = 0;
  std::uint64_t order_ = 0;
  std::vector<ExtElement> frob_basis_;  // images of X^i under Frobenius

  struct TrustedTag {};
  ExtField(std::shared_ptr<const FiniteField> base, IrreduciblePoly modulus, TrustedTag);
  ExtElement from_poly(const Poly& f) const;
  std::vector<ExtElement> orbit(const ExtElement& a) const;
};

/// Free-function form of ExtField::min_poly.
IrreduciblePoly min_poly(const ExtField& E, const ExtElement& beta);
std::uint64_t element_order(const ExtField& E, const ExtElement& beta);
/// Canonical generator of F_{q^d}^x.
ExtElement fixed_generator(const ExtField& E);

/// Full discrete-log lookup table for E^x against a chosen generator.
class DiscreteLog {
 public:
  DiscreteLog(const ExtField& E, const ExtElement& generator);
  std::uint64_t log(const ExtElement& a) const;  // ZeroElement on zero
  const ExtElement& exp(std::uint64_t e) const { return powers_[e % powers_.size()]; }
  std::uint64_t group_order() const noexcept { return powers_.size(); }

 private:
  ExtField field_;
  std::vector<ExtElement> powers_;
  std::vector<std::uint64_t> log_;
};

/// min_poly(alpha^r) for a root alpha of f, computed in F_q[X]/(f). In strict
/// mode gcd(r, ord(alpha)) > 1 raises NonCoprimePower. r must be >= 1.
IrreduciblePoly power_map(const std::shared_ptr<const FiniteField>& F, const IrreduciblePoly& f,
                          std::uint64_t r, bool strict = true);

/// Multiplicative order of a root of f (ZeroElement for f = X).
std::uint64_t root_order(const std::shared_ptr<const FiniteField>& F, const IrreduciblePoly& f);

}  // namespace galoisjd::ffield
