#include "galoisjd/ffield.hpp"

#include <algorithm>
#include <optional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "galoisjd/combinat.hpp"
#include "galoisjd/error.hpp"

namespace galoisjd::ffield {

using combinat::checked_pow;

// ---------------------------------------------------------------------------
// IrreduciblePoly

IrreduciblePoly IrreduciblePoly::checked(const FiniteField& field, Poly coeffs) {
  trim(coeffs);
  if (coeffs.empty()) throw Error(ErrorCode::DegenerateSize, "zero polynomial");
  if (coeffs.size() < 2) throw Error(ErrorCode::DegenerateSize, "constant polynomial has degree 0");
  for (auto c : coeffs) {
    if (c.code >= field.q()) throw Error(ErrorCode::InvalidLabel, "coefficient code out of range");
  }
  if (coeffs.back() != field.one()) throw Error(ErrorCode::NotIrreducible, "polynomial is not monic");
  if (!is_irreducible(field, coeffs)) throw Error(ErrorCode::NotIrreducible, "polynomial is reducible");
  return IrreduciblePoly(std::move(coeffs));
}

IrreduciblePoly IrreduciblePoly::trusted(Poly coeffs) { return IrreduciblePoly(std::move(coeffs)); }

std::strong_ordering IrreduciblePoly::operator<=>(const IrreduciblePoly& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(coeffs_.begin(), coeffs_.end(), other.coeffs_.begin(),
                                                other.coeffs_.end());
}

// ---------------------------------------------------------------------------
// FiniteField

namespace {

std::mutex g_field_mutex;
std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FiniteField>> g_fields;

// Residue-vector multiplication mod a monic modulus over Z/p; only used while
// building the log tables.
std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t t = 2 * k - 1; t-- > k;) {
    const std::uint64_t c = prod[t];
    if (c == 0) continue;
    prod[t] = 0;
    for (std::size_t i = 0; i < k; ++i) prod[t - k + i] = (prod[t - k + i] + (p - c) * modulus[i]) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::build(std::uint64_t p, unsigned k, std::uint64_t cap) {
  if (!combinat::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::DegenerateSize, "field degree must be at least 1");
  const std::uint64_t q = checked_pow(p, k);
  if (q > cap || q >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::DegenerateSize, "field order " + std::to_string(q) + " exceeds the size cap");
  }
  {
    std::lock_guard lock(g_field_mutex);
    if (auto it = g_fields.find({p, k}); it != g_fields.end()) return it->second;
  }

  std::vector<std::uint32_t> modulus;
  if (k == 1) {
    modulus = {0, 1};
  } else {
    auto prime = build(p, 1, cap);
    // Monic candidates in lexicographic order, constant term most significant.
    for (std::uint64_t t = 0; t < q && modulus.empty(); ++t) {
      Poly cand(k + 1);
      std::uint64_t rest = t;
      for (unsigned i = k; i-- > 0;) {
        cand[i].code = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      cand[k] = prime->one();
      if (is_irreducible(*prime, cand)) {
        for (auto c : cand) modulus.push_back(c.code);
      }
    }
  }

  auto field = std::shared_ptr<FiniteField>(new FiniteField());
  field->p_ = static_cast<std::uint32_t>(p);
  field->k_ = k;
  field->q_ = static_cast<std::uint32_t>(q);
  field->modulus_ = modulus;
  field->place_.resize(k);
  for (unsigned i = 0; i < k; ++i) field->place_[i] = static_cast<std::uint32_t>(checked_pow(p, k - 1 - i));
  field->one_ = FqElement{field->place_[0]};

  if (q <= 256) {
    field->add_table_.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < k; ++i) {
          const std::uint32_t pl = field->place_[i];
          code += ((a / pl % field->p_ + b / pl % field->p_) % field->p_) * pl;
        }
        field->add_table_[a * q + b] = code;
      }
    }
  }

  const FiniteField& F = *field;
  const std::uint64_t n = q - 1;
  const auto factors = combinat::factorize(n);
  auto slow_pow = [&](std::vector<std::uint32_t> base, std::uint64_t e) {
    std::vector<std::uint32_t> acc(k, 0);
    acc[0] = 1;
    while (e > 0) {
      if (e & 1) acc = slow_mul(acc, base, modulus, field->p_);
      base = slow_mul(base, base, modulus, field->p_);
      e >>= 1;
    }
    return acc;
  };
  std::vector<std::uint32_t> one_vec(k, 0);
  one_vec[0] = 1;
  std::vector<std::uint32_t> gen;
  for (std::uint32_t code = 1; code < q; ++code) {
    auto cand = F.coeffs(FqElement{code});
    bool primitive = true;
    for (auto [ell, e] : factors) {
      if (slow_pow(cand, n / ell) == one_vec) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  field->exp_.resize(n);
  field->log_.assign(q, 0);
  std::vector<std::uint32_t> cur = one_vec;
  for (std::uint64_t i = 0; i < n; ++i) {
    const FqElement e = F.from_coeffs(cur);
    field->exp_[i] = e;
    field->log_[e.code] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, gen, modulus, field->p_);
  }

  std::lock_guard lock(g_field_mutex);
  auto [it, inserted] = g_fields.emplace(std::make_pair(p, k), field);
  return it->second;
}

std::shared_ptr<const FiniteField> FiniteField::of_order(std::uint64_t q, std::uint64_t cap) {
  auto [p, k] = combinat::prime_power(q);
  if (p == 0) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return build(p, static_cast<unsigned>(k), cap);
}

FqElement FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FqElement{static_cast<std::uint32_t>(r) * place_[0]};
}

FqElement FiniteField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k_) throw Error(ErrorCode::DimensionMismatch, "too many coefficients for F_q");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) code += (coeffs[i] % p_) * place_[i];
  return FqElement{code};
}

std::vector<std::uint32_t> FiniteField::coeffs(FqElement a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) c[i] = a.code / place_[i] % p_;
  return c;
}

FqElement FiniteField::from_code(std::uint64_t code) const {
  if (code >= q_) throw Error(ErrorCode::DegenerateSize, "element code out of range");
  return FqElement{static_cast<std::uint32_t>(code)};
}

FqElement FiniteField::add(FqElement a, FqElement b) const {
  if (!add_table_.empty()) return FqElement{add_table_[a.code * q_ + b.code]};
  if (p_ == 2) return FqElement{a.code ^ b.code};
  std::uint32_t code = 0;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t pl = place_[i];
    code += ((a.code / pl % p_ + b.code / pl % p_) % p_) * pl;
  }
  return FqElement{code};
}

FqElement FiniteField::neg(FqElement a) const {
  std::uint32_t code = 0;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t pl = place_[i];
    code += ((p_ - a.code / pl % p_) % p_) * pl;
  }
  return FqElement{code};
}

FqElement FiniteField::sub(FqElement a, FqElement b) const { return add(a, neg(b)); }

FqElement FiniteField::mul(FqElement a, FqElement b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t n = exp_.size();
  return exp_[(std::uint64_t{log_[a.code]} + log_[b.code]) % n];
}

FqElement FiniteField::inv(FqElement a) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  const std::uint64_t n = exp_.size();
  return exp_[(n - log_[a.code]) % n];
}

FqElement FiniteField::pow(FqElement a, std::uint64_t e) const {
  if (e == 0) return one_;
  if (a.code == 0) return zero();
  const std::uint64_t n = exp_.size();
  return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a.code]) * e) % n)];
}

std::uint32_t FiniteField::log(FqElement a) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
  return log_[a.code];
}

// ---------------------------------------------------------------------------
// Polynomials

void trim(Poly& f) {
  while (!f.empty() && f.back().code == 0) f.pop_back();
}

Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : F.zero(), i < b.size() ? b[i] : F.zero());
  }
  trim(r);
  return r;
}

Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : F.zero(), i < b.size() ? b[i] : F.zero());
  }
  trim(r);
  return r;
}

Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly div = b;
  trim(div);
  if (div.empty()) throw Error(ErrorCode::DegenerateSize, "division by the zero polynomial");
  Poly rem = a;
  trim(rem);
  if (rem.size() < div.size()) return {Poly{}, rem};
  const FqElement lead_inv = F.inv(div.back());
  Poly quot(rem.size() - div.size() + 1);
  for (std::size_t t = rem.size(); t-- >= div.size();) {
    const FqElement c = F.mul(rem[t], lead_inv);
    quot[t - (div.size() - 1)] = c;
    if (c.code == 0) continue;
    const std::size_t shift = t - (div.size() - 1);
    for (std::size_t i = 0; i < div.size(); ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(c, div[i]));
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_monic(const FiniteField& F, const Poly& a) {
  Poly r = a;
  trim(r);
  if (r.empty()) return r;
  const FqElement inv = F.inv(r.back());
  for (auto& c : r) c = F.mul(c, inv);
  return r;
}

Poly poly_gcd(const FiniteField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_powmod(const FiniteField& F, const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly acc{F.one()};
  acc = poly_mod(F, acc, modulus);
  Poly b = poly_mod(F, base, modulus);
  while (e > 0) {
    if (e & 1) acc = poly_mod(F, poly_mul(F, acc, b), modulus);
    e >>= 1;
    if (e > 0) b = poly_mod(F, poly_mul(F, b, b), modulus);
  }
  return acc;
}

bool is_irreducible(const FiniteField& F, const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw Error(ErrorCode::DegenerateSize, "is_irreducible: zero polynomial");
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  f = poly_monic(F, f);
  if (deg == 1) return true;
  const Poly x{F.zero(), F.one()};
  Poly h = poly_mod(F, x, f);
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(F, h, F.q(), f);
    const Poly g = poly_gcd(F, poly_sub(F, h, x), f);
    if (g.size() > 1) return false;
  }
  return true;
}

std::uint64_t count_irreducibles(std::uint64_t q, unsigned d, bool nonzero_constant) {
  if (d == 0) throw Error(ErrorCode::DegenerateSize, "degree must be at least 1");
  BigInt acc = 0;
  for (auto e : combinat::divisors(d)) {
    const int mu = combinat::moebius(e);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d / e));
    acc += mu > 0 ? term : BigInt(-term);
  }
  acc /= d;
  if (nonzero_constant && d == 1) acc -= 1;
  return acc.convert_to<std::uint64_t>();
}

namespace {

std::mutex g_irr_mutex;
std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const std::vector<IrreduciblePoly>>> g_irr;
std::map<std::pair<std::uint32_t, unsigned>, IrreduciblePoly> g_canonical_moduli;

}  // namespace

std::vector<IrreduciblePoly> enumerate_irreducibles(const std::shared_ptr<const FiniteField>& F, unsigned d,
                                                    bool nonzero_constant, std::uint64_t cap) {
  if (d == 0) throw Error(ErrorCode::DegenerateSize, "degree must be at least 1");
  const std::uint64_t size = checked_pow(F->q(), d);
  if (size > cap) throw Error(ErrorCode::DegenerateSize, "q^d exceeds the size cap");

  std::shared_ptr<const std::vector<IrreduciblePoly>> all;
  {
    std::lock_guard lock(g_irr_mutex);
    if (auto it = g_irr.find({F->q(), d}); it != g_irr.end()) all = it->second;
  }
  if (!all) {
    // One minimal polynomial per Frobenius orbit of exact size d in F_{q^d}.
    const ExtField E = ExtField::canonical(F, d, cap);
    std::vector<bool> seen(size, false);
    auto list = std::make_shared<std::vector<IrreduciblePoly>>();
    for (std::uint64_t code = 0; code < size; ++code) {
      if (seen[code]) continue;
      const ExtElement beta = E.from_code(code);
      ExtElement cur = beta;
      unsigned orbit = 0;
      do {
        seen[E.code(cur)] = true;
        cur = E.frobenius(cur);
        ++orbit;
      } while (!(cur == beta));
      if (orbit == d) list->push_back(E.min_poly(beta));
    }
    std::sort(list->begin(), list->end());
    std::lock_guard lock(g_irr_mutex);
    all = g_irr.emplace(std::make_pair(F->q(), d), list).first->second;
  }
  std::vector<IrreduciblePoly> out;
  out.reserve(all->size());
  for (const auto& f : *all) {
    if (nonzero_constant && f.constant_term().code == 0) continue;
    out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(std::shared_ptr<const FiniteField> base, IrreduciblePoly modulus)
    : ExtField(base, IrreduciblePoly::checked(*base, modulus.coeffs()), TrustedTag{}) {}

ExtField ExtField::trusted(std::shared_ptr<const FiniteField> base, IrreduciblePoly modulus) {
  return ExtField(std::move(base), std::move(modulus), TrustedTag{});
}

ExtField::ExtField(std::shared_ptr<const FiniteField> base, IrreduciblePoly modulus, TrustedTag)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw Error(ErrorCode::DegenerateSize, "extension degree must be at least 1");
  d_ = static_cast<unsigned>(modulus_.degree());
  order_ = checked_pow(base_->q(), d_);
  const Poly x{base_->zero(), base_->one()};
  const ExtElement xq = from_poly(poly_powmod(*base_, x, base_->q(), modulus_.coeffs()));
  frob_basis_.reserve(d_);
  ExtElement cur = one();
  for (unsigned i = 0; i < d_; ++i) {
    frob_basis_.push_back(cur);
    cur = mul(cur, xq);
  }
}

ExtField ExtField::canonical(std::shared_ptr<const FiniteField> base, unsigned d, std::uint64_t cap) {
  if (d == 0) throw Error(ErrorCode::DegenerateSize, "extension degree must be at least 1");
  const std::uint64_t size = checked_pow(base->q(), d);
  if (size > cap) throw Error(ErrorCode::DegenerateSize, "q^d exceeds the size cap");
  {
    std::lock_guard lock(g_irr_mutex);
    if (auto it = g_canonical_moduli.find({base->q(), d}); it != g_canonical_moduli.end()) {
      return trusted(base, it->second);
    }
  }
  const std::uint32_t q = base->q();
  std::optional<IrreduciblePoly> found;
  for (std::uint64_t t = 0; t < size && !found; ++t) {
    Poly cand(d + 1);
    std::uint64_t rest = t;
    for (unsigned i = d; i-- > 0;) {
      cand[i].code = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    cand[d] = base->one();
    if (is_irreducible(*base, cand)) found = IrreduciblePoly::trusted(cand);
  }
  {
    std::lock_guard lock(g_irr_mutex);
    g_canonical_moduli.emplace(std::make_pair(q, d), *found);
  }
  return trusted(base, *found);
}

ExtElement ExtField::zero() const { return ExtElement{std::vector<FqElement>(d_, base_->zero())}; }

ExtElement ExtField::one() const {
  ExtElement e = zero();
  e.coeffs[0] = base_->one();
  return e;
}

ExtElement ExtField::x() const { return from_poly(Poly{base_->zero(), base_->one()}); }

ExtElement ExtField::embed(FqElement a) const {
  ExtElement e = zero();
  e.coeffs[0] = a;
  return e;
}

std::uint64_t ExtField::code(const ExtElement& a) const {
  std::uint64_t c = 0;
  for (auto coeff : a.coeffs) c = c * base_->q() + coeff.code;
  return c;
}

ExtElement ExtField::from_code(std::uint64_t code) const {
  if (code >= order_) throw Error(ErrorCode::DegenerateSize, "element code out of range");
  ExtElement e = zero();
  for (unsigned i = d_; i-- > 0;) {
    e.coeffs[i].code = static_cast<std::uint32_t>(code % base_->q());
    code /= base_->q();
  }
  return e;
}

ExtElement ExtField::from_poly(const Poly& f) const {
  Poly r = poly_mod(*base_, f, modulus_.coeffs());
  ExtElement e = zero();
  std::copy(r.begin(), r.end(), e.coeffs.begin());
  return e;
}

bool ExtField::is_zero(const ExtElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](FqElement c) { return c.code == 0; });
}

bool ExtField::in_base(const ExtElement& a) const {
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](FqElement c) { return c.code == 0; });
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement r = zero();
  for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = base_->add(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  ExtElement r = zero();
  for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = base_->sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElement ExtField::neg(const ExtElement& a) const {
  ExtElement r = zero();
  for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = base_->neg(a.coeffs[i]);
  return r;
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  return from_poly(poly_mul(*base_, a.coeffs, b.coeffs));
}

ExtElement ExtField::pow(const ExtElement& a, std::uint64_t e) const {
  ExtElement acc = one();
  ExtElement b = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, b);
    e >>= 1;
    if (e > 0) b = mul(b, b);
  }
  return acc;
}

ExtElement ExtField::frobenius(const ExtElement& a) const {
  // Coefficients lie in F_q and are fixed by x -> x^q.
  ExtElement r = zero();
  for (unsigned i = 0; i < d_; ++i) {
    if (a.coeffs[i].code == 0) continue;
    for (unsigned j = 0; j < d_; ++j) {
      r.coeffs[j] = base_->add(r.coeffs[j], base_->mul(a.coeffs[i], frob_basis_[i].coeffs[j]));
    }
  }
  return r;
}

std::vector<ExtElement> ExtField::orbit(const ExtElement& a) const {
  std::vector<ExtElement> out{a};
  for (ExtElement cur = frobenius(a); !(cur == a); cur = frobenius(cur)) out.push_back(cur);
  return out;
}

std::uint64_t ExtField::element_order(const ExtElement& a) const {
  if (is_zero(a)) throw Error(ErrorCode::ZeroElement, "order of zero");
  const std::uint64_t n = order_ - 1;
  std::uint64_t ord = n;
  const ExtElement e1 = one();
  for (auto [ell, e] : combinat::factorize(n)) {
    while (ord % ell == 0 && pow(a, ord / ell) == e1) ord /= ell;
  }
  return ord;
}

IrreduciblePoly ExtField::min_poly(const ExtElement& a) const {
  // Polynomial in Y with coefficients in this field, constant term first.
  std::vector<ExtElement> acc{one()};
  for (const auto& root : orbit(a)) {
    std::vector<ExtElement> next(acc.size() + 1, zero());
    const ExtElement neg_root = neg(root);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = add(next[i + 1], acc[i]);
      next[i] = add(next[i], mul(acc[i], neg_root));
    }
    acc = std::move(next);
  }
  Poly out;
  out.reserve(acc.size());
  for (const auto& c : acc) {
    if (!in_base(c)) throw Error(ErrorCode::NotIrreducible, "minimal polynomial left the base field");
    out.push_back(c.coeffs[0]);
  }
  return IrreduciblePoly::trusted(std::move(out));
}

ExtElement ExtField::fixed_generator() const {
  const std::uint64_t n = order_ - 1;
  for (std::uint64_t code = 1; code < order_; ++code) {
    const ExtElement cand = from_code(code);
    if (element_order(cand) == n) return cand;
  }
  throw Error(ErrorCode::DegenerateSize, "no generator found");
}

IrreduciblePoly min_poly(const ExtField& E, const ExtElement& beta) { return E.min_poly(beta); }
std::uint64_t element_order(const ExtField& E, const ExtElement& beta) { return E.element_order(beta); }
ExtElement fixed_generator(const ExtField& E) { return E.fixed_generator(); }

// ---------------------------------------------------------------------------
// DiscreteLog

DiscreteLog::DiscreteLog(const ExtField& E, const ExtElement& generator) : field_(E) {
  const std::uint64_t n = E.order() - 1;
  log_.assign(E.order(), 0);
  powers_.reserve(n);
  ExtElement cur = E.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i > 0 && cur == E.one()) throw Error(ErrorCode::DegenerateSize, "DiscreteLog: not a generator");
    powers_.push_back(cur);
    log_[E.code(cur)] = i;
    cur = E.mul(cur, generator);
  }
  if (!(cur == E.one())) throw Error(ErrorCode::DegenerateSize, "DiscreteLog: not a generator");
}

std::uint64_t DiscreteLog::log(const ExtElement& a) const {
  if (field_.is_zero(a)) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
  return log_[field_.code(a)];
}

// ---------------------------------------------------------------------------

std::uint64_t root_order(const std::shared_ptr<const FiniteField>& F, const IrreduciblePoly& f) {
  const ExtField E = ExtField::trusted(F, f);
  return E.element_order(E.x());
}

IrreduciblePoly power_map(const std::shared_ptr<const FiniteField>& F, const IrreduciblePoly& f, std::uint64_t r,
                          bool strict) {
  if (r == 0) throw Error(ErrorCode::DegenerateSize, "power_map: r must be at least 1");
  const ExtField E = ExtField::trusted(F, f);
  const ExtElement alpha = E.x();
  if (E.is_zero(alpha)) return f;
  if (strict) {
    const std::uint64_t ord = E.element_order(alpha);
    if (std::gcd(r, ord) != 1) {
      throw Error(ErrorCode::NonCoprimePower,
                  "gcd(" + std::to_string(r) + ", " + std::to_string(ord) + ") > 1");
    }
  }
  return E.min_poly(E.pow(alpha, r % (E.order() - 1) + (E.order() - 1)));
}

}  // namespace galoisjd::ffield
