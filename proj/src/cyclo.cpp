#include "galoisjd/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "galoisjd/combinat.hpp"
#include "galoisjd/error.hpp"

namespace galoisjd::cyclo {

namespace {

std::mutex g_cyclo_mutex;
std::map<std::uint64_t, std::shared_ptr<const CyclotomicField>> g_cyclo_fields;

std::uint64_t normalize_exponent(std::int64_t k, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = k % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

void hash_combine(std::size_t& seed, std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); }

}  // namespace

CyclotomicField::CyclotomicField(std::uint64_t m) : m_(m) {
  phi_poly_ = combinat::cyclotomic_poly(m);
  phi_ = phi_poly_.size() - 1;
  if (phi_ == 0) throw Error(ErrorCode::DegenerateSize, "empty cyclotomic polynomial");
  reduction_.resize(m);
  // Walk zeta^k = zeta * zeta^{k-1}, folding zeta^phi back with Phi_m.
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    auto& sparse = reduction_[k];
    for (std::size_t i = 0; i < phi_; ++i) {
      if (cur[i] != 0) sparse.emplace_back(static_cast<std::uint32_t>(i), cur[i]);
    }
    const std::int64_t top = cur.back();
    std::rotate(cur.rbegin(), cur.rbegin() + 1, cur.rend());
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_[i];
    }
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::DegenerateSize, "cyclotomic conductor must be positive");
  std::lock_guard lock(g_cyclo_mutex);
  auto& slot = g_cyclo_fields[m];
  if (!slot) slot = std::shared_ptr<const CyclotomicField>(new CyclotomicField(m));
  return slot;
}

std::vector<Rational> CyclotomicField::reduce(const std::vector<Rational>& group_ring) const {
  std::vector<Rational> out(phi_);
  for (std::uint64_t t = 0; t < group_ring.size(); ++t) {
    const Rational& c = group_ring[t];
    if (c.numerator() == 0) continue;
    for (auto [idx, coeff] : reduction_[t % m_]) out[idx] += c * coeff;
  }
  return out;
}

// ---------------------------------------------------------------------------

CycloNumber::CycloNumber() : CycloNumber(zero(1)) {}

CycloNumber CycloNumber::zero(std::uint64_t m) {
  auto field = CyclotomicField::get(m);
  const std::size_t phi = field->phi();
  return CycloNumber(std::move(field), std::vector<Rational>(phi));
}

CycloNumber CycloNumber::from_rational(std::uint64_t m, Rational value) {
  CycloNumber x = zero(m);
  x.coeffs_[0] = value;
  return x;
}

CycloNumber CycloNumber::root_of_unity(std::uint64_t m, std::int64_t k) {
  CycloNumber x = zero(m);
  for (auto [idx, coeff] : x.field_->reduction(normalize_exponent(k, m))) x.coeffs_[idx] = coeff;
  return x;
}

CycloNumber CycloNumber::from_coeffs(std::uint64_t m, std::vector<Rational> coeffs) {
  auto field = CyclotomicField::get(m);
  if (coeffs.size() != field->phi()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(field->phi()) + " coordinates");
  }
  return CycloNumber(std::move(field), std::move(coeffs));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c.numerator() != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i].numerator() != 0) return false;
  }
  return true;
}

bool CycloNumber::is_integer() const { return is_rational() && coeffs_[0].denominator() == 1; }

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::NotRational, "value is not rational");
  return coeffs_[0];
}

void CycloNumber::require_same_field(const CycloNumber& other) const {
  if (m() != other.m()) {
    throw Error(ErrorCode::DimensionMismatch,
                "mixing Q(zeta_" + std::to_string(m()) + ") with Q(zeta_" + std::to_string(other.m()) + ")");
  }
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  a.require_same_field(b);
  const std::uint64_t m = a.m();
  std::vector<Rational> buf(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].numerator() == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].numerator() == 0) continue;
      buf[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloNumber(a.field_, a.field_->reduce(buf));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) { return a.m() == b.m() && a.coeffs_ == b.coeffs_; }

CycloNumber galois_apply(const CycloNumber& x, std::int64_t r) {
  const std::uint64_t m = x.m();
  const std::uint64_t rr = normalize_exponent(r, m);
  if (std::gcd(rr, m) != 1 && m != 1) {
    throw Error(ErrorCode::NonCoprime, "gcd(" + std::to_string(r) + ", " + std::to_string(m) + ") > 1");
  }
  const auto& F = *x.field_;
  std::vector<Rational> out(F.phi());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const Rational& c = x.coeffs_[i];
    if (c.numerator() == 0) continue;
    const auto idx = static_cast<std::uint64_t>((static_cast<unsigned __int128>(i) * rr) % m);
    for (auto [j, coeff] : F.reduction(idx)) out[j] += c * coeff;
  }
  return CycloNumber(x.field_, std::move(out));
}

Rational inner_product(std::span<const CycloNumber> u, std::span<const CycloNumber> v,
                       std::span<const std::uint64_t> class_sizes, std::uint64_t group_order) {
  if (u.size() != v.size() || u.size() != class_sizes.size()) {
    throw Error(ErrorCode::DimensionMismatch, "inner_product: ragged class-function data");
  }
  if (std::accumulate(class_sizes.begin(), class_sizes.end(), std::uint64_t{0}) != group_order) {
    throw Error(ErrorCode::DimensionMismatch, "inner_product: class sizes do not sum to the group order");
  }
  if (u.empty()) return Rational(0);
  const auto& field = u.front().field_;
  const std::uint64_t m = field->m();
  std::vector<Rational> buf(m);
  for (std::size_t c = 0; c < u.size(); ++c) {
    u[c].require_same_field(u.front());
    v[c].require_same_field(u.front());
    const Rational w(static_cast<std::int64_t>(class_sizes[c]));
    const auto& a = u[c].coeffs_;
    const auto& b = v[c].coeffs_;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].numerator() == 0) continue;
      const Rational wa = w * a[i];
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].numerator() == 0) continue;
        buf[(i + m - j) % m] += wa * b[j];
      }
    }
  }
  const auto reduced = field->reduce(buf);
  for (std::size_t i = 1; i < reduced.size(); ++i) {
    if (reduced[i].numerator() != 0) throw Error(ErrorCode::NotRational, "inner product is not rational");
  }
  return reduced[0] / static_cast<std::int64_t>(group_order);
}

std::size_t hash_value(const CycloNumber& x) {
  std::size_t seed = std::hash<std::uint64_t>{}(x.m());
  for (const auto& c : x.coeffs()) {
    hash_combine(seed, std::hash<std::int64_t>{}(c.numerator()));
    hash_combine(seed, std::hash<std::int64_t>{}(c.denominator()));
  }
  return seed;
}

std::size_t hash_row(std::span<const CycloNumber> row) {
  std::size_t seed = row.size();
  for (const auto& x : row) hash_combine(seed, hash_value(x));
  return seed;
}

}  // namespace galoisjd::cyclo
