#include "galoisjd/oracle/gl2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include <omp.h>

#include "galoisjd/combinat.hpp"
#include "galoisjd/galois.hpp"

namespace galoisjd::oracle {

namespace {

std::mutex g_table_mutex;
std::map<std::uint64_t, std::shared_ptr<const GL2Table>> g_tables;

std::uint64_t pack(int kind, std::uint64_t u, std::uint64_t v, std::uint64_t base) {
  return (static_cast<std::uint64_t>(kind) * base + u) * base + v;
}

std::vector<CycloNumber> apply_row(const std::vector<CycloNumber>& row, std::int64_t r) {
  std::vector<CycloNumber> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(cyclo::galois_apply(x, r));
  return out;
}

std::vector<CycloNumber> combine(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b, int sign) {
  std::vector<CycloNumber> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (sign > 0) {
      out[i] += b[i];
    } else {
      out[i] -= b[i];
    }
  }
  return out;
}

bool integral(const std::vector<CycloNumber>& row) {
  for (const auto& x : row) {
    for (const auto& c : x.coeffs()) {
      if (c.denominator() != 1) return false;
    }
  }
  return true;
}

std::string describe(const CharacterLabel& L) {
  std::string out = "s=[";
  for (std::size_t i = 0; i < L.s.entries.size(); ++i) {
    if (i) out += ' ';
    out += '(';
    const auto& c = L.s.entries[i].poly.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(c[j].code);
    }
    out += ")^" + std::to_string(L.s.entries[i].mult);
  }
  out += "] nu=[";
  for (std::size_t i = 0; i < L.nu.size(); ++i) {
    if (i) out += ' ';
    for (std::size_t j = 0; j < L.nu[i].parts().size(); ++j) {
      if (j) out += ',';
      out += std::to_string(L.nu[i].parts()[j]);
    }
  }
  return out + "]";
}

}  // namespace

std::string_view kind_name(GL2Class::Kind k) {
  switch (k) {
    case GL2Class::Kind::Central: return "central";
    case GL2Class::Kind::NonSemisimple: return "nonss";
    case GL2Class::Kind::Split: return "split";
    case GL2Class::Kind::Elliptic: return "elliptic";
  }
  return "?";
}

std::string_view kind_name(GL2Character::Kind k) {
  switch (k) {
    case GL2Character::Kind::Linear: return "linear";
    case GL2Character::Kind::SteinbergTwist: return "steinberg_twist";
    case GL2Character::Kind::Principal: return "principal";
    case GL2Character::Kind::Cuspidal: return "cuspidal";
  }
  return "?";
}

// ---------------------------------------------------------------------------

GL2Table::GL2Table(std::uint64_t q)
    : q_(q),
      m_(galois::ambient_exponent(2, q)),
      order_(q * (q - 1) * (q * q - 1)),
      field_(ffield::FiniteField::of_order(q)),
      ext_(ffield::ExtField::canonical(field_, 2)) {
  const std::uint64_t q1 = q - 1;
  const std::uint64_t q2 = q * q - 1;
  big_gen_ = ext_.fixed_generator();
  const auto norm = ext_.pow(big_gen_, q + 1);
  if (!ext_.in_base(norm)) throw Error(ErrorCode::InvalidLabel, "norm of the generator left F_q");
  small_gen_ = norm.coeffs[0];

  auto canon = [&](std::uint64_t t) { return std::min(t % q2, (t * q) % q2); };

  using CK = GL2Class::Kind;
  for (std::uint64_t i = 0; i < q1; ++i) classes_.push_back({CK::Central, i, 0, 1});
  for (std::uint64_t i = 0; i < q1; ++i) classes_.push_back({CK::NonSemisimple, i, 0, q2});
  for (std::uint64_t i = 0; i < q1; ++i) {
    for (std::uint64_t j = i + 1; j < q1; ++j) classes_.push_back({CK::Split, i, j, q * (q + 1)});
  }
  for (std::uint64_t k = 0; k < q2; ++k) {
    if (k % (q + 1) != 0 && canon(k) == k) classes_.push_back({CK::Elliptic, k, 0, q * (q - 1)});
  }
  for (const auto& c : classes_) sizes_.push_back(c.size);

  std::vector<CycloNumber> z1, z2;
  for (std::uint64_t x = 0; x < q1; ++x) z1.push_back(CycloNumber::root_of_unity(m_, x * (m_ / q1)));
  for (std::uint64_t x = 0; x < q2; ++x) z2.push_back(CycloNumber::root_of_unity(m_, x * (m_ / q2)));
  auto a1 = [&](std::uint64_t x) { return z1[x % q1]; };
  auto a2 = [&](std::uint64_t x) { return z2[x % q2]; };
  auto times = [&](std::int64_t k, const CycloNumber& x) { return x * Rational(k); };
  const auto zero = CycloNumber::zero(m_);
  const auto qq = static_cast<std::int64_t>(q);

  using XK = GL2Character::Kind;
  auto row_of = [&](XK kind, std::uint64_t u, std::uint64_t v) {
    std::vector<CycloNumber> row;
    row.reserve(classes_.size());
    for (const auto& c : classes_) {
      const std::uint64_t i = c.a, j = c.b;
      switch (kind) {
        case XK::Linear:
          switch (c.kind) {
            case CK::Central:
            case CK::NonSemisimple: row.push_back(a1(2 * u * i)); break;
            case CK::Split: row.push_back(a1(u * (i + j))); break;
            case CK::Elliptic: row.push_back(a1(u * i)); break;
          }
          break;
        case XK::SteinbergTwist:
          switch (c.kind) {
            case CK::Central: row.push_back(times(qq, a1(2 * u * i))); break;
            case CK::NonSemisimple: row.push_back(zero); break;
            case CK::Split: row.push_back(a1(u * (i + j))); break;
            case CK::Elliptic: row.push_back(-a1(u * i)); break;
          }
          break;
        case XK::Principal:
          switch (c.kind) {
            case CK::Central: row.push_back(times(qq + 1, a1((u + v) * i))); break;
            case CK::NonSemisimple: row.push_back(a1((u + v) * i)); break;
            case CK::Split: row.push_back(a1(u * i + v * j) + a1(u * j + v * i)); break;
            case CK::Elliptic: row.push_back(zero); break;
          }
          break;
        case XK::Cuspidal:
          switch (c.kind) {
            case CK::Central: row.push_back(times(qq - 1, a2(u * i * (q + 1)))); break;
            case CK::NonSemisimple: row.push_back(-a2(u * i * (q + 1))); break;
            case CK::Split: row.push_back(zero); break;
            case CK::Elliptic: row.push_back(-(a2(u * i) + a2(u * i * q))); break;
          }
          break;
      }
    }
    return row;
  };

  auto add = [&](XK kind, std::uint64_t u, std::uint64_t v, std::uint64_t degree, CharacterLabel label) {
    slot_.emplace(pack(static_cast<int>(kind), u, v, q2), chars_.size());
    chars_.push_back({kind, u, v, degree, row_of(kind, u, v)});
    labels_.push_back(std::move(label));
  };

  const auto one = combinat::Partition({1});
  const auto two = combinat::Partition({2});
  const auto one_one = combinat::Partition({1, 1});
  for (std::uint64_t u = 0; u < q1; ++u) add(XK::Linear, u, 0, 1, {scalar_label(u), {two}});
  for (std::uint64_t u = 0; u < q1; ++u) add(XK::SteinbergTwist, u, 0, q, {scalar_label(u), {one_one}});
  for (std::uint64_t u = 0; u < q1; ++u) {
    for (std::uint64_t v = u + 1; v < q1; ++v) {
      add(XK::Principal, u, v, q + 1,
          labels::make_character(2, static_cast<std::uint32_t>(q), {{linear_poly(u), 1}, {linear_poly(v), 1}},
                                 {one, one}));
    }
  }
  for (std::uint64_t t = 0; t < q2; ++t) {
    if (t % (q + 1) == 0 || canon(t) != t) continue;
    const auto f = ext_.min_poly(ext_.pow(big_gen_, t));
    add(XK::Cuspidal, t, 0, q - 1,
        CharacterLabel{SemisimpleLabel{2, static_cast<std::uint32_t>(q), {{f, 1}}}, {one}});
  }
  for (std::size_t i = 0; i < chars_.size(); ++i) row_index_.emplace(cyclo::hash_row(chars_[i].values), i);
}

std::shared_ptr<const GL2Table> GL2Table::get(std::uint64_t q) {
  if (q < 2 || q > 9) throw Error(ErrorCode::DegenerateSize, "GL_2(q) tables are built for 2 <= q <= 9");
  if (combinat::prime_power(q).first == 0) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  std::lock_guard lock(g_table_mutex);
  auto& slot = g_tables[q];
  if (!slot) slot = std::make_shared<const GL2Table>(q);
  return slot;
}

ffield::IrreduciblePoly GL2Table::linear_poly(std::uint64_t u) const {
  const auto& F = *field_;
  const auto a = F.pow(small_gen_, u);
  return ffield::IrreduciblePoly::trusted({F.neg(a), F.one()});
}

SemisimpleLabel GL2Table::scalar_label(std::uint64_t u) const {
  return SemisimpleLabel{2, static_cast<std::uint32_t>(q_), {{linear_poly(u), 2}}};
}

std::optional<std::size_t> GL2Table::find_row(const std::vector<CycloNumber>& row) const {
  auto [lo, hi] = row_index_.equal_range(cyclo::hash_row(row));
  for (auto it = lo; it != hi; ++it) {
    if (chars_[it->second].values == row) return it->second;
  }
  return std::nullopt;
}

std::size_t GL2Table::linear_index(std::uint64_t u) const {
  return slot_.at(pack(static_cast<int>(GL2Character::Kind::Linear), u % (q_ - 1), 0, q_ * q_ - 1));
}
std::size_t GL2Table::steinberg_index(std::uint64_t u) const {
  return slot_.at(pack(static_cast<int>(GL2Character::Kind::SteinbergTwist), u % (q_ - 1), 0, q_ * q_ - 1));
}
std::size_t GL2Table::principal_index(std::uint64_t u, std::uint64_t v) const {
  u %= q_ - 1;
  v %= q_ - 1;
  if (u > v) std::swap(u, v);
  return slot_.at(pack(static_cast<int>(GL2Character::Kind::Principal), u, v, q_ * q_ - 1));
}
std::size_t GL2Table::cuspidal_index(std::uint64_t t) const {
  const std::uint64_t q2 = q_ * q_ - 1;
  t = std::min(t % q2, (t * q_) % q2);
  return slot_.at(pack(static_cast<int>(GL2Character::Kind::Cuspidal), t, 0, q2));
}

std::vector<CycloNumber> GL2Table::dl_row(Torus t, std::uint64_t u, std::uint64_t v) const {
  if (t == Torus::Split) {
    u %= q_ - 1;
    v %= q_ - 1;
    if (u != v) return chars_[principal_index(u, v)].values;
    return combine(chars_[linear_index(u)].values, chars_[steinberg_index(u)].values, +1);
  }
  const std::uint64_t q2 = q_ * q_ - 1;
  u %= q2;
  if (u % (q_ + 1) == 0) {
    const std::uint64_t a = u / (q_ + 1);
    return combine(chars_[linear_index(a)].values, chars_[steinberg_index(a)].values, -1);
  }
  auto row = chars_[cuspidal_index(u)].values;
  for (auto& x : row) x = -x;
  return row;
}

SemisimpleLabel GL2Table::dl_label(Torus t, std::uint64_t u, std::uint64_t v) const {
  const auto q = static_cast<std::uint32_t>(q_);
  if (t == Torus::Split) {
    u %= q_ - 1;
    v %= q_ - 1;
    if (u == v) return scalar_label(u);
    return labels::make_semisimple(2, q, {{linear_poly(u), 1}, {linear_poly(v), 1}});
  }
  u %= q_ * q_ - 1;
  if (u % (q_ + 1) == 0) return scalar_label(u / (q_ + 1));
  return SemisimpleLabel{2, q, {{ext_.min_poly(ext_.pow(big_gen_, u)), 1}}};
}

Rational GL2Table::inner(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b) const {
  if (!integral(a) || !integral(b)) return cyclo::inner_product(a, b, sizes_, order_);
  // Integer rows: accumulate in the group ring with machine integers.
  if (a.empty()) return Rational(0);
  const auto& field = a.front().field();
  std::vector<std::int64_t> buf(m_, 0);
  for (std::size_t c = 0; c < a.size(); ++c) {
    const auto w = static_cast<std::int64_t>(sizes_[c]);
    const auto& x = a[c].coeffs();
    const auto& y = b[c].coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].numerator() == 0) continue;
      const std::int64_t wx = w * x[i].numerator();
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].numerator() == 0) continue;
        buf[(i + m_ - j) % m_] += wx * y[j].numerator();
      }
    }
  }
  std::vector<std::int64_t> reduced(field.phi(), 0);
  for (std::uint64_t t = 0; t < m_; ++t) {
    if (buf[t] == 0) continue;
    for (auto [idx, coeff] : field.reduction(t)) reduced[idx] += buf[t] * coeff;
  }
  for (std::size_t i = 1; i < reduced.size(); ++i) {
    if (reduced[i] != 0) throw Error(ErrorCode::NotRational, "inner product is not rational");
  }
  return Rational(reduced[0], static_cast<std::int64_t>(order_));
}

// ---------------------------------------------------------------------------

void Report::expect(bool cond, const std::string& check, const std::string& detail) {
  ++checks;
  if (!cond) mismatches.push_back({check, detail});
}

void Report::merge(Report other) {
  checks += other.checks;
  for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
}

GaloisPermutation galois_permutation(const GL2Table& table, Exec exec) {
  GaloisPermutation out;
  out.units = galois::units_mod(table.m());
  out.perm.assign(out.units.size(), std::vector<std::size_t>(table.size()));
  const auto count = static_cast<std::int64_t>(out.units.size());
  auto fill = [&](std::int64_t k) {
    const auto r = static_cast<std::int64_t>(out.units[static_cast<std::size_t>(k)]);
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto j = table.find_row(apply_row(table.characters()[i].values, r));
      if (!j) {
        throw Error(ErrorCode::NoMatchingRow,
                    "sigma_" + std::to_string(r) + " of row " + std::to_string(i) + " is not a row");
      }
      out.perm[static_cast<std::size_t>(k)][i] = *j;
    }
  };
  if (exec == Exec::Serial) {
    for (std::int64_t k = 0; k < count; ++k) fill(k);
    return out;
  }
  std::string failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      fill(k);
    } catch (const std::exception& e) {
#pragma omp critical
      failure = e.what();
    }
  }
  if (!failure.empty()) throw Error(ErrorCode::NoMatchingRow, failure);
  return out;
}

Report verify_main_theorem(std::uint64_t q, std::int64_t r) {
  const auto table = gl2_table(q);
  const auto action = galois::Action::get(2, q);
  const auto sigma = galois::GaloisElement::make(table->m(), r);
  Report rep{"main_theorem", q, 0, {}};
  for (std::size_t i = 0; i < table->size(); ++i) {
    const auto j = table->find_row(apply_row(table->characters()[i].values, static_cast<std::int64_t>(sigma.r)));
    if (!j) {
      throw Error(ErrorCode::NoMatchingRow,
                  "sigma_" + std::to_string(sigma.r) + " of row " + std::to_string(i) + " is not a row");
    }
    const auto predicted = action->act(table->label(i), static_cast<std::int64_t>(sigma.r));
    rep.expect(table->label(*j) == predicted, "label",
               "r=" + std::to_string(sigma.r) + " row " + std::to_string(i) + " " + describe(table->label(i)));
  }
  return rep;
}

Report verify_main_theorem_all(std::uint64_t q, Exec exec) {
  const auto table = gl2_table(q);
  const auto action = galois::Action::get(2, q);
  const auto perm = galois_permutation(*table, exec);
  Report rep{"main_theorem", q, 0, {}};
  for (std::size_t k = 0; k < perm.units.size(); ++k) {
    const auto r = static_cast<std::int64_t>(perm.units[k]);
    for (std::size_t i = 0; i < table->size(); ++i) {
      const auto predicted = action->act(table->label(i), r);
      rep.expect(table->label(perm.perm[k][i]) == predicted, "label",
                 "r=" + std::to_string(r) + " row " + std::to_string(i) + " " + describe(table->label(i)));
    }
  }
  return rep;
}

Report verify_field_of_values(std::uint64_t q, Exec exec) {
  const auto table = gl2_table(q);
  const auto action = galois::Action::get(2, q);
  const auto perm = galois_permutation(*table, exec);
  Report rep{"field_of_values", q, 0, {}};
  for (std::size_t i = 0; i < table->size(); ++i) {
    std::vector<std::uint64_t> stab;
    for (std::size_t k = 0; k < perm.units.size(); ++k) {
      if (perm.perm[k][i] == i) stab.push_back(perm.units[k]);
    }
    const auto predicted = action->field_of_values(table->label(i));
    const std::string who = "row " + std::to_string(i) + " " + describe(table->label(i));
    rep.expect(stab == predicted.stabilizer, "stabilizer", who);
    const auto& row = table->characters()[i].values;
    const bool integer_row = std::all_of(row.begin(), row.end(), [](const auto& x) { return x.is_integer(); });
    rep.expect(integer_row == (predicted.degree == 1), "rational", who);
    const bool real_row = apply_row(row, -1) == row;
    const bool real_label = std::binary_search(predicted.stabilizer.begin(), predicted.stabilizer.end(), table->m() - 1);
    rep.expect(real_row == real_label, "real", who);
  }
  return rep;
}

Report verify_induction_commutes(std::uint64_t q, std::int64_t r) {
  const auto table = gl2_table(q);
  std::vector<std::uint64_t> rs;
  if (r == 0) {
    rs = galois::units_mod(table->m());
  } else {
    rs.push_back(galois::GaloisElement::make(table->m(), r).r);
  }
  const std::uint64_t q1 = q - 1, q2 = q * q - 1;
  Report rep{"induction_commutes", q, 0, {}};
  for (std::uint64_t u = 0; u < q1; ++u) {
    for (std::uint64_t v = 0; v < q1; ++v) {
      const auto row = table->dl_row(Torus::Split, u, v);
      rep.expect(table->inner(row, row) == Rational(u == v ? 2 : 1), "norm",
                 "split theta=(" + std::to_string(u) + "," + std::to_string(v) + ")");
      for (auto s : rs) {
        rep.expect(apply_row(row, static_cast<std::int64_t>(s)) == table->dl_row(Torus::Split, u * s, v * s), "split",
                   "theta=(" + std::to_string(u) + "," + std::to_string(v) + ") r=" + std::to_string(s));
      }
    }
  }
  for (std::uint64_t t = 0; t < q2; ++t) {
    const auto row = table->dl_row(Torus::Nonsplit, t);
    rep.expect(table->inner(row, row) == Rational(t % (q + 1) == 0 ? 2 : 1), "norm",
               "nonsplit theta=" + std::to_string(t));
    for (auto s : rs) {
      rep.expect(apply_row(row, static_cast<std::int64_t>(s)) == table->dl_row(Torus::Nonsplit, (t * s) % q2),
                 "nonsplit", "theta=" + std::to_string(t) + " r=" + std::to_string(s));
    }
  }
  return rep;
}

namespace {

// Signed multiplicity of chi in R_T(theta) predicted from labels: zero off the
// series, otherwise (-1)^{n - sum m_f} times the value of the partition's
// symmetric-group character at the torus class of the centralizer.
int predicted_multiplicity(const CharacterLabel& chi, const SemisimpleLabel& s, Torus t) {
  if (chi.s != s) return 0;
  int weight = 0;
  for (const auto& e : s.entries) weight += e.mult;
  int value = (s.n - weight) % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (s.entries[i].mult == 2 && t == Torus::Nonsplit && chi.nu[i].length() == 2) value = -value;
  }
  return value;
}

template <class F>
void for_each_theta(std::uint64_t q, F&& f) {
  for (std::uint64_t u = 0; u + 1 < q; ++u) {
    for (std::uint64_t v = u; v + 1 < q; ++v) f(Torus::Split, u, v);
  }
  for (std::uint64_t t = 0; t < q * q - 1; ++t) f(Torus::Nonsplit, t, 0);
}

std::string theta_name(Torus t, std::uint64_t u, std::uint64_t v) {
  if (t == Torus::Split) return "split theta=(" + std::to_string(u) + "," + std::to_string(v) + ")";
  return "nonsplit theta=" + std::to_string(u);
}

}  // namespace

Report verify_inner_product_property(std::uint64_t q) {
  if (q > 7) throw Error(ErrorCode::DegenerateSize, "inner-product sweep is run for q <= 7");
  const auto table = gl2_table(q);
  Report rep{"inner_product", q, 0, {}};
  for_each_theta(q, [&](Torus t, std::uint64_t u, std::uint64_t v) {
    const auto row = table->dl_row(t, u, v);
    const auto s = table->dl_label(t, u, v);
    for (std::size_t i = 0; i < table->size(); ++i) {
      const Rational ip = table->inner(table->characters()[i].values, row);
      const int want = predicted_multiplicity(table->label(i), s, t);
      rep.expect(ip == Rational(want), "multiplicity",
                 theta_name(t, u, v) + " row " + std::to_string(i) + " got " + std::to_string(ip.numerator()) + "/" +
                     std::to_string(ip.denominator()) + " want " + std::to_string(want));
    }
  });
  return rep;
}

Report verify_series(std::uint64_t q, Exec exec) {
  const auto table = gl2_table(q);
  const auto action = galois::Action::get(2, q);
  Report rep{"series", q, 0, {}};

  std::map<SemisimpleLabel, std::set<std::size_t>> from_table;
  for_each_theta(q, [&](Torus t, std::uint64_t u, std::uint64_t v) {
    const auto row = table->dl_row(t, u, v);
    auto& bucket = from_table[table->dl_label(t, u, v)];
    for (std::size_t i = 0; i < table->size(); ++i) {
      if (table->inner(table->characters()[i].values, row).numerator() != 0) bucket.insert(i);
    }
  });
  std::map<SemisimpleLabel, std::set<std::size_t>> from_labels;
  for (std::size_t i = 0; i < table->size(); ++i) from_labels[table->label(i).s].insert(i);

  const auto all = labels::enumerate_semisimple(2, q);
  rep.expect(all.size() == from_table.size(), "series_count", std::to_string(from_table.size()) + " series found");
  for (const auto& s : all) {
    rep.expect(from_table[s] == from_labels[s], "membership", describe(CharacterLabel{s, {}}));
  }

  const auto perm = galois_permutation(*table, exec);
  for (std::size_t k = 0; k < perm.units.size(); ++k) {
    const auto r = static_cast<std::int64_t>(perm.units[k]);
    for (const auto& s : all) {
      std::set<std::size_t> image;
      for (auto i : from_table[s]) image.insert(perm.perm[k][i]);
      rep.expect(image == from_table[action->act(s, r)], "image",
                 "r=" + std::to_string(r) + " " + describe(CharacterLabel{s, {}}));
    }
  }
  return rep;
}

Report verify_table(std::uint64_t q) {
  const auto table = gl2_table(q);
  const std::size_t n = table->size();
  Report rep{"table", q, 0, {}};
  rep.expect(n == q * q - 1, "count", std::to_string(n) + " characters");
  rep.expect(table->classes().size() == n, "class_count", std::to_string(table->classes().size()) + " classes");
  rep.expect(std::accumulate(table->class_sizes().begin(), table->class_sizes().end(), std::uint64_t{0}) ==
                 table->group_order(),
             "class_sizes", "sizes do not sum to the group order");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational ip = table->inner(table->characters()[i].values, table->characters()[j].values);
      rep.expect(ip == Rational(i == j ? 1 : 0), "first_orthogonality",
                 "rows " + std::to_string(i) + "," + std::to_string(j));
    }
  }

  // Columns, weighted uniformly: (1/N) sum_chi chi(c) conj chi(d) = delta |C(c)| / N.
  std::vector<std::vector<CycloNumber>> cols(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) cols[c].push_back(table->characters()[i].values[c]);
  }
  const std::vector<std::uint64_t> ones(n, 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = c; d < n; ++d) {
      const Rational ip = cyclo::inner_product(cols[c], cols[d], ones, n);
      const Rational want =
          c == d ? Rational(static_cast<std::int64_t>(table->group_order() / table->class_sizes()[c]),
                            static_cast<std::int64_t>(n))
                 : Rational(0);
      rep.expect(ip == want, "second_orthogonality", "classes " + std::to_string(c) + "," + std::to_string(d));
    }
  }

  BigInt squares = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& chi = table->characters()[i];
    squares += BigInt(chi.degree) * chi.degree;
    rep.expect(chi.values.front() == CycloNumber::from_rational(table->m(), Rational(static_cast<std::int64_t>(chi.degree))),
               "degree_value", "row " + std::to_string(i));
    rep.expect(labels::character_degree(table->label(i)) == chi.degree, "label_degree",
               "row " + std::to_string(i) + " " + describe(table->label(i)));
  }
  rep.expect(squares == table->group_order(), "sum_of_squares", "sum of squared degrees");

  std::vector<CharacterLabel> mine;
  for (std::size_t i = 0; i < n; ++i) mine.push_back(table->label(i));
  std::sort(mine.begin(), mine.end());
  rep.expect(mine == labels::enumerate_characters(2, q), "label_bijection", "labels differ from the enumeration");
  return rep;
}

}  // namespace galoisjd::oracle
