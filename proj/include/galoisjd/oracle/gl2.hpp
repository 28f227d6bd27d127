#pragma once

// The exact character table of GL_2(q), built from the classical four
// families, and the checks run against it.
//
// Every index below is a discrete log. G is the fixed generator of F_{q^2}^x
// and g = G^{q+1} generates F_q^x, so the split and nonsplit tori share one
// pairing: theta_{u(q+1)} = alpha_u o Norm. alpha_u(g^x) = zeta_{q-1}^{ux} and
// theta_t(G^x) = zeta_{q^2-1}^{tx}; both sit inside Q(zeta_m) with
// m = e(GL_2(q)).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "galoisjd/cyclo.hpp"
#include "galoisjd/error.hpp"
#include "galoisjd/ffield.hpp"
#include "galoisjd/labels.hpp"

namespace galoisjd::oracle {

using cyclo::CycloNumber;
using cyclo::Rational;
using labels::CharacterLabel;
using labels::SemisimpleLabel;

struct GL2Class {
  enum class Kind { Central, NonSemisimple, Split, Elliptic };
  Kind kind = Kind::Central;
  // central / nonss: eigenvalue g^a. split: g^a, g^b with a < b.
  // elliptic: G^a, canonical (a <= a q mod q^2-1).
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t size = 1;
};

struct GL2Character {
  enum class Kind { Linear, SteinbergTwist, Principal, Cuspidal };
  Kind kind = Kind::Linear;
  // linear / steinberg: alpha_u. principal: alpha_u, alpha_v with u < v.
  // cuspidal: theta_u, canonical like elliptic classes.
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  std::uint64_t degree = 1;
  std::vector<CycloNumber> values;  // indexed like GL2Table::classes()
};

std::string_view kind_name(GL2Class::Kind k);
std::string_view kind_name(GL2Character::Kind k);

enum class Torus { Split, Nonsplit };

class GL2Table {
 public:
  /// DegenerateSize unless 2 <= q <= 9 (and NotPrime unless q is a prime power).
  static std::shared_ptr<const GL2Table> get(std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t group_order() const noexcept { return order_; }
  const std::vector<GL2Class>& classes() const noexcept { return classes_; }
  const std::vector<GL2Character>& characters() const noexcept { return chars_; }
  const std::vector<std::uint64_t>& class_sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return chars_.size(); }

  /// Eigenvalue generators: G of F_{q^2}^x and g = G^{q+1}.
  const ffield::ExtField& ext() const noexcept { return ext_; }
  const ffield::ExtElement& big_generator() const noexcept { return big_gen_; }
  ffield::FqElement small_generator() const noexcept { return small_gen_; }

  /// The Jordan label of character i.
  const CharacterLabel& label(std::size_t i) const { return labels_.at(i); }
  /// Row index with exactly these values, if any.
  std::optional<std::size_t> find_row(const std::vector<CycloNumber>& row) const;

  /// R_T(theta) assembled from table rows. Split: theta = (u, v) mod q-1.
  /// Nonsplit: theta = u mod q^2-1 (v ignored).
  std::vector<CycloNumber> dl_row(Torus t, std::uint64_t u, std::uint64_t v = 0) const;
  /// The semisimple class paired with theta on torus t.
  SemisimpleLabel dl_label(Torus t, std::uint64_t u, std::uint64_t v = 0) const;

  /// Exact <a, b> with the table's class sizes.
  Rational inner(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b) const;

  explicit GL2Table(std::uint64_t q);

 private:
  std::uint64_t q_;
  std::uint64_t m_;
  std::uint64_t order_;
  std::shared_ptr<const ffield::FiniteField> field_;
  ffield::ExtField ext_;
  ffield::ExtElement big_gen_;
  ffield::FqElement small_gen_;
  std::vector<GL2Class> classes_;
  std::vector<GL2Character> chars_;
  std::vector<std::uint64_t> sizes_;
  std::vector<CharacterLabel> labels_;
  std::unordered_multimap<std::size_t, std::size_t> row_index_;

  std::size_t linear_index(std::uint64_t u) const;
  std::size_t steinberg_index(std::uint64_t u) const;
  std::size_t principal_index(std::uint64_t u, std::uint64_t v) const;
  std::size_t cuspidal_index(std::uint64_t t) const;
  std::unordered_map<std::uint64_t, std::size_t> slot_;  // (kind, u, v) packed -> row

  ffield::IrreduciblePoly linear_poly(std::uint64_t u) const;  // X - g^u
  SemisimpleLabel scalar_label(std::uint64_t u) const;         // (X - g^u)^2
};

inline std::shared_ptr<const GL2Table> gl2_table(std::uint64_t q) { return GL2Table::get(q); }

/// One failed check, in words, with the indices involved.
struct Mismatch {
  std::string check;
  std::string detail;
};

struct Report {
  std::string name;
  std::uint64_t q = 0;
  std::uint64_t checks = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
  void expect(bool cond, const std::string& check, const std::string& detail);
  void merge(Report other);
};

/// perm[k][i] = row index of sigma_r(row i) for r = units[k]. NoMatchingRow
/// if some image is not a row. Serial reference and OpenMP sweep over r.
struct GaloisPermutation {
  std::vector<std::uint64_t> units;
  std::vector<std::vector<std::size_t>> perm;
};
GaloisPermutation galois_permutation(const GL2Table& table, Exec exec = Exec::Serial);

/// Jordan labels of sigma_r(chi) against the table rows, for a single r.
Report verify_main_theorem(std::uint64_t q, std::int64_t r);
/// Same, for every r coprime to m.
Report verify_main_theorem_all(std::uint64_t q, Exec exec = Exec::Serial);
Report verify_field_of_values(std::uint64_t q, Exec exec = Exec::Serial);
/// sigma_r(R_T(theta)) = R_T(theta^r) for every torus and theta; r = 0 means
/// every r coprime to m.
Report verify_induction_commutes(std::uint64_t q, std::int64_t r = 0);
Report verify_inner_product_property(std::uint64_t q);
/// Series read off the table by pairing with R_T agree with the labels, and
/// sigma_r carries E(s) onto E(s^r).
Report verify_series(std::uint64_t q, Exec exec = Exec::Serial);
/// Both orthogonality relations, sum of squared degrees, and the label
/// bijection with degrees.
Report verify_table(std::uint64_t q);

}  // namespace galoisjd::oracle
