#pragma once

// Galois action on Jordan labels of GL_n(q).
//
// For sigma_r in Gal(Q(zeta_m)/Q), m = e(GL_n(q)), the image of the character
// with label (s, nu) has label (s^r, nu): every unipotent character of a
// GL_m(Q) factor is rational-valued, so nu is carried along unchanged while
// each eigenvalue orbit f is sent to power_map(f, r).

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "galoisjd/labels.hpp"

namespace galoisjd::galois {

using labels::CharacterLabel;
using labels::SemisimpleLabel;

struct GaloisElement {
  std::uint64_t m = 1;
  std::uint64_t r = 0;  // representative in [0, m)

  /// NonCoprime unless gcd(r, m) = 1. Negative r is reduced mod m.
  static GaloisElement make(std::uint64_t m, std::int64_t r);
  GaloisElement compose(const GaloisElement& other) const;
  bool operator==(const GaloisElement&) const = default;
};

struct ValueFieldDescriptor {
  std::uint64_t m = 1;
  std::vector<std::uint64_t> stabilizer;  // sorted residues
  std::uint64_t degree = 1;               // [(Z/m)^x : H] = [Q(chi) : Q]
  bool operator==(const ValueFieldDescriptor&) const = default;
};

/// e(GL_n(q)) = (least p-power >= n) * lcm_{d<=n}(q^d - 1). DegenerateSize if
/// it does not fit 64 bits.
std::uint64_t ambient_exponent(int n, std::uint64_t q);

/// Residues r in [0, m) with gcd(r, m) = 1.
std::vector<std::uint64_t> units_mod(std::uint64_t m);

/// True iff `h` contains 1 (mod m) and is closed under multiplication mod m.
bool is_subgroup(const std::vector<std::uint64_t>& h, std::uint64_t m);

/// Precomputed power maps for every eigenvalue orbit of degree <= n over F_q,
/// so the action on labels reduces to table lookups. Immutable after
/// construction and safe to share across threads.
class Action {
 public:
  Action(int n, std::uint64_t q);

  /// Shared instance per (n, q).
  static std::shared_ptr<const Action> get(int n, std::uint64_t q);

  int n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t m() const noexcept { return m_; }
  const std::vector<std::uint64_t>& units() const noexcept { return units_; }

  /// s -> s^r with multiplicities preserved. NonCoprime unless gcd(r, m) = 1.
  SemisimpleLabel act(const SemisimpleLabel& s, std::int64_t r) const;
  CharacterLabel act(const CharacterLabel& L, std::int64_t r) const;
  ValueFieldDescriptor field_of_values(const CharacterLabel& L) const;
  /// Canonically least member of the orbit of L.
  CharacterLabel orbit_representative(const CharacterLabel& L) const;

 private:
  struct OrbitImages {
    std::uint64_t order = 1;          // multiplicative order of a root
    std::vector<std::int32_t> image;  // index by r mod order; -1 when not coprime
  };

  int n_;
  std::uint64_t q_;
  std::uint64_t m_;
  std::vector<std::uint64_t> units_;
  std::vector<ffield::IrreduciblePoly> polys_;
  std::map<ffield::IrreduciblePoly, std::size_t> index_;
  std::vector<OrbitImages> images_;

  std::size_t image_of(const ffield::IrreduciblePoly& f, std::uint64_t r) const;
  std::vector<std::uint64_t> effective_lifts(const CharacterLabel& L) const;
};

CharacterLabel act_on_label(const CharacterLabel& L, std::int64_t r);
SemisimpleLabel act_on_semisimple(const SemisimpleLabel& s, std::int64_t r);
ValueFieldDescriptor field_of_values(const CharacterLabel& L);
/// True iff every sigma_r fixes the label (field_of_values degree 1).
bool is_rational_character(const CharacterLabel& L);

/// Orbits of enumerate_characters(n, q) under all sigma_r, each sorted, in
/// order of their least member.
std::vector<std::vector<CharacterLabel>> galois_orbits(int n, std::uint64_t q, Exec exec = Exec::Serial,
                                                       const labels::Limits& limits = {});

}  // namespace galoisjd::galois
