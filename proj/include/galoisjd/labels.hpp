#pragma once

// Jordan-decomposition labels for Irr(GL_n(q)).
//
// A semisimple class of GL_n(q) (which is its own dual group) is a multiset of
// monic irreducibles f with nonzero constant term and multiplicities m_f,
// sum deg(f) m_f = n. Its centralizer is prod_f GL_{m_f}(q^{deg f}), whose
// unipotent characters are indexed by partition tuples (lambda_f |- m_f). A
// character label is the pair (s, nu).

#include <compare>
#include <cstdint>
#include <vector>

#include "galoisjd/combinat.hpp"
#include "galoisjd/error.hpp"
#include "galoisjd/ffield.hpp"

namespace galoisjd::labels {

using combinat::Partition;
using ffield::IrreduciblePoly;

/// Desk-scale guards for enumeration.
struct Limits {
  int max_n = 6;
  std::uint64_t max_q = 16;
  /// Bound on q^n, which tracks the number of labels.
  std::uint64_t cap = ffield::kDefaultCap;
};

struct SemisimpleEntry {
  IrreduciblePoly poly;
  int mult = 1;

  bool operator==(const SemisimpleEntry&) const = default;
  std::strong_ordering operator<=>(const SemisimpleEntry& other) const {
    if (auto c = poly <=> other.poly; c != 0) return c;
    return mult <=> other.mult;
  }
};

struct SemisimpleLabel {
  int n = 0;
  std::uint32_t q = 0;
  std::vector<SemisimpleEntry> entries;  // canonical order, distinct polys

  bool operator==(const SemisimpleLabel&) const = default;
  std::strong_ordering operator<=>(const SemisimpleLabel& other) const;
};

/// Sorts the entries and validates weight, distinctness, irreducibility and
/// nonzero constant terms. Throws InvalidLabel.
SemisimpleLabel make_semisimple(int n, std::uint32_t q, std::vector<SemisimpleEntry> entries);

/// GL_{mult}(q^{degree}).
struct CentralizerFactor {
  int degree = 1;
  int mult = 1;
  bool operator==(const CentralizerFactor&) const = default;
};
using CentralizerShape = std::vector<CentralizerFactor>;

struct CharacterLabel {
  SemisimpleLabel s;
  std::vector<Partition> nu;  // aligned with s.entries

  bool operator==(const CharacterLabel&) const = default;
  std::strong_ordering operator<=>(const CharacterLabel& other) const;
};

/// Validates s and checks nu[i] |- s.entries[i].mult. Reorders nu along with
/// the entries when s arrives unsorted.
CharacterLabel make_character(int n, std::uint32_t q, std::vector<SemisimpleEntry> entries,
                              std::vector<Partition> nu);

std::vector<SemisimpleLabel> enumerate_semisimple(int n, std::uint64_t q, const Limits& limits = {});

CentralizerShape centralizer_shape(const SemisimpleLabel& s);
BigInt centralizer_order(const SemisimpleLabel& s);
/// |GL_n(Q)| = Q^{n(n-1)/2} prod_{i<=n} (Q^i - 1).
BigInt gl_order(int n, const BigInt& Q);
/// lcm of the multiplicative orders of the roots of the entries.
std::uint64_t semisimple_order(const SemisimpleLabel& s);

std::vector<CharacterLabel> enumerate_characters(int n, std::uint64_t q, const Limits& limits = {});

/// (|GL_n(q)|_{p'} / |C(s)|_{p'}) prod_f unipotent_degree(lambda_f, q^{deg f}).
BigInt character_degree(const CharacterLabel& L);

std::vector<CharacterLabel> lusztig_series(const SemisimpleLabel& s);

/// The identity class aI with a = 1 (the unipotent series).
SemisimpleLabel identity_label(int n, std::uint32_t q);

/// Sum of squared degrees over a label list; serial reference and OpenMP paths.
BigInt degree_square_sum(const std::vector<CharacterLabel>& chars, Exec exec = Exec::Serial);

}  // namespace galoisjd::labels
