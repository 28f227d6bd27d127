#include "galoisjd/galois.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include <omp.h>

#include "galoisjd/expo.hpp"

namespace galoisjd::galois {

namespace {

std::uint64_t reduce_mod(std::int64_t r, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t x = r % mm;
  if (x < 0) x += mm;
  return static_cast<std::uint64_t>(x);
}

std::mutex g_action_mutex;
std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const Action>> g_actions;

}  // namespace

GaloisElement GaloisElement::make(std::uint64_t m, std::int64_t r) {
  if (m == 0) throw Error(ErrorCode::DegenerateSize, "modulus must be positive");
  const std::uint64_t rr = reduce_mod(r, m);
  if (std::gcd(rr, m) != 1) {
    throw Error(ErrorCode::NonCoprime, "gcd(" + std::to_string(r) + ", " + std::to_string(m) + ") > 1");
  }
  return GaloisElement{m, rr};
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
  if (m != other.m) throw Error(ErrorCode::DimensionMismatch, "composing Galois elements of different moduli");
  return GaloisElement{m, static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * other.r) % m)};
}

std::uint64_t ambient_exponent(int n, std::uint64_t q) {
  const BigInt e = expo::exponent_formula(expo::GroupSpec::make(expo::Family::GL, static_cast<unsigned>(n), q));
  if (e > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::DegenerateSize, "exponent of GL_n(q) does not fit 64 bits");
  }
  return e.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> units_mod(std::uint64_t m) {
  std::vector<std::uint64_t> u;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (std::gcd(r, m) == 1) u.push_back(r);
  }
  return u;
}

bool is_subgroup(const std::vector<std::uint64_t>& h, std::uint64_t m) {
  if (!std::binary_search(h.begin(), h.end(), 1 % m)) return false;
  for (auto a : h) {
    for (auto b : h) {
      if (!std::binary_search(h.begin(), h.end(), (a * b) % m)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Action::Action(int n, std::uint64_t q) : n_(n), q_(q), m_(ambient_exponent(n, q)) {
  units_ = units_mod(m_);
  auto F = ffield::FiniteField::of_order(q);
  for (int d = 1; d <= n; ++d) {
    for (auto& f : ffield::enumerate_irreducibles(F, static_cast<unsigned>(d), true)) polys_.push_back(f);
  }
  for (std::size_t i = 0; i < polys_.size(); ++i) index_.emplace(polys_[i], i);
  images_.resize(polys_.size());
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    auto& img = images_[i];
    img.order = ffield::root_order(F, polys_[i]);
    img.image.assign(img.order, -1);
    for (std::uint64_t t = 0; t < img.order; ++t) {
      if (std::gcd(t, img.order) != 1) continue;
      const auto g = ffield::power_map(F, polys_[i], t == 0 ? img.order : t);
      img.image[t] = static_cast<std::int32_t>(index_.at(g));
    }
  }
}

std::shared_ptr<const Action> Action::get(int n, std::uint64_t q) {
  {
    std::lock_guard lock(g_action_mutex);
    if (auto it = g_actions.find({n, q}); it != g_actions.end()) return it->second;
  }
  auto built = std::make_shared<const Action>(n, q);
  std::lock_guard lock(g_action_mutex);
  return g_actions.emplace(std::make_pair(n, q), built).first->second;
}

std::size_t Action::image_of(const ffield::IrreduciblePoly& f, std::uint64_t r) const {
  const auto it = index_.find(f);
  if (it == index_.end()) throw Error(ErrorCode::InvalidLabel, "polynomial is not an eigenvalue orbit of this group");
  const auto& img = images_[it->second];
  const std::int32_t j = img.image[r % img.order];
  if (j < 0) throw Error(ErrorCode::NonCoprimePower, "r shares a factor with the order of an eigenvalue");
  return static_cast<std::size_t>(j);
}

SemisimpleLabel Action::act(const SemisimpleLabel& s, std::int64_t r) const {
  if (s.n != n_ || s.q != q_) throw Error(ErrorCode::DimensionMismatch, "label belongs to a different group");
  const std::uint64_t rr = GaloisElement::make(m_, r).r;
  SemisimpleLabel out{s.n, s.q, {}};
  out.entries.reserve(s.entries.size());
  for (const auto& e : s.entries) out.entries.push_back({polys_[image_of(e.poly, rr)], e.mult});
  std::sort(out.entries.begin(), out.entries.end());
  for (std::size_t i = 1; i < out.entries.size(); ++i) {
    if (out.entries[i].poly == out.entries[i - 1].poly) {
      throw Error(ErrorCode::MergeDetected, "two eigenvalue orbits merged under a coprime power map");
    }
  }
  return out;
}

CharacterLabel Action::act(const CharacterLabel& L, std::int64_t r) const {
  if (L.s.n != n_ || L.s.q != q_) throw Error(ErrorCode::DimensionMismatch, "label belongs to a different group");
  const std::uint64_t rr = GaloisElement::make(m_, r).r;
  std::vector<std::pair<labels::SemisimpleEntry, combinat::Partition>> mapped;
  mapped.reserve(L.s.entries.size());
  for (std::size_t i = 0; i < L.s.entries.size(); ++i) {
    const auto& e = L.s.entries[i];
    mapped.push_back({{polys_[image_of(e.poly, rr)], e.mult}, L.nu[i]});
  }
  std::sort(mapped.begin(), mapped.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  CharacterLabel out{SemisimpleLabel{L.s.n, L.s.q, {}}, {}};
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    if (i > 0 && mapped[i].first.poly == mapped[i - 1].first.poly) {
      throw Error(ErrorCode::MergeDetected, "two eigenvalue orbits merged under a coprime power map");
    }
    out.s.entries.push_back(mapped[i].first);
    out.nu.push_back(mapped[i].second);
  }
  return out;
}

std::vector<std::uint64_t> Action::effective_lifts(const CharacterLabel& L) const {
  // sigma_r only sees r mod e; keep the least unit in each residue class.
  std::uint64_t e = 1;
  for (const auto& entry : L.s.entries) {
    const auto it = index_.find(entry.poly);
    if (it == index_.end()) throw Error(ErrorCode::InvalidLabel, "polynomial is not an eigenvalue orbit of this group");
    e = std::lcm(e, images_[it->second].order);
  }
  std::vector<std::uint64_t> lift(e, 0);
  std::vector<std::uint64_t> out;
  for (auto r : units_) {
    if (lift[r % e] == 0) {
      lift[r % e] = r;
      out.push_back(r);
    }
  }
  return out;
}

ValueFieldDescriptor Action::field_of_values(const CharacterLabel& L) const {
  ValueFieldDescriptor v;
  v.m = m_;
  std::uint64_t e = 1;
  for (const auto& entry : L.s.entries) e = std::lcm(e, images_[index_.at(entry.poly)].order);
  std::vector<char> fixed(e, 0);
  std::vector<std::uint64_t> residues;
  for (auto r : effective_lifts(L)) {
    if (act(L, static_cast<std::int64_t>(r)) == L) {
      fixed[r % e] = 1;
      residues.push_back(r % e);
    }
  }
  std::sort(residues.begin(), residues.end());
  // the full stabilizer is the preimage of this one
  if (!is_subgroup(residues, e)) throw Error(ErrorCode::InvalidLabel, "label stabilizer is not a subgroup");
  for (auto r : units_) {
    if (fixed[r % e]) v.stabilizer.push_back(r);
  }
  v.degree = units_.size() / v.stabilizer.size();
  return v;
}

CharacterLabel Action::orbit_representative(const CharacterLabel& L) const {
  CharacterLabel best = L;
  for (auto r : effective_lifts(L)) {
    auto img = act(L, static_cast<std::int64_t>(r));
    if (img < best) best = std::move(img);
  }
  return best;
}

// ---------------------------------------------------------------------------

CharacterLabel act_on_label(const CharacterLabel& L, std::int64_t r) {
  return Action::get(L.s.n, L.s.q)->act(L, r);
}

SemisimpleLabel act_on_semisimple(const SemisimpleLabel& s, std::int64_t r) {
  return Action::get(s.n, s.q)->act(s, r);
}

ValueFieldDescriptor field_of_values(const CharacterLabel& L) {
  return Action::get(L.s.n, L.s.q)->field_of_values(L);
}

bool is_rational_character(const CharacterLabel& L) { return field_of_values(L).degree == 1; }

std::vector<std::vector<CharacterLabel>> galois_orbits(int n, std::uint64_t q, Exec exec,
                                                       const labels::Limits& limits) {
  const auto chars = labels::enumerate_characters(n, q, limits);
  const auto action = Action::get(n, q);
  std::vector<CharacterLabel> reps(chars.size());
  const auto count = static_cast<std::int64_t>(chars.size());
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < count; ++i) {
      reps[static_cast<std::size_t>(i)] = action->orbit_representative(chars[static_cast<std::size_t>(i)]);
    }
  } else {
    bool failed = false;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        reps[static_cast<std::size_t>(i)] = action->orbit_representative(chars[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp atomic write
        failed = true;
      }
    }
    if (failed) throw Error(ErrorCode::MergeDetected, "orbit sweep failed");
  }
  std::map<CharacterLabel, std::vector<CharacterLabel>> grouped;
  for (std::size_t i = 0; i < chars.size(); ++i) grouped[reps[i]].push_back(chars[i]);
  std::vector<std::vector<CharacterLabel>> out;
  out.reserve(grouped.size());
  for (auto& [rep, members] : grouped) out.push_back(std::move(members));
  return out;
}

}  // namespace galoisjd::galois
