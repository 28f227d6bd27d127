#include "galoisjd/json_io.hpp"

#include <limits>
#include <string>

namespace galoisjd::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return x.convert_to<std::int64_t>();
  return x.str();
}

json field_to_json(const ffield::FiniteField& F) {
  return {{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

json poly_to_json(const ffield::IrreduciblePoly& f) {
  json out = json::array();
  for (auto c : f.coeffs()) out.push_back(c.code);
  return out;
}

ffield::IrreduciblePoly poly_from_json(const ffield::FiniteField& F, const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficient codes");
  ffield::Poly coeffs;
  for (const auto& c : j) {
    const auto code = integer(c, "coefficient");
    if (code < 0) bad("coefficient codes are nonnegative");
    coeffs.push_back(F.from_code(static_cast<std::uint64_t>(code)));
  }
  return ffield::IrreduciblePoly::checked(F, std::move(coeffs));
}

json partition_to_json(const combinat::Partition& p) { return p.parts(); }

combinat::Partition partition_from_json(const json& j) {
  if (!j.is_array()) bad("partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(static_cast<int>(integer(x, "part")));
  return combinat::Partition(std::move(parts));
}

json semisimple_to_json(const labels::SemisimpleLabel& s) {
  json entries = json::array();
  for (const auto& e : s.entries) entries.push_back({{"poly", poly_to_json(e.poly)}, {"mult", e.mult}});
  return entries;
}

json label_to_json(const labels::CharacterLabel& L) {
  json nu = json::array();
  for (const auto& p : L.nu) nu.push_back(partition_to_json(p));
  return {{"n", L.s.n}, {"q", L.s.q}, {"s", semisimple_to_json(L.s)}, {"nu", nu}};
}

labels::CharacterLabel label_from_json(const json& j, int n, std::uint64_t q) {
  if (!j.is_object()) bad("label must be an object");
  if (j.contains("n")) n = static_cast<int>(integer(j.at("n"), "n"));
  if (j.contains("q")) q = static_cast<std::uint64_t>(integer(j.at("q"), "q"));
  if (n <= 0 || q == 0) bad("label needs n and q");
  const auto F = ffield::FiniteField::of_order(q);
  const auto& s = field(j, "s");
  if (!s.is_array()) bad("'s' must be an array");
  std::vector<labels::SemisimpleEntry> entries;
  for (const auto& e : s) {
    entries.push_back({poly_from_json(*F, field(e, "poly")), static_cast<int>(integer(field(e, "mult"), "mult"))});
  }
  std::vector<combinat::Partition> nu;
  if (j.contains("nu")) {
    if (!j.at("nu").is_array()) bad("'nu' must be an array");
    for (const auto& p : j.at("nu")) nu.push_back(partition_from_json(p));
  } else {
    // Omitted nu means the trivial partition (m) for every entry.
    for (const auto& e : entries) nu.push_back(combinat::Partition({e.mult}));
  }
  return labels::make_character(n, static_cast<std::uint32_t>(q), std::move(entries), std::move(nu));
}

json cyclo_to_json(const cyclo::CycloNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({c.numerator(), c.denominator()});
  return {{"m", x.m()}, {"coeffs", coeffs}};
}

json value_field_to_json(const galois::ValueFieldDescriptor& v) {
  return {{"m", v.m}, {"stabilizer", v.stabilizer}, {"degree", v.degree}};
}

json exponent_report(const expo::GroupSpec& g) {
  const auto dual = expo::dual_of(g);
  const auto value = expo::exponent_formula(g);
  const auto dual_value = expo::exponent_formula(dual);
  return {{"family", expo::family_name(g.family)},
          {"rank", g.rank},
          {"q", g.q},
          {"value", big_to_json(value)},
          {"dual_family", expo::family_name(dual.family)},
          {"dual_value", big_to_json(dual_value)},
          {"equal", value == dual_value}};
}

json duality_to_json(const expo::DualityReport& r) {
  return {{"m", r.m},
          {"q", r.q},
          {"sp", big_to_json(r.sp_exponent)},
          {"so", big_to_json(r.so_exponent)},
          {"equal", r.equal}};
}

json report_to_json(const oracle::Report& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) mismatches.push_back({{"check", m.check}, {"detail", m.detail}});
  return {{"name", r.name},
          {"q", r.q},
          {"checks", r.checks},
          {"mismatch_count", r.mismatches.size()},
          {"mismatches", mismatches}};
}

oracle::MatrixGroup matrix_group_from_json(const json& j) {
  oracle::MatrixGroup G;
  const auto dim = integer(field(j, "dim"), "dim");
  const auto p = integer(field(j, "p"), "p");
  const auto k = j.contains("k") ? integer(j.at("k"), "k") : 1;
  if (dim < 1 || dim > 16) bad("dim must lie in [1, 16]");
  if (p < 2 || k < 1) bad("p must be >= 2 and k >= 1");
  G.dim = static_cast<unsigned>(dim);
  G.field = ffield::FiniteField::build(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
  G.name = j.value("name", std::string("file group"));
  const auto& gens = field(j, "gens");
  if (!gens.is_array()) bad("'gens' must be an array of matrices");
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != G.dim) bad("each generator must have dim rows");
    oracle::Matrix a;
    for (const auto& row : g) {
      if (!row.is_array() || row.size() != G.dim) bad("each row must have dim entries");
      for (const auto& x : row) {
        const auto code = integer(x, "matrix entry");
        if (code < 0) bad("matrix entries are nonnegative codes");
        a.push_back(G.field->from_code(static_cast<std::uint64_t>(code)).code);
      }
    }
    G.gens.push_back(std::move(a));
  }
  if (j.contains("order")) G.expected_order = BigInt(integer(j.at("order"), "order"));
  return G;
}

}  // namespace galoisjd::json_io
