// Command-line front end. Every subcommand prints one JSON document.
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "galoisjd/expo.hpp"
#include "galoisjd/galois.hpp"
#include "galoisjd/json_io.hpp"
#include "galoisjd/labels.hpp"
#include "galoisjd/oracle/bfs.hpp"
#include "galoisjd/oracle/gl2.hpp"

namespace {

using namespace galoisjd;
using json_io::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
  bool pretty = false;
  bool timing = false;
  bool serial = false;
  std::uint64_t max_q = labels::Limits{}.max_q;
  std::uint64_t max_order = oracle::kBfsMaxOrder;

  int n = 2;
  std::uint64_t q = 2;
  std::int64_t r = 1;
  std::optional<std::int64_t> r_opt;
  std::string label;
  std::string family = "gl";
  unsigned rank = 1;
  std::optional<unsigned> m_opt;
  std::optional<std::uint64_t> q_opt;
  std::string file;
};

Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

labels::Limits limits_of(const Options& o) {
  labels::Limits l;
  l.max_q = o.max_q;
  return l;
}

labels::CharacterLabel parse_label(const Options& o) {
  json j;
  try {
    j = json::parse(o.label);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("--label is not valid JSON: ") + e.what());
  }
  auto L = json_io::label_from_json(j, o.n, o.q);
  if (L.s.n != o.n || L.s.q != o.q) throw Error(ErrorCode::InvalidLabel, "label does not belong to GL_n(q) for --n/--q");
  return L;
}

void check_q(const Options& o) {
  if (o.q > o.max_q) {
    throw Error(ErrorCode::DegenerateSize, "q = " + std::to_string(o.q) + " exceeds --max-q " + std::to_string(o.max_q));
  }
}

int cmd_classes(const Options& o, json& out) {
  check_q(o);
  json list = json::array();
  const auto all = labels::enumerate_semisimple(o.n, o.q, limits_of(o));
  const BigInt group = labels::gl_order(o.n, BigInt(o.q));
  for (const auto& s : all) {
    json shape = json::array();
    for (const auto& f : labels::centralizer_shape(s)) shape.push_back({{"degree", f.degree}, {"mult", f.mult}});
    const BigInt cent = labels::centralizer_order(s);
    list.push_back({{"s", json_io::semisimple_to_json(s)},
                    {"centralizer", shape},
                    {"centralizer_order", json_io::big_to_json(cent)},
                    {"class_size", json_io::big_to_json(group / cent)},
                    {"order", labels::semisimple_order(s)},
                    {"series_size", labels::lusztig_series(s).size()}});
  }
  out = {{"n", o.n}, {"q", o.q}, {"count", all.size()}, {"classes", list}};
  return kOk;
}

int cmd_chars(const Options& o, json& out) {
  check_q(o);
  json list = json::array();
  const auto all = labels::enumerate_characters(o.n, o.q, limits_of(o));
  for (const auto& L : all) {
    list.push_back({{"label", json_io::label_to_json(L)}, {"degree", json_io::big_to_json(labels::character_degree(L))}});
  }
  out = {{"n", o.n},
         {"q", o.q},
         {"count", all.size()},
         {"group_order", json_io::big_to_json(labels::gl_order(o.n, BigInt(o.q)))},
         {"degree_square_sum", json_io::big_to_json(labels::degree_square_sum(all, exec_of(o)))},
         {"characters", list}};
  return kOk;
}

int cmd_act(const Options& o, json& out) {
  check_q(o);
  const auto L = parse_label(o);
  const auto action = galois::Action::get(o.n, o.q);
  const auto sigma = galois::GaloisElement::make(action->m(), o.r);
  out = {{"m", action->m()},
         {"r", sigma.r},
         {"label", json_io::label_to_json(L)},
         {"image", json_io::label_to_json(action->act(L, o.r))}};
  return kOk;
}

int cmd_orbits(const Options& o, json& out) {
  check_q(o);
  const auto orbits = galois::galois_orbits(o.n, o.q, exec_of(o), limits_of(o));
  json list = json::array();
  json sizes = json::array();
  for (const auto& orbit : orbits) {
    json members = json::array();
    for (const auto& L : orbit) members.push_back(json_io::label_to_json(L));
    list.push_back(members);
    sizes.push_back(orbit.size());
  }
  out = {{"n", o.n},
         {"q", o.q},
         {"m", galois::ambient_exponent(o.n, o.q)},
         {"count", orbits.size()},
         {"sizes", sizes},
         {"orbits", list}};
  return kOk;
}

int cmd_field(const Options& o, json& out) {
  check_q(o);
  const auto L = parse_label(o);
  const auto v = galois::Action::get(o.n, o.q)->field_of_values(L);
  out = json_io::value_field_to_json(v);
  out["label"] = json_io::label_to_json(L);
  out["rational"] = v.degree == 1;
  return kOk;
}

int cmd_exponent(const Options& o, json& out) {
  out = json_io::exponent_report(expo::GroupSpec::make(expo::parse_family(o.family), o.rank, o.q));
  return kOk;
}

int cmd_verify_gl2(const Options& o, json& out) {
  std::vector<oracle::Report> reports;
  if (o.r_opt) {
    reports.push_back(oracle::verify_main_theorem(o.q, *o.r_opt));
  } else {
    reports.push_back(oracle::verify_table(o.q));
    reports.push_back(oracle::verify_main_theorem_all(o.q, exec_of(o)));
    reports.push_back(oracle::verify_field_of_values(o.q, exec_of(o)));
    if (o.q <= 7) {
      reports.push_back(oracle::verify_induction_commutes(o.q));
      reports.push_back(oracle::verify_inner_product_property(o.q));
      reports.push_back(oracle::verify_series(o.q, exec_of(o)));
    }
  }
  oracle::Report total{"verify-gl2", o.q, 0, {}};
  json parts = json::array();
  for (auto& rep : reports) {
    json part = json_io::report_to_json(rep);
    part.erase("mismatches");
    parts.push_back(part);
    total.merge(std::move(rep));
  }
  out = json_io::report_to_json(total);
  out["m"] = galois::ambient_exponent(2, o.q);
  out["reports"] = parts;
  return total.ok() ? kOk : kMismatch;
}

int cmd_verify_dual(const Options& o, json& out) {
  std::vector<std::pair<unsigned, std::uint64_t>> cases;
  if (o.m_opt || o.q_opt) {
    if (!o.m_opt || !o.q_opt) throw Error(ErrorCode::DegenerateSize, "give both --m and --q, or neither");
    cases.emplace_back(*o.m_opt, *o.q_opt);
  } else {
    for (unsigned m = 1; m <= 6; ++m) {
      for (std::uint64_t q : {3, 5, 7, 9}) cases.emplace_back(m, q);
    }
  }
  json list = json::array();
  bool all_equal = true;
  for (auto [m, q] : cases) {
    const auto rep = expo::check_duality_equality(m, q);
    all_equal = all_equal && rep.equal;
    list.push_back(json_io::duality_to_json(rep));
  }
  out = {{"count", cases.size()}, {"all_equal", all_equal}, {"cases", list}};
  return all_equal ? kOk : kMismatch;
}

int cmd_bfs(const Options& o, json& out) {
  oracle::MatrixGroup G;
  std::optional<expo::GroupSpec> spec;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + o.file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, o.file + ": " + e.what());
    }
    G = json_io::matrix_group_from_json(j);
  } else {
    spec = expo::GroupSpec::make(expo::parse_family(o.family), o.rank, o.q);
    G = oracle::MatrixGroup::builtin(*spec);
  }
  int code = kOk;
  std::vector<oracle::Matrix> elements;
  try {
    elements = oracle::bfs_closure(G, o.max_order);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrderMismatch) throw;
    out = {{"group", G.name}, {"error", "OrderMismatch"}, {"message", e.what()}};
    return kMismatch;
  }
  const auto exponent = oracle::exponent_of(G, elements, exec_of(o));
  out = {{"group", G.name}, {"dim", G.dim}, {"order", elements.size()}, {"exponent", exponent}};
  if (spec) {
    const auto formula = expo::exponent_formula(*spec);
    out["formula"] = json_io::big_to_json(formula);
    out["equal"] = formula == exponent;
    if (formula != exponent) code = kMismatch;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois action on Jordan labels of GL_n(q) characters, with GL_2 and matrix-group oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent the JSON output");
  app.add_flag("--timing", o.timing, "Add an elapsed-seconds field");
  app.add_flag("--serial", o.serial, "Use the serial reference kernels");
  app.add_option("--max-q", o.max_q, "Largest q accepted by enumerations")->capture_default_str();
  app.add_option("--max-order", o.max_order, "Largest group order the BFS will build")->capture_default_str();

  auto add_nq = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Rank n of GL_n")->required()->check(CLI::PositiveNumber);
    sub->add_option("--q", o.q, "Field order")->required();
  };

  std::function<int(const Options&, json&)> run;
  auto* classes = app.add_subcommand("classes", "Semisimple classes of GL_n(q)");
  add_nq(classes);
  classes->callback([&] { run = cmd_classes; });

  auto* chars = app.add_subcommand("chars", "Character labels of GL_n(q) with degrees");
  add_nq(chars);
  chars->callback([&] { run = cmd_chars; });

  auto* act = app.add_subcommand("act", "Image of a label under sigma_r");
  add_nq(act);
  act->add_option("--r", o.r, "Residue coprime to the exponent")->required();
  act->add_option("--label", o.label, "Label JSON")->required();
  act->callback([&] { run = cmd_act; });

  auto* orbits = app.add_subcommand("orbits", "Galois orbits on Irr(GL_n(q))");
  add_nq(orbits);
  orbits->callback([&] { run = cmd_orbits; });

  auto* field = app.add_subcommand("field", "Field of values of a label");
  add_nq(field);
  field->add_option("--label", o.label, "Label JSON")->required();
  field->callback([&] { run = cmd_field; });

  auto* exponent = app.add_subcommand("exponent", "Exponent formula and its dual");
  exponent->add_option("--family", o.family, "gl, sp or so")->required();
  exponent->add_option("--rank", o.rank, "n for GL_n, m for Sp_2m / SO_2m+1")->required()->check(CLI::PositiveNumber);
  exponent->add_option("--q", o.q, "Field order")->required();
  exponent->callback([&] { run = cmd_exponent; });

  auto* verify = app.add_subcommand("verify-gl2", "Check the GL_2(q) table against the label predictions");
  verify->add_option("--q", o.q, "Field order, 2..9")->required();
  verify->add_option("--r", o.r_opt, "Check a single residue");
  verify->callback([&] { run = cmd_verify_gl2; });

  auto* dual = app.add_subcommand("verify-dual-exponent", "Sp_2m vs SO_2m+1 exponents");
  dual->add_option("--m", o.m_opt, "Rank m (default: sweep m <= 6, odd q <= 9)");
  dual->add_option("--q", o.q_opt, "Odd field order");
  dual->callback([&] { run = cmd_verify_dual; });

  auto* bfs = app.add_subcommand("bfs", "Order and exponent of a matrix group by closure");
  bfs->add_option("--family", o.family, "gl, sp or so");
  bfs->add_option("--rank", o.rank, "Rank parameter");
  bfs->add_option("--q", o.q, "Field order");
  bfs->add_option("--file", o.file, "JSON generators {dim, p, k, gens}");
  bfs->callback([&] { run = cmd_bfs; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json out;
  int code = kOk;
  try {
    code = run(o, out);
  } catch (const Error& e) {
    std::cerr << json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }
  if (o.timing) {
    out["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << out.dump(o.pretty ? 2 : -1) << '\n';
  return code;
}
