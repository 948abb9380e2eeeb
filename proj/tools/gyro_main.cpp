#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gyro/cayley.hpp"
#include "gyro/core.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite.hpp"
#include "gyro/models.hpp"
#include "gyro/morphisms.hpp"
#include "gyro/structure.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

// Exit codes: 0 success / property holds, 1 property checked and false,
// 2 usage, format or capability errors.
enum ExitCode { kOk = 0, kPropertyFalse = 1, kUsage = 2 };

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string fmt_point(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt_double(v[i]);
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = UINT64_C(0xcbf29ce484222325);
  for (unsigned char c : bytes) {
    h ^= c;
    h *= UINT64_C(0x100000001b3);
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

struct TableInput {
  std::string name;    // "k16" or the file path
  std::string text;    // raw bytes the digest covers
  std::string digest;
};

std::vector<TableInput> gather_inputs(int k16_count,
                                      const std::vector<std::string>& files) {
  std::vector<TableInput> inputs;
  for (int i = 0; i < k16_count; ++i) {
    TableInput in;
    in.name = "k16";
    in.text = gyro::save_table(gyro::k16().table());
    in.digest = hex64(fnv1a64(in.text));
    inputs.push_back(std::move(in));
  }
  for (const std::string& path : files) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    TableInput in;
    in.name = path;
    in.text = buf.str();
    in.digest = hex64(fnv1a64(in.text));
    inputs.push_back(std::move(in));
  }
  return inputs;
}

gyro::FiniteGyrogroup load_gyrogroup(const TableInput& in,
                                     std::string* relabel_note = nullptr) {
  gyro::LoadedTable loaded = gyro::load_table(in.text);
  if (loaded.relabeling && relabel_note)
    *relabel_note = "identity relabeled: " +
                    loaded.relabeling->cycle_string();
  return gyro::FiniteGyrogroup::from_table(std::move(loaded.table));
}

std::vector<int> parse_set_values(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const char* first = item.data();
    const char* last = first + item.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw gyro::PreconditionError("--set expects comma-separated integers");
    out.push_back(v);
  }
  if (out.empty())
    throw gyro::PreconditionError("--set must name at least one element");
  return out;
}

gyro::ElementSet parse_set(const std::string& csv, int order) {
  gyro::ElementSet s = 0;
  for (int v : parse_set_values(csv)) {
    if (v < 0 || v >= order || v >= 64)
      throw gyro::PreconditionError("--set element " + std::to_string(v) +
                                    " outside the carrier 0.." +
                                    std::to_string(order - 1));
    s = gyro::set_insert(s, v);
  }
  return s;
}

std::vector<double> parse_point(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw gyro::PreconditionError("point '" + csv +
                                    "' is not comma-separated reals");
    }
  }
  if (out.empty()) throw gyro::PreconditionError("empty point");
  return out;
}

void emit(const ordered_json& j, bool json_mode, const std::string& text) {
  if (json_mode)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

ordered_json violation_json(const gyro::AxiomViolation& v) {
  return ordered_json{{"axiom", std::string(gyro::to_string(v.axiom))},
                      {"witness", v.witness},
                      {"detail", v.detail}};
}

// Distinct gyrations named in first-occurrence order, row-major: the
// identity is "I", the rest are A, B, ..., Z, AA, AB, ...
std::string gyration_name(int non_identity_index) {
  std::string out;
  int k = non_identity_index;
  for (;;) {
    out.insert(out.begin(), static_cast<char>('A' + k % 26));
    k = k / 26 - 1;
    if (k < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::vector<TableInput>& inputs, bool json_mode) {
  ordered_json results = ordered_json::array();
  std::string text;
  bool all_passed = true;

  for (const TableInput& in : inputs) {
    gyro::CayleyTable t = gyro::parse_table(in.text);
    gyro::AxiomReport report = gyro::verify_axioms(t);
    all_passed = all_passed && report.passed;

    text += "input: " + in.name + "  (order " + std::to_string(t.order) +
            ", digest " + in.digest + ")\n";
    text += std::string("axioms: ") + (report.passed ? "PASS" : "FAIL") + "\n";
    ordered_json jviol = ordered_json::array();
    for (const auto& v : report.violations) {
      text += "  " + std::string(gyro::to_string(v.axiom)) + " witness=[";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        text += (i ? ", " : "") + std::to_string(v.witness[i]);
      text += "]: " + v.detail + "\n";
      jviol.push_back(violation_json(v));
    }
    results.push_back(ordered_json{{"input", in.name},
                                   {"digest", in.digest},
                                   {"order", t.order},
                                   {"passed", report.passed},
                                   {"violations", jviol}});
  }

  emit(ordered_json{{"schema", kSchemaVersion},
                    {"command", "verify"},
                    {"results", results}},
       json_mode, text);
  return all_passed ? kOk : kPropertyFalse;
}

// -------------------------------------------------------------- gyrtable

int cmd_gyrtable(const TableInput& in, bool json_mode) {
  const gyro::FiniteGyrogroup g = load_gyrogroup(in);
  const int n = g.order();

  std::vector<gyro::Permutation> legend;
  std::vector<std::string> names;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const gyro::Permutation p = g.gyration(a, b);
      int idx = -1;
      for (std::size_t i = 0; i < legend.size(); ++i)
        if (legend[i] == p) {
          idx = static_cast<int>(i);
          break;
        }
      if (idx < 0) {
        idx = static_cast<int>(legend.size());
        legend.push_back(p);
        if (p.is_identity())
          names.push_back("I");
        else {
          int non_identity = 0;
          for (const auto& q : legend)
            if (!q.is_identity()) ++non_identity;
          names.push_back(gyration_name(non_identity - 1));
        }
      }
      grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = idx;
    }

  std::size_t width = 1;
  for (const auto& s : names) width = std::max(width, s.size());
  const std::size_t label_width = std::to_string(n - 1).size();

  std::string text = "input: " + in.name + "  (order " + std::to_string(n) +
                     ", digest " + in.digest + ")\n";
  text += "distinct gyrations: " + std::to_string(legend.size()) + "\n";
  for (std::size_t i = 0; i < legend.size(); ++i)
    text += "  " + names[i] + " = " + legend[i].cycle_string() + "\n";

  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  text += pad("", label_width) + " |";
  for (int b = 0; b < n; ++b)
    text += " " + pad(std::to_string(b), std::max(width, std::to_string(b).size()));
  text += "\n";
  for (int a = 0; a < n; ++a) {
    text += pad(std::to_string(a), label_width) + " |";
    for (int b = 0; b < n; ++b)
      text += " " + pad(names[static_cast<std::size_t>(
                            grid[static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(b)])],
                        std::max(width, std::to_string(b).size()));
    text += "\n";
  }

  ordered_json jlegend = ordered_json::array();
  for (std::size_t i = 0; i < legend.size(); ++i)
    jlegend.push_back(ordered_json{{"name", names[i]},
                                   {"cycles", legend[i].cycle_string()},
                                   {"images", legend[i].images()}});
  ordered_json jtable = ordered_json::array();
  for (int a = 0; a < n; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < n; ++b)
      row.push_back(names[static_cast<std::size_t>(
          grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])]);
    jtable.push_back(row);
  }

  emit(ordered_json{{"schema", kSchemaVersion},
                    {"command", "gyrtable"},
                    {"input", in.name},
                    {"digest", in.digest},
                    {"order", n},
                    {"legend", jlegend},
                    {"table", jtable}},
       json_mode, text);
  return kOk;
}

// ------------------------------------------------------------ subs, lsubs

int cmd_subs(const TableInput& in, bool l_only, bool json_mode) {
  const gyro::FiniteGyrogroup g = load_gyrogroup(in);

  std::vector<gyro::Subgyrogroup> subs = gyro::enumerate_subgyrogroups(g);
  ordered_json jsubs = ordered_json::array();
  std::string body;
  int count = 0;
  for (const gyro::Subgyrogroup& s : subs) {
    const bool is_l = gyro::is_l_subgyrogroup(s);
    if (l_only && !is_l) continue;
    ++count;
    body += gyro::set_string(s.members) + "  order " +
            std::to_string(s.size()) + (is_l ? "  L" : "") + "\n";
    jsubs.push_back(ordered_json{{"members", gyro::set_elements(s.members)},
                                 {"order", s.size()},
                                 {"l_subgyrogroup", is_l}});
  }

  std::string text = "input: " + in.name + "  (order " +
                     std::to_string(g.order()) + ", digest " + in.digest +
                     ")\n";
  text += (l_only ? "L-subgyrogroups: " : "subgyrogroups: ") +
          std::to_string(count) + "\n" + body;

  emit(ordered_json{{"schema", kSchemaVersion},
                    {"command", l_only ? "lsubs" : "subs"},
                    {"input", in.name},
                    {"digest", in.digest},
                    {"order", g.order()},
                    {l_only ? "l_subgyrogroups" : "subgyrogroups", jsubs}},
       json_mode, text);
  return kOk;
}

// ---------------------------------------------------------------- cosets

int cmd_cosets(const TableInput& in, const std::string& set_csv,
               bool json_mode) {
  const gyro::FiniteGyrogroup g = load_gyrogroup(in);
  const gyro::ElementSet mask = parse_set(set_csv, g.order());
  const gyro::Subgyrogroup h = gyro::subgyrogroup(g, mask);

  const bool is_l = gyro::is_l_subgyrogroup(h);
  const gyro::CosetDecomposition cosets = gyro::cosets_partition(h);
  const gyro::CosetDecomposition classes = gyro::equivalence_classes(h);

  std::string text = "subgroup: " + gyro::set_string(mask) + "  order " +
                     std::to_string(h.size()) +
                     (is_l ? "  (L-subgyrogroup)\n" : "  (not L)\n");
  text += "left cosets: " + std::to_string(cosets.classes.size()) + "\n";
  for (std::size_t i = 0; i < cosets.classes.size(); ++i)
    text += "  rep " + std::to_string(cosets.representatives[i]) + ": " +
            gyro::set_string(cosets.classes[i]) + "\n";
  text += std::string("partition: ") + (cosets.is_partition ? "yes" : "no") +
          "\n";
  for (const auto& o : cosets.overlaps)
    text += "  overlap " + std::to_string(o.first) + "," +
            std::to_string(o.second) + ": " + gyro::set_string(o.common) +
            "\n";

  text += "equivalence classes: " + std::to_string(classes.classes.size()) +
          "\n";
  for (std::size_t i = 0; i < classes.classes.size(); ++i)
    text += "  rep " + std::to_string(classes.representatives[i]) + ": " +
            gyro::set_string(classes.classes[i]) + "\n";

  ordered_json j{{"schema", kSchemaVersion},
                 {"command", "cosets"},
                 {"input", in.name},
                 {"digest", in.digest},
                 {"subgroup", gyro::set_elements(mask)},
                 {"l_subgyrogroup", is_l}};

  ordered_json jcosets = ordered_json::array();
  for (std::size_t i = 0; i < cosets.classes.size(); ++i)
    jcosets.push_back(
        ordered_json{{"rep", cosets.representatives[i]},
                     {"members", gyro::set_elements(cosets.classes[i])}});
  j["cosets"] = jcosets;
  j["partition"] = cosets.is_partition;
  ordered_json joverlaps = ordered_json::array();
  for (const auto& o : cosets.overlaps)
    joverlaps.push_back(ordered_json{
        {"first", o.first},
        {"second", o.second},
        {"common", gyro::set_elements(o.common)}});
  j["overlaps"] = joverlaps;

  ordered_json jclasses = ordered_json::array();
  for (std::size_t i = 0; i < classes.classes.size(); ++i)
    jclasses.push_back(
        ordered_json{{"rep", classes.representatives[i]},
                     {"members", gyro::set_elements(classes.classes[i])}});
  j["equivalence_classes"] = jclasses;

  if (is_l) {
    const gyro::LagrangeResult lr = gyro::lagrange_check(h);
    text += "index: " + std::to_string(lr.index) + "\n";
    text += "order = index * subgroup order: " +
            std::to_string(lr.order) + " = " + std::to_string(lr.index) +
            " * " + std::to_string(lr.subgroup) + "\n";
    j["lagrange"] = ordered_json{{"order", lr.order},
                                 {"subgroup", lr.subgroup},
                                 {"index", lr.index},
                                 {"divides", lr.divides},
                                 {"product_ok", lr.product_ok}};
  }

  emit(j, json_mode, text);
  return cosets.is_partition ? kOk : kPropertyFalse;
}

// ---------------------------------------------------------------- normal

int cmd_normal(const TableInput& in, const std::string& set_csv,
               bool json_mode) {
  const gyro::FiniteGyrogroup g = load_gyrogroup(in);
  const gyro::ElementSet mask = parse_set(set_csv, g.order());
  const gyro::NormalityReport report = gyro::check_normal(g, mask);

  std::string text = "set: " + gyro::set_string(mask) + "\n";
  if (report.normal) {
    text += "normal: yes\n";
  } else {
    text += "failed stage: " + std::string(gyro::to_string(report.stage)) +
            "\n";
    if (!report.detail.empty()) text += "  " + report.detail + "\n";
    text += "normal: no\n";
  }

  emit(ordered_json{{"schema", kSchemaVersion},
                    {"command", "normal"},
                    {"input", in.name},
                    {"digest", in.digest},
                    {"set", gyro::set_elements(mask)},
                    {"normal", report.normal},
                    {"failed_stage",
                     report.normal ? ordered_json(nullptr)
                                   : ordered_json(std::string(
                                         gyro::to_string(report.stage)))},
                    {"detail", report.detail}},
       json_mode, text);
  return report.normal ? kOk : kPropertyFalse;
}

// -------------------------------------------------------------- quotient

int cmd_quotient(const TableInput& in, const std::string& set_csv,
                 bool json_mode) {
  const gyro::FiniteGyrogroup g = load_gyrogroup(in);
  const gyro::ElementSet mask = parse_set(set_csv, g.order());

  const gyro::NormalityReport report = gyro::check_normal(g, mask);
  if (!report.normal) {
    std::string text = "set: " + gyro::set_string(mask) + "\n";
    text += "failed stage: " + std::string(gyro::to_string(report.stage)) +
            "\n";
    if (!report.detail.empty()) text += "  " + report.detail + "\n";
    text += "quotient: undefined (set is not normal)\n";
    emit(ordered_json{{"schema", kSchemaVersion},
                      {"command", "quotient"},
                      {"input", in.name},
                      {"digest", in.digest},
                      {"set", gyro::set_elements(mask)},
                      {"normal", false},
                      {"failed_stage",
                       std::string(gyro::to_string(report.stage))},
                      {"detail", report.detail}},
         json_mode, text);
    return kPropertyFalse;
  }

  const gyro::QuotientGyrogroup q = gyro::quotient(g, mask);
  std::string text = "kernel: " + gyro::set_string(mask) + "\n";
  text += "quotient order: " + std::to_string(q.group.order()) + "\n";
  for (std::size_t i = 0; i < q.cosets.classes.size(); ++i)
    text += "  " + std::to_string(i) + " = " +
            gyro::set_string(q.cosets.classes[i]) + "\n";
  text += gyro::save_table(q.group.table());

  ordered_json jcosets = ordered_json::array();
  for (const gyro::ElementSet& c : q.cosets.classes)
    jcosets.push_back(gyro::set_elements(c));
  ordered_json jrows = ordered_json::array();
  for (int a = 0; a < q.group.order(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < q.group.order(); ++b)
      row.push_back(q.group.add(a, b));
    jrows.push_back(row);
  }

  emit(ordered_json{{"schema", kSchemaVersion},
                    {"command", "quotient"},
                    {"input", in.name},
                    {"digest", in.digest},
                    {"set", gyro::set_elements(mask)},
                    {"normal", true},
                    {"order", q.group.order()},
                    {"cosets", jcosets},
                    {"table", jrows}},
       json_mode, text);
  return kOk;
}

// -------------------------------------------------------------------- iso

int cmd_iso(const TableInput& a, const TableInput& b, bool json_mode) {
  const gyro::FiniteGyrogroup g1 = load_gyrogroup(a);
  const gyro::FiniteGyrogroup g2 = load_gyrogroup(b);

  const std::optional<std::vector<int>> iso = gyro::find_isomorphism(g1, g2);
  std::string text;
  if (iso) {
    text = "isomorphic: yes\nmap:";
    for (int v : *iso) text += " " + std::to_string(v);
    text += "\n";
  } else {
    text = "isomorphic: no\n";
  }

  emit(ordered_json{{"schema", kSchemaVersion},
                    {"command", "iso"},
                    {"inputs", ordered_json::array({a.name, b.name})},
                    {"digests", ordered_json::array({a.digest, b.digest})},
                    {"isomorphic", iso.has_value()},
                    {"map", iso ? ordered_json(*iso) : ordered_json(nullptr)}},
       json_mode, text);
  return iso ? kOk : kPropertyFalse;
}

// ----------------------------------------------------------------- cayley

int cmd_cayley(const TableInput& in, bool exhaustive, bool want_sampled,
               int samples, std::optional<std::uint64_t> seed,
               bool json_mode) {
  const gyro::FiniteGyrogroup g = load_gyrogroup(in);
  // Small carriers get the complete check by default; sampling only when
  // asked for or when the order forces it.
  if (!want_sampled && g.order() <= gyro::kSymExhaustiveMaxOrder)
    exhaustive = true;

  const bool comp = gyro::composition_law_check(g);

  std::vector<gyro::Permutation> distinct;
  for (const gyro::Permutation& p : gyro::gyration_table(g)) {
    bool known = false;
    for (const auto& q : distinct) known = known || q == p;
    if (!known) distinct.push_back(p);
  }
  bool commutation = true;
  for (const gyro::Permutation& p : distinct)
    commutation = commutation && gyro::commutation_check(g, p);

  gyro::SymVerifyReport report;
  if (exhaustive) {
    report = gyro::verify_sym_exhaustive(g);
  } else {
    if (!seed)
      throw gyro::PreconditionError(
          "sampled Sym verification requires --seed");
    report = gyro::verify_sym_sampled(g, samples, *seed);
  }

  const bool ok = comp && commutation && report.axioms.passed;

  std::string text = "input: " + in.name + "  (order " +
                     std::to_string(g.order()) + ", digest " + in.digest +
                     ")\n";
  text += std::string("composition law: ") + (comp ? "PASS" : "FAIL") + "\n";
  text += std::string("automorphism commutation: ") +
          (commutation ? "PASS" : "FAIL") + " (" +
          std::to_string(distinct.size()) + " distinct gyrations)\n";
  if (exhaustive)
    text += "sym verification (exhaustive, " +
            std::to_string(report.element_count) + " elements): " +
            (report.axioms.passed ? "PASS" : "FAIL") + "\n";
  else
    text += "sym verification (sampled, " + std::to_string(report.samples) +
            " triples, seed " + std::to_string(*seed) + "): " +
            (report.axioms.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& v : report.axioms.violations)
    text += "  " + std::string(gyro::to_string(v.axiom)) + ": " + v.detail +
            "\n";

  ordered_json jviol = ordered_json::array();
  for (const auto& v : report.axioms.violations)
    jviol.push_back(violation_json(v));

  emit(ordered_json{
           {"schema", kSchemaVersion},
           {"command", "cayley"},
           {"input", in.name},
           {"digest", in.digest},
           {"order", g.order()},
           {"composition_law", comp},
           {"automorphism_commutation", commutation},
           {"distinct_gyrations", distinct.size()},
           {"mode", exhaustive ? "exhaustive" : "sampled"},
           {"element_count",
            exhaustive ? ordered_json(report.element_count)
                       : ordered_json(nullptr)},
           {"samples", exhaustive ? ordered_json(nullptr)
                                  : ordered_json(report.samples)},
           {"seed", seed ? ordered_json(*seed) : ordered_json(nullptr)},
           {"passed", report.axioms.passed},
           {"violations", jviol}},
       json_mode, text);
  return ok ? kOk : kPropertyFalse;
}

// ----------------------------------------------------------------- models

struct ModelChoice {
  bool disk = false;
  bool ball = false;
  bool einstein = false;
  int dim = 3;
  double radius = 1.0;
  double light_speed = 1.0;
  std::optional<double> tolerance;
};

template <typename M>
int run_model(const M& model, const std::string& model_name, double tol,
              const std::vector<std::string>& add_args,
              const std::vector<std::string>& gyr_args, bool suite,
              int samples, std::optional<std::uint64_t> seed, int dim,
              bool json_mode) {
  ordered_json j{{"schema", kSchemaVersion},
                 {"command", "models"},
                 {"model", model_name},
                 {"dim", dim},
                 {"tolerance", tol}};
  std::string text;

  auto to_element = [&](const std::string& csv) {
    std::vector<double> p = parse_point(csv);
    if (static_cast<int>(p.size()) != dim)
      throw gyro::PreconditionError("point '" + csv + "' must have " +
                                    std::to_string(dim) + " coordinates");
    if constexpr (std::is_same_v<M, gyro::MobiusDisk>)
      return gyro::DiskPoint{p[0], p[1]};
    else
      return p;
  };
  auto to_vec = [&](const typename M::element_type& e) {
    if constexpr (std::is_same_v<M, gyro::MobiusDisk>)
      return std::vector<double>{e.real(), e.imag()};
    else
      return e;
  };

  int code = kOk;
  if (!add_args.empty()) {
    const auto r = model.add(to_element(add_args[0]), to_element(add_args[1]));
    text += fmt_point(to_vec(r)) + "\n";
    j["add"] = ordered_json{{"a", to_vec(to_element(add_args[0]))},
                            {"b", to_vec(to_element(add_args[1]))},
                            {"result", to_vec(r)}};
  }
  if (!gyr_args.empty()) {
    const auto r = gyro::gyr(model, to_element(gyr_args[0]),
                             to_element(gyr_args[1]), to_element(gyr_args[2]));
    text += fmt_point(to_vec(r)) + "\n";
    j["gyr"] = ordered_json{{"a", to_vec(to_element(gyr_args[0]))},
                            {"b", to_vec(to_element(gyr_args[1]))},
                            {"c", to_vec(to_element(gyr_args[2]))},
                            {"result", to_vec(r)}};
  }
  if (suite) {
    if (!seed)
      throw gyro::PreconditionError("--suite requires --seed");
    const gyro::ModelSuiteReport report =
        gyro::axiom_suite(model, samples, *seed);
    const bool passed = report.within(tol);
    text += "model: " + model_name + "  (dim " + std::to_string(dim) + ")\n";
    text += "samples: " + std::to_string(report.samples) + "  seed: " +
            std::to_string(report.seed) + "\n";
    ordered_json jlaws = ordered_json::array();
    for (const auto& law : report.laws) {
      text += law.law + ": max deviation " + fmt_double(law.max_deviation) +
              "\n";
      jlaws.push_back(ordered_json{{"law", law.law},
                                   {"max_deviation", law.max_deviation}});
    }
    text += "closure margin: " + fmt_double(report.min_closure_margin) + "\n";
    text += "max deviation: " + fmt_double(report.max_deviation()) +
            "  tolerance: " + fmt_double(tol) + "\n";
    text += std::string("suite: ") + (passed ? "PASS" : "FAIL") + "\n";
    j["suite"] = ordered_json{
        {"samples", report.samples},
        {"seed", report.seed},
        {"boundary_margin", report.boundary_margin},
        {"laws", jlaws},
        {"min_closure_margin", report.min_closure_margin},
        {"max_deviation", report.max_deviation()},
        {"passed", passed}};
    if (!passed) code = kPropertyFalse;
  }

  emit(j, json_mode, text);
  return code;
}

int cmd_models(const ModelChoice& choice,
               const std::vector<std::string>& add_args,
               const std::vector<std::string>& gyr_args, bool suite,
               int samples, std::optional<std::uint64_t> seed,
               bool json_mode) {
  const int picked = (choice.disk ? 1 : 0) + (choice.ball ? 1 : 0) +
                     (choice.einstein ? 1 : 0);
  if (picked != 1)
    throw gyro::PreconditionError(
        "pick exactly one of --disk, --ball, --einstein");
  if (!add_args.empty() && add_args.size() != 2)
    throw gyro::PreconditionError("--add expects two points");
  if (!gyr_args.empty() && gyr_args.size() != 3)
    throw gyro::PreconditionError("--gyr expects three points");
  if (add_args.empty() && gyr_args.empty() && !suite)
    throw gyro::PreconditionError(
        "nothing to do: pass --add, --gyr or --suite");

  if (choice.disk) {
    gyro::MobiusDisk model(choice.tolerance.value_or(1e-12));
    return run_model(model, "disk", model.tolerance(), add_args, gyr_args,
                     suite, samples, seed, 2, json_mode);
  }
  if (choice.ball) {
    gyro::MobiusBall model(choice.dim, choice.radius,
                           choice.tolerance.value_or(1e-12));
    return run_model(model, "ball", model.tolerance(), add_args, gyr_args,
                     suite, samples, seed, choice.dim, json_mode);
  }
  gyro::EinsteinBall model(choice.dim, choice.light_speed,
                           choice.tolerance.value_or(1e-9));
  return run_model(model, "einstein", model.tolerance(), add_args, gyr_args,
                   suite, samples, seed, choice.dim, json_mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gyrogroup construction, verification and analysis"};
  app.require_subcommand(1);

  struct Common {
    int k16 = 0;
    std::vector<std::string> files;
    bool json = false;
    std::string set_csv;
  };

  auto add_inputs = [](CLI::App* cmd, Common& c, bool with_set) {
    cmd->add_flag("--k16", c.k16, "use the built-in 16-element example");
    cmd->add_option("files", c.files, "table files");
    cmd->add_flag("--json", c.json, "machine-readable output");
    if (with_set)
      cmd->add_option("--set", c.set_csv, "comma-separated element list")
          ->required();
  };

  Common verify_c, gyrtable_c, subs_c, lsubs_c, cosets_c, normal_c,
      quotient_c, iso_c, cayley_c;

  CLI::App* verify = app.add_subcommand("verify", "check the axioms");
  add_inputs(verify, verify_c, false);

  CLI::App* gyrtable =
      app.add_subcommand("gyrtable", "print the gyration table");
  add_inputs(gyrtable, gyrtable_c, false);

  CLI::App* subs = app.add_subcommand("subs", "enumerate subgyrogroups");
  add_inputs(subs, subs_c, false);

  CLI::App* lsubs = app.add_subcommand("lsubs", "enumerate L-subgyrogroups");
  add_inputs(lsubs, lsubs_c, false);

  CLI::App* cosets =
      app.add_subcommand("cosets", "left cosets and equivalence classes");
  add_inputs(cosets, cosets_c, true);

  CLI::App* normal = app.add_subcommand("normal", "test normality");
  add_inputs(normal, normal_c, true);

  CLI::App* quotient = app.add_subcommand("quotient", "quotient table");
  add_inputs(quotient, quotient_c, true);

  CLI::App* iso =
      app.add_subcommand("iso", "search for an isomorphism of two tables");
  add_inputs(iso, iso_c, false);

  CLI::App* cayley = app.add_subcommand(
      "cayley", "left-translation factorization checks on Sym(G)");
  add_inputs(cayley, cayley_c, false);
  bool cayley_exhaustive = false;
  int cayley_samples = 10000;
  std::uint64_t cayley_seed = 0;
  cayley->add_flag("--exhaustive", cayley_exhaustive,
                   "verify all of Sym(G); order <= 4 only");
  CLI::Option* cayley_samples_opt =
      cayley->add_option("--samples", cayley_samples, "sampled triples");
  CLI::Option* cayley_seed_opt =
      cayley->add_option("--seed", cayley_seed, "sampling seed");

  CLI::App* models = app.add_subcommand("models", "continuous models");
  ModelChoice choice;
  std::vector<std::string> add_args, gyr_args;
  bool models_suite = false;
  bool models_json = false;
  int models_samples = 10000;
  std::uint64_t models_seed = 0;
  models->add_flag("--disk", choice.disk, "complex unit disk");
  models->add_flag("--ball", choice.ball, "real Mobius ball");
  models->add_flag("--einstein", choice.einstein, "velocity ball");
  models->add_option("--dim", choice.dim, "dimension for ball models");
  models->add_option("--radius", choice.radius, "ball radius");
  models->add_option("--c", choice.light_speed, "light speed");
  models->add_option("--tolerance", choice.tolerance, "comparison tolerance");
  models->add_option("--add", add_args, "two points to add")->expected(2);
  models->add_option("--gyr", gyr_args, "three points: gyr[a,b]c")
      ->expected(3);
  models->add_flag("--suite", models_suite, "sampled law suite");
  models->add_option("--samples", models_samples, "suite sample count");
  CLI::Option* models_seed_opt =
      models->add_option("--seed", models_seed, "sampling seed");
  models->add_flag("--json", models_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    auto single_input = [](const Common& c) {
      auto inputs = gather_inputs(c.k16, c.files);
      if (inputs.size() != 1)
        throw gyro::PreconditionError("expected exactly one input table");
      return inputs.front();
    };

    if (verify->parsed()) {
      auto inputs = gather_inputs(verify_c.k16, verify_c.files);
      if (inputs.empty())
        throw gyro::PreconditionError("no input tables given");
      return cmd_verify(inputs, verify_c.json);
    }
    if (gyrtable->parsed())
      return cmd_gyrtable(single_input(gyrtable_c), gyrtable_c.json);
    if (subs->parsed())
      return cmd_subs(single_input(subs_c), false, subs_c.json);
    if (lsubs->parsed())
      return cmd_subs(single_input(lsubs_c), true, lsubs_c.json);
    if (cosets->parsed())
      return cmd_cosets(single_input(cosets_c), cosets_c.set_csv,
                        cosets_c.json);
    if (normal->parsed())
      return cmd_normal(single_input(normal_c), normal_c.set_csv,
                        normal_c.json);
    if (quotient->parsed())
      return cmd_quotient(single_input(quotient_c), quotient_c.set_csv,
                          quotient_c.json);
    if (iso->parsed()) {
      auto inputs = gather_inputs(iso_c.k16, iso_c.files);
      if (inputs.size() != 2)
        throw gyro::PreconditionError("iso expects exactly two inputs");
      return cmd_iso(inputs[0], inputs[1], iso_c.json);
    }
    if (cayley->parsed()) {
      std::optional<std::uint64_t> seed;
      if (cayley_seed_opt->count() > 0) seed = cayley_seed;
      const bool want_sampled =
          cayley_samples_opt->count() > 0 || seed.has_value();
      return cmd_cayley(single_input(cayley_c), cayley_exhaustive,
                        want_sampled, cayley_samples, seed, cayley_c.json);
    }
    if (models->parsed()) {
      std::optional<std::uint64_t> seed;
      if (models_seed_opt->count() > 0) seed = models_seed;
      return cmd_models(choice, add_args, gyr_args, models_suite,
                        models_samples, seed, models_json);
    }
    throw gyro::PreconditionError("no command given");
  } catch (const gyro::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gyro::NotAGyrogroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.report().violations)
      std::cerr << "  " << gyro::to_string(v.axiom) << ": " << v.detail
                << "\n";
    return kUsage;
  } catch (const gyro::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gyro::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
