// Batch front end: KL polynomials, cells, traces, symbols, classification
// tables and verification suites as JSON or TSV.
//
// Exit codes: 0 success, 1 verification failure (report on the output),
// 2 usage error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ht/classify.h"
#include "ht/json_io.h"
#include "ht/reps.h"
#include "ht/suites.h"

using namespace ht;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int n = 0;
  std::string format = "json";
  std::string out;
  std::string suite;
  std::string action;
  std::string set;
  bool e6_cells = false;
  bool e6_verbatim = false;
};

bool is_twisted(const std::string& f) { return f == "2A" || f == "2D" || f == "3D4" || f == "2E6"; }

bool is_untwisted(const std::string& f) {
  if (f.size() < 2 || std::string("ABCDEFG").find(f[0]) == std::string::npos) return false;
  return f.find_first_not_of("0123456789", 1) == std::string::npos;
}

// Validates the system flags before anything is computed.
void check_system(const Options& o, bool twisted_only) {
  if (o.family.empty()) throw UsageError("--family is required");
  if (is_twisted(o.family)) {
    if ((o.family == "2A" || o.family == "2D") && o.n < 2) throw UsageError("--n >= 2 is required for " + o.family);
  } else if (twisted_only || !is_untwisted(o.family)) {
    throw UsageError("unsupported family: " + o.family);
  }
}

bool is_e6(const std::string& f) { return f == "2E6" || f == "E6"; }

void require_e6_flag(const Options& o) {
  if (is_e6(o.family) && !o.e6_cells) throw UsageError("E6 Hecke-side computations need --enable-e6-cells");
  if (is_e6(o.family)) std::cerr << "building W(E6) KL and cell data; this takes a long time\n";
}

SysPtr system_of(const Options& o) { return build_system(o.family, is_twisted(o.family) ? o.n : 0); }

std::string tsv_line(std::initializer_list<std::string> fields) {
  std::string s;
  for (const auto& f : fields) s += (s.empty() ? "" : "\t") + f;
  return s + "\n";
}

int cmd_hecke(const Options& o, std::ostream& os) {
  check_system(o, false);
  require_e6_flag(o);
  auto sys = system_of(o);
  const WeylGroup& W = sys->W();
  auto kl = shared_kl_table(sys->W_ptr());
  Json rows = Json::array();
  std::string tsv = tsv_line({"y", "x", "P"});
  for (int x = 0; x < static_cast<int>(W.size()); ++x)
    for (int y = 0; y <= x; ++y) {
      const LaurentPoly& p = kl->P(y, x);
      if (p.is_zero()) continue;
      if (o.format == "tsv")
        tsv += tsv_line({W.word_string(y), W.word_string(x), p.str("q")});
      else
        rows.push_back({{"y", W.word_string(y)}, {"x", W.word_string(x)}, {"P", to_json(p)}});
    }
  os << (o.format == "tsv" ? tsv : dump(rows));
  return 0;
}

int cmd_cells(const Options& o, std::ostream& os) {
  check_system(o, false);
  require_e6_flag(o);
  auto sys = system_of(o);
  const WeylGroup& W = sys->W();
  auto cd = shared_cell_data(sys->W_ptr());
  auto stable = eps_stable_cells(*sys, *cd);
  std::set<int> st(stable.begin(), stable.end());
  if (o.format == "tsv") {
    os << tsv_line({"cell", "a", "eps_stable", "element", "distinguished"});
    for (std::size_t c = 0; c < cd->cells().size(); ++c)
      for (int z : cd->cells()[c])
        os << tsv_line({std::to_string(c), std::to_string(cd->cell_a(static_cast<int>(c))),
                        st.count(static_cast<int>(c)) ? "1" : "0", W.word_string(z), cd->is_distinguished(z) ? "1" : "0"});
    return 0;
  }
  Json cells = Json::array();
  for (std::size_t c = 0; c < cd->cells().size(); ++c) {
    Json members = Json::array();
    for (int z : cd->cells()[c]) members.push_back(W.word_string(z));
    cells.push_back({{"index", c},
                     {"a", cd->cell_a(static_cast<int>(c))},
                     {"eps_stable", st.count(static_cast<int>(c)) > 0},
                     {"members", members}});
  }
  Json order = Json::array();
  for (auto [lo, hi] : cd->order()) order.push_back({lo, hi});
  Json dist = Json::array();
  for (int d : cd->distinguished()) dist.push_back(W.word_string(d));
  os << dump({{"system", sys->label()},
              {"cells", cells},
              {"order", order},
              {"distinguished", dist},
              {"left_cells", cd->left_cells().size()}});
  return 0;
}

int cmd_traces(const Options& o, std::ostream& os) {
  check_system(o, true);
  require_e6_flag(o);
  auto sys = system_of(o);
  const WeylGroup& W = sys->W();
  auto rd = rep_data(sys);
  const auto& ext = rd->extensions();
  if (o.format == "tsv") os << tsv_line({"E", "x", "tr(x phi, E)", "tr(T_x phi, E^v)", "tr(t_x phi, E^inf)"});
  Json out = Json::array();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    auto T = rd->T_traces(ext[i], 1);
    const auto& ti = rd->tinf_preferred(i);
    Json vals = Json::array();
    for (std::size_t x = 0; x < W.size(); ++x) {
      std::string w = W.word_string(static_cast<int>(x));
      if (o.format == "tsv")
        os << tsv_line({ext[i].label, w, std::to_string(ext[i].values[1][x]), T[x].str(), ti[x].str()});
      else
        vals.push_back({{"x", w}, {"coset", ext[i].values[1][x]}, {"T", to_json(T[x])}, {"t", ti[x].str()}});
    }
    if (o.format != "tsv")
      out.push_back({{"label", ext[i].label}, {"a", ext[i].a}, {"cell", rd->cell_of(i)}, {"values", vals}});
  }
  if (o.format != "tsv") os << dump(out);
  return 0;
}

Subset parse_set(const std::string& s) {
  Subset out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad --set entry: " + item);
    }
    if (used != item.size() || v < 0) throw UsageError("bad --set entry: " + item);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw UsageError("--set has repeated entries");
  return out;
}

int cmd_symbols(const Options& o, std::ostream& os) {
  if (o.action == "arrangements") {
    Subset M = parse_set(o.set);
    auto arr = M.size() % 2 ? std::vector<Arrangement>{} : admissible_arrangements(M);
    if (o.format == "tsv") {
      for (const auto& a : arr) os << arrangement_string(a) << "\n";
      return 0;
    }
    Json out = Json::array();
    for (const auto& a : arr) out.push_back(to_json(a));
    os << dump(out);
    return 0;
  }
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  if (o.action == "barx") {
    auto bars = o.n >= 1 ? enum_barX(o.n) : std::vector<BarSymbol>{};
    if (o.format == "tsv") {
      for (const auto& b : bars) os << tsv_line({subset_string(b.M), subset_string(b.N)});
      return 0;
    }
    Json out = Json::array();
    for (const auto& b : bars) out.push_back(to_json(b));
    os << dump(out);
    return 0;
  }
  // count
  if (o.n < 2) throw UsageError("symbols count needs --n >= 2");
  Integer a = object_count(o.n), b = object_count_formula(o.n);
  if (o.format == "tsv")
    os << tsv_line({std::to_string(o.n), a.str(), b.str()});
  else
    os << dump({{"n", o.n}, {"bar_symbol_sum", a.str()}, {"formula", b.str()}});
  return a == b ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& os) {
  check_system(o, true);
  if (o.e6_verbatim && o.family != "2E6") throw UsageError("--e6-verbatim applies to 2E6 only");
  auto t = o.e6_verbatim ? classify_2e6(E6Reading::verbatim) : classify(o.family, o.n);
  auto checks = verify_table(t);
  if (o.format == "tsv") {
    std::string head = "object\tcell\teps\tcuspidal\tdual\tdual_sign";
    for (const auto& c : t.columns) head += "\t" + c.label;
    os << head << "\n";
    for (std::size_t A = 0; A < t.objects.size(); ++A) {
      os << t.objects[A].datum << "\t" << t.objects[A].cell << "\t" << t.eps_sign[A] << "\t" << (t.cuspidal[A] ? 1 : 0)
         << "\t" << t.dual[A] << "\t" << t.dual_sign[A];
      for (const auto& e : t.pairing[A]) os << "\t" << to_string(e);
      os << "\n";
    }
  } else {
    Json j = table_to_json(t);
    j["checks"] = checks_to_json(checks);
    os << dump(j);
  }
  return all_pass(checks) ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& os) {
  if (o.suite != "symbols") check_system(o, o.suite == "classify" || o.suite == "traces" || o.suite == "induction");
  bool heavy = is_e6(o.family) && o.suite != "symbols" && o.suite != "classify";
  if (heavy) require_e6_flag(o);
  auto checks = run_suite(o.suite, o.family, is_twisted(o.family) || o.suite == "symbols" ? o.n : 0, o.e6_cells);
  if (o.format == "tsv") {
    for (const auto& c : checks) os << tsv_line({c.pass ? "PASS" : "FAIL", c.name, c.detail});
  } else {
    os << dump({{"suite", o.suite}, {"family", o.family}, {"n", o.n}, {"pass", all_pass(checks)},
                {"checks", checks_to_json(checks)}});
  }
  return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke algebras, cells and classification tables"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool with_system) {
    if (with_system) {
      sub->add_option("--family", o.family, "2A, 2D, 3D4, 2E6 or an untwisted type such as A3");
      sub->add_option("--n", o.n, "rank parameter for 2A and 2D");
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_flag("--enable-e6-cells", o.e6_cells, "allow the E6 Hecke-side computations");
  };
  auto* hecke = app.add_subcommand("hecke", "Kazhdan-Lusztig polynomials P_{y,x}");
  add_common(hecke, true);
  auto* cells = app.add_subcommand("cells", "two-sided cells, their order and distinguished involutions");
  add_common(cells, true);
  auto* traces = app.add_subcommand("traces", "traces of the preferred extensions on the coset");
  add_common(traces, true);
  auto* symbols = app.add_subcommand("symbols", "arrangements, bar-symbols and object counts");
  add_common(symbols, false);
  symbols->add_option("action", o.action, "arrangements, barx or count")
      ->required()
      ->check(CLI::IsMember({"arrangements", "barx", "count"}));
  symbols->add_option("--set", o.set, "comma-separated subset M");
  symbols->add_option("--n", o.n, "rank");
  auto* cl = app.add_subcommand("classify", "classification table of a twisted family");
  add_common(cl, true);
  cl->add_flag("--e6-verbatim", o.e6_verbatim, "2E6: take the resolved a = 7 lines as printed");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, true);
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (*hecke) code = cmd_hecke(o, buf);
    else if (*cells) code = cmd_cells(o, buf);
    else if (*traces) code = cmd_traces(o, buf);
    else if (*symbols) code = cmd_symbols(o, buf);
    else if (*cl) code = cmd_classify(o, buf);
    else code = cmd_verify(o, buf);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << buf.str();
  }
  return code;
}
