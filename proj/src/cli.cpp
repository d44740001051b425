#include "symbal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "symbal/bisect.hpp"
#include "symbal/census.hpp"
#include "symbal/conjectures.hpp"
#include "symbal/errors.hpp"
#include "symbal/exactnum.hpp"
#include "symbal/spectral.hpp"
#include "symbal/symfun.hpp"

namespace symbal::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Params {
  unsigned d = 0, n = 0, p = 0, power = 0;
  std::uint64_t residue = 0;
  unsigned n_max = 0;
  std::size_t limit = 10;
  bool enumerate = false;
};

// Everything a command produces. Scans in csv mode write their rows to the
// output as they complete, so csv_rows stays empty for them.
struct Report {
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::string> text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool header_streamed = false;
  int status = kExitOk;
};

struct Context {
  Format format = Format::text;
  unsigned workers = 1;
  std::ostream* out = nullptr;
};

std::string str(const BigNat& v) { return v.to_string(); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
template <typename T>
std::string str(T v) requires std::is_integral_v<T> {
  return std::to_string(v);
}

std::string join(const std::vector<std::string>& fields, char sep) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += sep;
    line += fields[i];
  }
  return line;
}

std::string signs_string(const SignVector& delta) {
  std::string s;
  for (auto x : delta.signs()) s += x > 0 ? '+' : '-';
  return s;
}

void require_d_n(const Params& a) {
  if (a.d < 1 || a.d > a.n) {
    throw DomainError("requires 1 <= d <= n (got d=" + std::to_string(a.d) + ", n=" + std::to_string(a.n) + ")");
  }
}

void emit_csv_line(std::ostream& out, const std::vector<std::string>& fields) { out << join(fields, ',') << '\n'; }

// ---------------------------------------------------------------------------

Report cmd_weight(const Params& a, const Context&) {
  require_d_n(a);
  Report r;
  r.parameters = {{"d", a.d}, {"n", a.n}};
  const BigNat w = weight_elem(a.d, a.n);
  r.results = {{"d", a.d}, {"n", a.n}, {"weight", str(w)}};
  r.text = {"weight: " + str(w)};
  r.csv_header = {"d", "n", "weight"};
  r.csv_rows = {{str(a.d), str(a.n), str(w)}};
  return r;
}

Report cmd_balanced(const Params& a, const Context&) {
  require_d_n(a);
  Report r;
  r.parameters = {{"d", a.d}, {"n", a.n}};
  const BigNat w = weight_elem(a.d, a.n);
  const bool bal = is_balanced_elem(a.d, a.n);
  r.results = {{"d", a.d}, {"n", a.n}, {"weight", str(w)}, {"balanced", bal}};
  r.text = {"balanced: " + str(bal), "weight: " + str(w)};
  r.csv_header = {"d", "n", "weight", "balanced"};
  r.csv_rows = {{str(a.d), str(a.n), str(w), str(bal)}};
  return r;
}

Report cmd_sac(const Params& a, const Context&) {
  if (a.d < 2 || a.d > a.n) throw DomainError("sac: requires 2 <= d <= n");
  Report r;
  r.parameters = {{"d", a.d}, {"n", a.n}};
  const bool sac = is_sac_elem(a.d, a.n);
  const BigNat w = weight_elem(a.d, a.n);
  r.results = {{"d", a.d}, {"n", a.n}, {"sac", sac}, {"weight", str(w)}};
  r.text = {"sac: " + str(sac), "weight: " + str(w)};
  r.csv_header = {"d", "n", "sac", "weight"};
  r.csv_rows = {{str(a.d), str(a.n), str(sac), str(w)}};
  return r;
}

Report cmd_walsh(const Params& a, const Context&) {
  require_d_n(a);
  Report r;
  r.parameters = {{"d", a.d}, {"n", a.n}};
  const WalshSpectrum spec = walsh_spectrum(elem_values(a.d, a.n));
  const bool parseval = parseval_holds(spec);
  if (!parseval) throw InvariantError("walsh: Parseval identity failed");
  Json values = Json::array();
  r.csv_header = {"y", "walsh"};
  for (unsigned y = 0; y <= a.n; ++y) {
    values.push_back(str(spec[y]));
    r.text.push_back("W(" + str(y) + ") = " + str(spec[y]));
    r.csv_rows.push_back({str(y), str(spec[y])});
  }
  r.results = {{"d", a.d}, {"n", a.n}, {"by_weight", values}, {"parseval", parseval}};
  r.text.push_back("parseval: true");
  return r;
}

Report cmd_bisect(const Params& a, const Context&) {
  Report r;
  r.parameters = {{"n", a.n}, {"enumerate", a.enumerate}};
  const SolutionReport sol = find_all_solutions(a.n, a.enumerate);
  r.results = {{"n", a.n}, {"total", str(sol.total)}, {"trivial", str(sol.trivial)},
               {"nontrivial", str(sol.nontrivial)}};
  r.text = {"solutions: " + str(sol.total), "trivial: " + str(sol.trivial),
            "nontrivial: " + str(sol.nontrivial)};
  if (a.enumerate) {
    Json witnesses = Json::array();
    r.csv_header = {"signs", "trivial"};
    for (const auto& delta : sol.witnesses) {
      const bool triv = is_trivial(delta);
      witnesses.push_back({{"signs", signs_string(delta)}, {"trivial", triv}});
      r.text.push_back(signs_string(delta) + (triv ? "  trivial" : "  nontrivial"));
      r.csv_rows.push_back({signs_string(delta), str(triv)});
    }
    r.results["witnesses"] = witnesses;
  } else {
    r.csv_header = {"n", "total", "trivial", "nontrivial"};
    r.csv_rows = {{str(a.n), str(sol.total), str(sol.trivial), str(sol.nontrivial)}};
  }
  return r;
}

Report cmd_count(const Params& a, const Context&) {
  Report r;
  r.parameters = {{"p", a.p}, {"n", a.n}};
  const BigNat sym = count_symmetric(a.p, a.n);
  r.results = {{"p", a.p}, {"n", a.n}, {"symmetric", str(sym)}};
  r.text = {"symmetric: " + str(sym)};
  r.csv_header = {"p", "n", "symmetric", "balanced_all", "balanced_symmetric"};
  std::vector<std::string> row = {str(a.p), str(a.n), str(sym), "", ""};
  if (a.n >= 1) {
    // Both counts below are optional extras; out-of-budget ones are reported as null.
    try {
      const BigNat all = count_balanced_all(a.p, a.n);
      r.results["balanced_all"] = str(all);
      r.text.push_back("balanced (all functions): " + str(all));
      row[3] = str(all);
    } catch (const BudgetError&) {
      r.results["balanced_all"] = nullptr;
    }
    try {
      const BigNat bs = brute_count_balanced_symmetric(a.p, a.n);
      r.results["balanced_symmetric"] = str(bs);
      r.text.push_back("balanced symmetric (exhaustive): " + str(bs));
      row[4] = str(bs);
    } catch (const BudgetError&) {
      r.results["balanced_symmetric"] = nullptr;
    }
  }
  r.csv_rows = {row};
  return r;
}

Report cmd_lower_bound(const Params& a, const Context&) {
  Report r;
  r.parameters = {{"p", a.p}, {"n", a.n}};
  const BigNat lb = lower_bound_balanced(a.p, a.n);
  r.results = {{"p", a.p}, {"n", a.n}, {"lower_bound", str(lb)}};
  r.text = {"lower bound: " + str(lb)};
  r.csv_header = {"p", "n", "lower_bound"};
  r.csv_rows = {{str(a.p), str(a.n), str(lb)}};
  return r;
}

Report cmd_generate(const Params& a, const Context&) {
  Report r;
  r.parameters = {{"p", a.p}, {"n", a.n}, {"limit", a.limit}};
  BalancedGenerator gen(a.p, a.n);
  Json functions = Json::array();
  r.csv_header = {"index", "values"};
  std::size_t index = 0;
  while (index < a.limit) {
    auto f = gen.next();
    if (!f) break;
    if (!is_balanced(*f)) throw InvariantError("generate: produced an unbalanced function");
    std::vector<std::string> vals;
    for (auto v : f->values()) vals.push_back(str(v));
    functions.push_back(f->values());
    r.text.push_back(join(vals, ' '));
    r.csv_rows.push_back({str(index), join(vals, ';')});
    ++index;
  }
  r.results = {{"p", a.p}, {"n", a.n}, {"reachable", str(gen.reachable())}, {"functions", functions}};
  return r;
}

Report cmd_scan_c1(const Params& a, const Context& ctx) {
  Report r;
  r.parameters = {{"n_max", a.n_max}};
  r.csv_header = {"d", "n", "weight", "balanced", "predicted"};
  ScanOptions opts;
  opts.workers = ctx.workers;
  if (ctx.format == Format::csv) {
    emit_csv_line(*ctx.out, r.csv_header);
    r.header_streamed = true;
    opts.on_cell = [&](const ScanCell& c) {
      emit_csv_line(*ctx.out, {str(c.d), str(c.n), str(c.weight), str(c.balanced), str(c.predicted)});
      ctx.out->flush();
    };
  }
  const auto cells = scan_conjecture1(a.n_max, opts);
  Json list = Json::array();
  Json balanced = Json::array();
  Json mismatches = Json::array();
  std::string balanced_text;
  for (const auto& c : cells) {
    list.push_back({{"d", c.d}, {"n", c.n}, {"weight", str(c.weight)}, {"balanced", c.balanced},
                    {"predicted", c.predicted}});
    if (c.balanced) {
      balanced.push_back({c.d, c.n});
      balanced_text += " (" + str(c.d) + "," + str(c.n) + ")";
    }
    if (c.balanced != c.predicted) mismatches.push_back({c.d, c.n});
  }
  const bool consistent = mismatches.empty();
  r.results = {{"cells", cells.size()}, {"balanced", balanced}, {"mismatches", mismatches},
               {"consistent", consistent}, {"table", list}};
  r.text = {"cells: " + str(cells.size()), "balanced:" + balanced_text,
            "mismatches: " + str(mismatches.size()),
            std::string("result: ") + (consistent ? "consistent" : "COUNTEREXAMPLE")};
  if (!consistent) r.status = kExitCounterexample;
  return r;
}

Report cmd_scan_c2(const Params& a, const Context& ctx) {
  Report r;
  r.parameters = {{"n_max", a.n_max}};
  r.csv_header = {"d", "n", "weight", "balanced", "predicted", "deficit", "holds"};
  auto row_of = [](const DeficitCell& c) {
    const bool bal = c.weight == BigNat::pow2(c.n - 1);
    return std::vector<std::string>{str(c.d), str(c.n), str(c.weight), str(bal),
                                    str(conjecture1_predicted(c.d, c.n)), str(c.deficit), str(c.holds)};
  };
  std::function<void(const DeficitCell&)> sink;
  if (ctx.format == Format::csv) {
    emit_csv_line(*ctx.out, r.csv_header);
    r.header_streamed = true;
    sink = [&](const DeficitCell& c) {
      emit_csv_line(*ctx.out, row_of(c));
      ctx.out->flush();
    };
  }
  const auto cells = scan_conjecture2(a.n_max, ctx.workers, sink);
  Json list = Json::array();
  Json violations = Json::array();
  for (const auto& c : cells) {
    list.push_back({{"d", c.d}, {"n", c.n}, {"weight", str(c.weight)}, {"deficit", str(c.deficit)},
                    {"holds", c.holds}});
    if (!c.holds) violations.push_back({c.d, c.n});
  }
  const bool holds = violations.empty();
  r.results = {{"cells", cells.size()}, {"violations", violations}, {"holds", holds}, {"table", list}};
  r.text = {"cells: " + str(cells.size()), "violations: " + str(violations.size()),
            std::string("result: ") + (holds ? "holds" : "COUNTEREXAMPLE")};
  if (!holds) r.status = kExitCounterexample;
  return r;
}

Report cmd_lacunary(const Params& a, const Context&) {
  Report r;
  r.parameters = {{"n", a.n}, {"power", a.power}, {"residue", a.residue}};
  const BigNat exact = lacunary_exact(a.n, a.power, a.residue);
  const Real trig = lacunary_trig(a.n, a.power, a.residue);
  // Absolute agreement while the sum fits the significand, relative beyond it.
  const Real exact_real = exact.to_long_double();
  const bool agrees = std::fabs(trig - exact_real) <= std::max(0.25L, 1e-15L * exact_real);
  std::ostringstream trig_text;
  trig_text.precision(21);
  trig_text << trig;
  r.results = {{"n", a.n},           {"power", a.power}, {"residue", a.residue},
               {"exact", str(exact)}, {"trig", trig_text.str()}, {"agrees", agrees}};
  r.text = {"exact: " + str(exact), "trig: " + trig_text.str(), "agrees: " + str(agrees)};
  r.csv_header = {"n", "power", "residue", "exact", "trig", "agrees"};
  r.csv_rows = {{str(a.n), str(a.power), str(a.residue), str(exact), trig_text.str(), str(agrees)}};
  if (!agrees) throw InvariantError("lacunary: closed form disagrees with the exact sum");
  return r;
}

void emit(const std::string& command, const Report& r, double runtime_ms, const Context& ctx) {
  std::ostream& out = *ctx.out;
  switch (ctx.format) {
    case Format::text:
      for (const auto& line : r.text) out << line << '\n';
      break;
    case Format::json: {
      Json doc;
      doc["command"] = command;
      doc["parameters"] = r.parameters;
      doc["results"] = r.results;
      doc["runtime_ms"] = runtime_ms;
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      if (!r.header_streamed) emit_csv_line(out, r.csv_header);
      for (const auto& row : r.csv_rows) emit_csv_line(out, row);
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for symmetric functions over GF(p) and elementary symmetric Boolean polynomials",
               "symbal"};
  app.require_subcommand(1);
  std::string format_name = "text";
  Context ctx;
  ctx.out = &out;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--workers", ctx.workers, "Worker threads for scans")->check(CLI::Range(1u, 256u));

  Params a;
  using Handler = Report (*)(const Params&, const Context&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, h);
    return sub;
  };
  auto d_n = [&](CLI::App* sub) {
    sub->add_option("d", a.d, "Degree")->required();
    sub->add_option("n", a.n, "Number of variables")->required();
  };
  auto p_n = [&](CLI::App* sub) {
    sub->add_option("p", a.p, "Prime")->required();
    sub->add_option("n", a.n, "Number of variables")->required();
  };

  d_n(add("weight", "Weight of X(d, n)", cmd_weight));
  d_n(add("balanced", "Balancedness of X(d, n)", cmd_balanced));
  d_n(add("sac", "Strict avalanche criterion for X(d, n)", cmd_sac));
  d_n(add("walsh", "Walsh spectrum of X(d, n) by input weight", cmd_walsh));
  auto* bisect = add("bisect", "Signed zero-sum bisections of binomial row n", cmd_bisect);
  bisect->add_option("n", a.n, "Row")->required();
  bisect->add_flag("--enumerate", a.enumerate, "List every solution");
  p_n(add("count", "Counts of symmetric and balanced functions", cmd_count));
  p_n(add("lower-bound", "Orbit-splitting lower bound on balanced symmetric functions", cmd_lower_bound));
  auto* generate = add("generate", "Balanced symmetric functions by orbit splitting", cmd_generate);
  p_n(generate);
  generate->add_option("--limit", a.limit, "Maximum number of functions")->capture_default_str();
  auto* c1 = add("scan-c1", "Balancedness scan of X(d, n), 2 <= d <= n <= N", cmd_scan_c1);
  c1->add_option("--n-max", a.n_max, "Largest n")->default_val(64u);
  auto* c2 = add("scan-c2", "Weight-deficit scan for wt(d) >= 6, 2(d-1) <= n <= N", cmd_scan_c2);
  c2->add_option("--n-max", a.n_max, "Largest n")->default_val(160u);
  auto* lac = add("lacunary", "Sum of C(n, j) over j = i mod 2^power", cmd_lacunary);
  lac->add_option("n", a.n, "Row")->required();
  lac->add_option("power", a.power, "Modulus exponent")->required();
  lac->add_option("i", a.residue, "Residue")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  ctx.format = format_name == "json" ? Format::json : (format_name == "csv" ? Format::csv : Format::text);

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Report r = handler(a, ctx);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      emit(sub->get_name(), r, ms, ctx);
      if (r.status == kExitCounterexample) err << sub->get_name() << ": counterexample found\n";
      return r.status;
    } catch (const HypothesisError& e) {
      err << sub->get_name() << ": hypothesis violation: " << e.what() << '\n';
      return kExitUsage;
    } catch (const DomainError& e) {
      err << sub->get_name() << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const BudgetError& e) {
      err << sub->get_name() << ": budget exceeded: " << e.what() << '\n';
      return kExitBudget;
    } catch (const InvariantError& e) {
      err << sub->get_name() << ": internal check failed: " << e.what() << '\n';
      return kExitInternal;
    } catch (const std::exception& e) {
      err << sub->get_name() << ": " << e.what() << '\n';
      return kExitInternal;
    }
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace symbal::cli
