#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclic_chroma/characterization.hpp"
#include "cyclic_chroma/constructor.hpp"
#include "cyclic_chroma/decomposition.hpp"
#include "cyclic_chroma/oracle.hpp"
#include "cyclic_chroma/verifier.hpp"

namespace cyclic_chroma::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decimal digits only: no sign, no leading zeros.
int parse_count(const std::string& text, std::string_view what) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char ch) {
    return ch >= '0' && ch <= '9';
  });
  if (!digits) throw UsageError(std::string(what) + ": expected an unsigned integer, got \"" + text + "\"");
  if (text.size() > 1 && text.front() == '0') {
    throw UsageError(std::string(what) + ": leading zeros are not allowed (\"" + text + "\")");
  }
  if (text.size() > 9) throw UsageError(std::string(what) + ": value too large (\"" + text + "\")");
  return std::stoi(text);
}

std::string join(const std::vector<int>& xs, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string braces(const std::vector<int>& xs) { return "{" + join(xs, ",") + "}"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open \"" + path + "\"");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// ---- theta ---------------------------------------------------------------

struct ThetaArgs {
  std::string n;
  std::string mode = "cyclic";
  bool json = false;
};

int cmd_theta(const ThetaArgs& a, std::ostream& out) {
  const int n = parse_count(a.n, "n");
  const Mode mode = parse_mode(a.mode);
  const ThetaSet s = mode == Mode::cyclic_interval ? theta_cyclic(n) : theta_interval(n);
  const bool cyc = mode == Mode::cyclic_interval;
  if (a.json) {
    ordered_json j;
    j["n"] = n;
    j["mode"] = std::string(to_string(mode));
    j["members"] = s.members;
    j["w"] = s.members.empty() ? ordered_json(nullptr) : ordered_json(s.members.front());
    j["W"] = s.members.empty() ? ordered_json(nullptr) : ordered_json(s.members.back());
    j["provenance"] = std::string(to_string(s.provenance));
    out << j.dump() << '\n';
    return kOk;
  }
  out << (cyc ? "Θ" : "θ") << "(C(" << n << ")) = " << braces(s.members);
  if (s.members.empty()) {
    out << "  (no " << (cyc ? "cyclically interval" : "interval") << " coloring)\n";
  } else {
    const char* suffix = cyc ? "cyc" : "int";
    out << "  w_" << suffix << '=' << s.members.front() << " W_" << suffix << '='
        << s.members.back() << '\n';
  }
  return kOk;
}

// ---- make ----------------------------------------------------------------

struct MakeArgs {
  std::string n;
  std::string t;
  bool json = false;
};

int cmd_make(const MakeArgs& a, std::ostream& out) {
  const int n = parse_count(a.n, "n");
  const int t = parse_count(a.t, "t");
  if (n < 3) throw UsageError("n must be >= 3, got " + std::to_string(n));
  const Construction result = construct(n, t);
  if (const auto* c = std::get_if<CycleColoring>(&result)) {
    out << to_record(*c) << '\n';
    return kOk;
  }
  const auto& inf = std::get<Infeasible>(result);
  if (a.json) {
    ordered_json j;
    j["feasible"] = false;
    j["n"] = inf.n;
    j["t"] = inf.t;
    j["gate"] = std::string(to_string(inf.gate));
    j["forbidden_set"] = inf.forbidden;
    j["message"] = inf.message();
    out << j.dump() << '\n';
  } else {
    out << inf.message() << '\n';
  }
  return kNegative;
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::string mode = "cyclic";
  bool json = false;
};

std::string describe(Mode mode, const CycleColoring& c) {
  return std::string(mode == Mode::interval ? "interval " : "cyclically interval ") +
         std::to_string(c.t()) + "-coloring of C(" + std::to_string(c.n()) + ")";
}

void print_report(const VerificationReport& r, const CycleColoring& c, bool json,
                  std::ostream& out) {
  if (json) {
    out << report_to_json(r) << '\n';
    return;
  }
  if (r.mode_satisfied) {
    out << "valid: " << describe(r.mode, c) << '\n';
    return;
  }
  out << "invalid: not a " << describe(r.mode, c) << '\n';
  out << "  proper: " << yes_no(r.proper) << '\n';
  out << "  surjective: " << yes_no(r.surjective) << '\n';
  if (!r.missing_colors.empty()) out << "  missing colors: " << braces(r.missing_colors) << '\n';
  for (const auto& v : r.violations) {
    out << "  v" << v.vertex << ": palette {" << v.palette.prev << ',' << v.palette.next << "} "
        << to_string(v.reason) << '\n';
  }
}

int cmd_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
  const Mode mode = parse_mode(a.mode);
  const CycleColoring c = parse_record(read_input(a.input, in));
  const VerificationReport r = verify(c, mode);
  print_report(r, c, a.json, out);
  return r.mode_satisfied ? kOk : kNegative;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  std::string n;
  std::string tmin;
  std::string tmax;
  std::string mode = "cyclic";
  bool count = false;
  bool assert_theorem = false;
  bool json = false;
  bool serial = false;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const int n = parse_count(a.n, "n");
  const Mode mode = parse_mode(a.mode);
  if (n < 3) throw UsageError("n must be >= 3, got " + std::to_string(n));
  const int tmin = a.tmin.empty() ? 1 : parse_count(a.tmin, "--tmin");
  const int tmax = a.tmax.empty() ? n : parse_count(a.tmax, "--tmax");
  if (tmin < 1 || tmax > n || tmin > tmax) {
    throw UsageError("need 1 <= tmin <= tmax <= n, got tmin=" + std::to_string(tmin) +
                     " tmax=" + std::to_string(tmax));
  }
  const Execution exec = a.serial ? Execution::serial : Execution::parallel;

  struct Row {
    int t;
    bool found;
    bool formula;
    std::uint64_t total;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (int t = tmin; t <= tmax; ++t) {
    Row row{t, exists_search(n, t, mode, false, exec),
            mode == Mode::cyclic_interval ? contains(n, t) : contains_interval(n, t), 0};
    if (a.count) row.total = count(n, t, mode, exec);
    all_agree = all_agree && row.found == row.formula;
    rows.push_back(row);
  }

  if (a.json) {
    ordered_json j;
    j["n"] = n;
    j["mode"] = std::string(to_string(mode));
    j["rows"] = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json o;
      o["t"] = r.t;
      o["exists"] = r.found;
      o["formula"] = r.formula;
      o["agree"] = r.found == r.formula;
      if (a.count) o["count"] = r.total;
      j["rows"].push_back(std::move(o));
    }
    j["all_agree"] = all_agree;
    out << j.dump() << '\n';
  } else {
    out << "C(" << n << ") " << to_string(mode) << " search, t in [" << tmin << ',' << tmax
        << "]\n";
    out << "t\tsearch\tformula\tagree";
    if (a.count) out << "\tcount";
    out << '\n';
    for (const Row& r : rows) {
      out << r.t << '\t' << yes_no(r.found) << '\t' << yes_no(r.formula) << '\t'
          << yes_no(r.found == r.formula);
      if (a.count) out << '\t' << r.total;
      out << '\n';
    }
    out << (all_agree ? "all rows agree with the closed form\n"
                      : "DISAGREEMENT with the closed form\n");
  }
  return a.assert_theorem && !all_agree ? kNegative : kOk;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  std::string nmax;
  std::string oracle_upto;
  std::string format = "markdown";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const int nmax = parse_count(a.nmax, "nmax");
  if (nmax < 3) throw UsageError("nmax must be >= 3, got " + std::to_string(nmax));
  if (nmax > kMaxMaterializedN) throw UsageError("nmax is too large");
  const bool with_oracle = !a.oracle_upto.empty();
  const int upto = with_oracle ? parse_count(a.oracle_upto, "--oracle-upto") : 0;
  if (with_oracle && std::min(upto, nmax) > search_bound()) {
    throw ResourceError("--oracle-upto " + std::to_string(upto) + " exceeds the search bound " +
                        std::to_string(search_bound()));
  }
  const bool csv = a.format == "csv";
  if (!csv && a.format != "markdown") throw UsageError("--format must be csv or markdown");

  auto set_text = [&](const std::vector<int>& xs) { return csv ? join(xs, ";") : braces(xs); };
  std::vector<std::string> header = {"n", csv ? "chi_prime" : "χ'", csv ? "theta" : "Θ(C(n))",
                                     csv ? "forbidden" : "forbidden set"};
  if (with_oracle) {
    header.push_back(csv ? "theta_search" : "Θ by search");
    header.push_back("agree");
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    if (csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    } else {
      out << '|';
      for (const auto& cell : cells) out << ' ' << cell << " |";
    }
    out << '\n';
  };

  emit(header);
  if (!csv) emit(std::vector<std::string>(header.size(), "---"));
  bool all_agree = true;
  for (int n = 3; n <= nmax; ++n) {
    const ThetaSet formula = theta_cyclic(n);
    std::vector<std::string> row = {std::to_string(n), std::to_string(chi_prime(n)),
                                    set_text(formula.members),
                                    n >= 5 ? set_text(forbidden_set(n)) : "-"};
    if (with_oracle) {
      if (n <= upto) {
        const ThetaSet searched = theta_by_search(n, Mode::cyclic_interval);
        const bool agree = searched.members == formula.members;
        all_agree = all_agree && agree;
        row.push_back(set_text(searched.members));
        row.push_back(agree ? "true" : "false");
      } else {
        row.push_back("-");
        row.push_back("-");
      }
    }
    emit(row);
  }
  return all_agree ? kOk : kNegative;
}

// ---- decompose -----------------------------------------------------------

struct DecomposeArgs {
  std::string input;
  bool json = false;
};

std::string edge_set(const std::vector<int>& edges) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << 'e' << edges[i];
  os << '}';
  return os.str();
}

std::string sequence(const std::vector<int>& xs) { return "(" + join(xs, ",") + ")"; }

int cmd_decompose(const DecomposeArgs& a, std::istream& in, std::ostream& out) {
  const CycleColoring c = parse_record(read_input(a.input, in));
  const VerificationReport r = verify(c, Mode::cyclic_interval);
  if (!r.mode_satisfied) {
    print_report(r, c, a.json, out);
    return kNegative;
  }
  const ProofDecomposition d = decompose(c);
  if (a.json) {
    out << decomposition_to_json(d) << '\n';
    return kOk;
  }
  const std::vector<int> input(c.colors().begin(), c.colors().end());
  out << "C(" << d.n << "), t=" << d.t << ", colors [" << join(input, ",") << "]\n";
  if (d.connected) {
    out << "U = " << edge_set(d.u) << '\n';
    out << "case A: H₀ connected" << (d.u_empty ? " (U empty)" : "") << '\n';
    return kOk;
  }
  out << "U = " << edge_set(d.u) << " (input labeling)\n";
  out << "case B: H₀ has m=" << d.m << " components, rotation offset " << d.rotation_offset
      << '\n';
  out << "labeled colors [" << join(d.labeled_colors, ",") << "]\n";
  out << "i\tζ\tη\t|E(H_i)|\t|E(H'_i)|\n";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& h = d.components[i];
    out << i + 1 << '\t' << h.zeta << '\t' << h.eta << '\t' << h.h_size << '\t'
        << h.h_prime_size << '\n';
  }
  std::vector<int> horizontal(d.horizontal.begin(), d.horizontal.end());
  out << "y = " << sequence(d.y) << '\n';
  out << "ψ = " << sequence(d.psi) << '\n';
  out << "horizontal = " << sequence(horizontal) << "  non-horizontal: "
      << d.non_horizontal_count() << '\n';
  out << "M₁ = " << braces(d.m1) << "  M₂ = " << braces(d.m2) << '\n';
  out << "m=" << d.m << ", Σψ=" << d.psi_sum() << '=' << d.n << '+' << 2 * d.m << ' '
      << (d.identity_holds() ? "✓" : "✗") << '\n';
  return d.identity_holds() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cyclically interval edge colorings of simple cycles C(n)", "cyclic-chroma"};
  app.require_subcommand(1);

  ThetaArgs theta;
  auto* theta_cmd = app.add_subcommand("theta", "Admissible color counts of C(n) by closed form");
  theta_cmd->add_option("n", theta.n, "Cycle length")->required();
  theta_cmd->add_option("--mode", theta.mode, "cyclic or interval");
  theta_cmd->add_flag("--json", theta.json, "Emit JSON");

  MakeArgs make;
  auto* make_cmd = app.add_subcommand("make", "Build a canonical cyclically interval t-coloring");
  make_cmd->add_option("n", make.n, "Cycle length")->required();
  make_cmd->add_option("t", make.t, "Number of colors")->required();
  make_cmd->add_flag("--json", make.json, "Emit JSON");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Verify a coloring record");
  check_cmd->add_option("input", check.input, "Record file (default: standard input)");
  check_cmd->add_option("--mode", check.mode, "cyclic or interval");
  check_cmd->add_flag("--json", check.json, "Emit JSON");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search over t for C(n)");
  oracle_cmd->add_option("n", oracle.n, "Cycle length")->required();
  oracle_cmd->add_option("--tmin", oracle.tmin, "Smallest t (default 1)");
  oracle_cmd->add_option("--tmax", oracle.tmax, "Largest t (default n)");
  oracle_cmd->add_option("--mode", oracle.mode, "cyclic or interval");
  oracle_cmd->add_flag("--count", oracle.count, "Also count valid colorings");
  oracle_cmd->add_flag("--assert-theorem", oracle.assert_theorem,
                       "Exit 1 if any verdict disagrees with the closed form");
  oracle_cmd->add_flag("--json", oracle.json, "Emit JSON");
  oracle_cmd->add_flag("--serial", oracle.serial, "Use the single-threaded reference search");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Reference table for n = 3..nmax");
  table_cmd->add_option("nmax", table.nmax, "Largest cycle length")->required();
  table_cmd->add_option("--oracle-upto", table.oracle_upto, "Cross-check by search up to this n");
  table_cmd->add_option("--format", table.format, "csv or markdown");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Component structure of a valid coloring");
  dec_cmd->add_option("input", dec.input, "Record file (default: standard input)");
  dec_cmd->add_flag("--json", dec.json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (theta_cmd->parsed()) return cmd_theta(theta, out);
    if (make_cmd->parsed()) return cmd_make(make, out);
    if (check_cmd->parsed()) return cmd_check(check, in, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, out);
    if (table_cmd->parsed()) return cmd_table(table, out);
    if (dec_cmd->parsed()) return cmd_decompose(dec, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace cyclic_chroma::cli
