#include "cli.hpp"

#include "vecfield/bracketing.hpp"
#include "vecfield/diagram.hpp"
#include "vecfield/errors.hpp"
#include "vecfield/formulas.hpp"
#include "vecfield/oracle.hpp"
#include "vecfield/tree.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace vfc::cli {

namespace {

using nlohmann::json;

/// Raised for flag combinations CLI11 cannot express; maps to exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- count -----------------------------------------------------------------

ExactCount count_all_by_recursion(unsigned n) {
  // Same bracket as p_plus, with b and c taken from the recursions.
  ExactCount bracket = count_valid(2 * n);
  for (unsigned l = 2; l <= 2 * n; ++l) {
    if ((2 * n) % l != 0) continue;
    const unsigned quotient = 2 * n / l;
    ExactCount term = 0;
    if (quotient % 2 == 1) {
      term = count_quasi(quotient);
    } else {
      for (unsigned k = 0; k <= n / l; ++k) term += p_nk(n / l, k) * (k + 1);
    }
    bracket += euler_phi(l) * term;
  }
  if (n % 2 == 1) bracket += 2 * n * count_valid(n - 1);
  return exact_div(bracket, 2 * n, "count --family all --method recursion");
}

ExactCount count_strings(std::size_t length) {
  ExactCount total = 0;
  ValidStrings strings(length);
  BracketingString s;
  while (strings.next(s)) ++total;
  return total;
}

ExactCount run_count(const std::string& family, unsigned n, const std::string& method) {
  const OracleLimits limits = OracleLimits::from_environment();
  const auto need_positive = [&] {
    if (n == 0) throw UsageError("--n must be at least 1 for family " + family);
  };
  if (family == "generic") {
    need_positive();
    if (method == "closed") return sigma_generic(n);
    if (method == "oracle") return generic_orbit_count(n, limits);
    throw UsageError("family generic supports --method closed or oracle");
  }
  if (family == "all") {
    need_positive();
    if (method == "closed") return p_plus(n);
    if (method == "recursion") return count_all_by_recursion(n);
    return burnside_orbit_count(n, limits);
  }
  if (family == "rooted") {
    if (method == "closed") return p_total(n);
    if (method == "recursion") return count_valid(2 * n);
    if (n > limits.full_cap) throw CapExceeded(n, limits.full_cap);
    return count_strings(2 * n);
  }
  if (family == "odd") {
    need_positive();
    if (method == "closed") return q_closed(n);
    if (method == "recursion") return count_valid(2 * n - 1);
    if (n > limits.full_cap) throw CapExceeded(n, limits.full_cap);
    return count_strings(2 * n - 1);
  }
  // quasi: --n is the string length m
  if (method == "closed") return c_closed(n);
  if (method == "recursion") return count_quasi(n);
  const unsigned cap = limits.full_cap + 3;  // 5^m candidate words
  if (n > cap) throw CapExceeded(n, cap);
  return brute_quasi_count(n);
}

// --- convert ---------------------------------------------------------------

BracketingString read_input(const std::string& from, const std::string& input) {
  if (from == "bracketing") {
    BracketingString s = parse_string(input);
    match_pairs(s);  // reject invalid words up front
    return s;
  }
  const json j = json::parse(input);
  if (from == "diagram") return bracketing_from_diagram(diagram_from_json(j));
  return bracketing_from_tree(tree_from_json(j));
}

json with_schema(json body) {
  json out = {{"schema", kSchema}};
  out.update(body);
  return out;
}

void write_output(const std::string& to, const BracketingString& s, std::ostream& out) {
  if (to == "bracketing") {
    out << s.str() << '\n';
  } else if (to == "diagram") {
    out << with_schema(to_json(diagram_from_bracketing(s))).dump() << '\n';
  } else {
    out << with_schema(to_json(tree_from_bracketing(s))).dump() << '\n';
  }
}

// --- enumerate / orbits ----------------------------------------------------

void run_enumerate(std::size_t length, const std::string& format, std::ostream& out) {
  ValidStrings strings(length);
  BracketingString s;
  if (format == "lines") {
    while (strings.next(s)) out << s.str() << '\n';
    return;
  }
  out << R"({"schema":")" << kSchema << R"(","length":)" << length << R"(,"strings":[)";
  bool first = true;
  while (strings.next(s)) {
    out << (first ? "" : ",") << '"' << s.str() << '"';
    first = false;
  }
  out << "]}\n";
}

void run_orbits(unsigned n, const std::string& format, std::ostream& out) {
  if (n == 0) throw UsageError("--n must be at least 1");
  const auto orbits = list_orbit_representatives(n, OracleLimits::from_environment());
  if (format == "lines") {
    for (const auto& orbit : orbits) out << orbit.canonical.str() << ' ' << orbit.size << '\n';
    return;
  }
  json list = json::array();
  for (const auto& orbit : orbits)
    list.push_back({{"canonical", orbit.canonical.str()}, {"size", orbit.size}});
  out << with_schema({{"n", n}, {"count", orbits.size()}, {"orbits", std::move(list)}}).dump()
      << '\n';
}

// --- verify / growth -------------------------------------------------------

int run_verify(unsigned n_max, std::ostream& out) {
  const auto reports = run_verification_suite(n_max, OracleLimits::from_environment());
  json list = json::array();
  bool pass = true;
  for (const auto& report : reports) {
    pass = pass && report.pass;
    list.push_back(to_json(report));
  }
  out << with_schema({{"n_max", n_max}, {"pass", pass}, {"reports", std::move(list)}}).dump(2)
      << '\n';
  return pass ? kSuccess : kVerificationFailed;
}

void run_growth(unsigned n_max, std::ostream& out) {
  out << "n,sigma_root,p_plus_root\n";
  out << std::setprecision(12);
  for (const auto& point : growth_estimates(n_max))
    out << point.n << ',' << point.sigma_root << ',' << point.p_plus_root << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact census of polynomial vector field configurations", "vecfield"};
  app.require_subcommand(1);

  const std::vector<std::string> methods{"closed", "recursion", "oracle"};
  const std::vector<std::string> formats{"lines", "json"};
  const std::vector<std::string> representations{"bracketing", "diagram", "tree"};

  std::string family;
  std::string method = "closed";
  unsigned n = 0;
  auto* count = app.add_subcommand("count", "Count one family (n = degree - 1)");
  count->add_option("--family", family, "generic | all | rooted | quasi | odd")
      ->required()
      ->check(CLI::IsMember({"generic", "all", "rooted", "quasi", "odd"}));
  count->add_option("--n", n, "Index; string length for --family quasi")->required();
  count->add_option("--method", method, "closed | recursion | oracle")
      ->check(CLI::IsMember(methods));

  std::size_t length = 0;
  std::string format = "lines";
  auto* enumerate = app.add_subcommand("enumerate", "Valid bracketings of one length");
  enumerate->add_option("--n", length, "String length")->required();
  enumerate->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* orbits = app.add_subcommand("orbits", "Rotation classes on 2n boards");
  orbits->add_option("--n", n)->required();
  orbits->add_option("--format", format)->check(CLI::IsMember(formats));

  std::string from;
  std::string to;
  std::string input;
  auto* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("--from", from)->required()->check(CLI::IsMember(representations));
  convert->add_option("--to", to)->required()->check(CLI::IsMember(representations));
  convert->add_option("--input", input, "Bracketing text or JSON")->required();

  std::string render_format = "dot";
  auto* render = app.add_subcommand("render", "Graphviz DOT of the generalized tree");
  render->add_option("--input", input, "Bracketing text")->required();
  render->add_option("--format", render_format)->check(CLI::IsMember({"dot"}));

  unsigned n_max = 5;
  auto* verify = app.add_subcommand("verify", "Cross-check every formula against the oracle");
  verify->add_option("--n-max", n_max, "Largest n to check (capped per family)");

  unsigned growth_max = 20;
  auto* growth = app.add_subcommand("growth", "n-th roots of sigma_n and p_n^+ as CSV");
  growth->add_option("--n-max", growth_max)->check(CLI::Range(1u, 100000u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "vecfield: " << message << '\n';
    return kUsage;
  }

  try {
    if (count->parsed()) {
      out << run_count(family, n, method).str() << '\n';
    } else if (enumerate->parsed()) {
      run_enumerate(length, format, out);
    } else if (orbits->parsed()) {
      run_orbits(n, format, out);
    } else if (convert->parsed()) {
      write_output(to, read_input(from, input), out);
    } else if (render->parsed()) {
      out << to_dot(tree_from_bracketing(parse_string(input)));
    } else if (verify->parsed()) {
      return run_verify(n_max, out);
    } else if (growth->parsed()) {
      run_growth(growth_max, out);
    }
  } catch (const UsageError& e) {
    err << "vecfield: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "vecfield: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "vecfield: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << "vecfield: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kSuccess;
}

CommandOutcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace vfc::cli
