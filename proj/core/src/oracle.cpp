#include "vecfield/oracle.hpp"

#include "vecfield/diagram.hpp"
#include "vecfield/errors.hpp"
#include "vecfield/formulas.hpp"
#include "vecfield/tree.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <string>

namespace vfc {

namespace {

void require_cap(unsigned n, unsigned cap) {
  if (n > cap) throw CapExceeded(n, cap);
}

template <typename Visit>
void for_each_diagram(unsigned n, Visit&& visit) {
  ValidStrings strings(2 * n);
  BracketingString s;
  while (strings.next(s)) visit(diagram_from_bracketing(s));
}

// Balanced words over [ ] only, in lexicographic order.
template <typename Visit>
void for_each_generic_diagram(unsigned n, Visit&& visit) {
  std::vector<Symbol> word(2 * n);
  const auto rec = [&](auto&& self, std::size_t pos, unsigned opened, unsigned depth) -> void {
    if (pos == word.size()) {
      visit(diagram_from_bracketing(BracketingString(word)));
      return;
    }
    if (opened < n) {
      word[pos] = Symbol::SquareOpen;
      self(self, pos + 1, opened + 1, depth + 1);
    }
    if (depth > 0) {
      word[pos] = Symbol::SquareClose;
      self(self, pos + 1, opened, depth - 1);
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  const char* raw = std::getenv("VECFIELD_ORACLE_CAP");
  if (raw == nullptr) return limits;
  const std::string text(raw);
  try {
    std::size_t used = 0;
    const unsigned long full = std::stoul(text, &used);
    if (used == text.size()) {
      limits.full_cap = static_cast<unsigned>(full);
      limits.generic_cap = std::max(limits.generic_cap, limits.full_cap);
    } else if (text[used] == ',') {
      const std::string rest = text.substr(used + 1);
      std::size_t used_generic = 0;
      const unsigned long generic = std::stoul(rest, &used_generic);
      if (used_generic == rest.size()) {
        limits.full_cap = static_cast<unsigned>(full);
        limits.generic_cap = static_cast<unsigned>(generic);
      }
    }
  } catch (const std::exception&) {
    // keep defaults
  }
  return limits;
}

VerificationReport VerificationReport::make(std::string check, unsigned n, ExactCount expected,
                                            ExactCount computed) {
  VerificationReport report;
  report.check = std::move(check);
  report.n = n;
  report.pass = expected == computed;
  report.expected = std::move(expected);
  report.computed = std::move(computed);
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j = {{"check", report.check},
                      {"n", report.n},
                      {"expected", report.expected.str()},
                      {"computed", report.computed.str()},
                      {"pass", report.pass}};
  if (!report.breakdown.empty()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [label, value] : report.breakdown)
      terms.push_back({{"label", label}, {"value", value.str()}});
    j["breakdown"] = std::move(terms);
  }
  return j;
}

std::vector<ExactCount> fix_counts(unsigned n, const OracleLimits& limits) {
  require_cap(n, limits.full_cap);
  std::vector<std::size_t> counts(2 * n, 0);
  for_each_diagram(n, [&](const BoardDiagram& d) {
    ++counts[0];
    for (unsigned r = 1; r < 2 * n; ++r)
      if (rotate(d, r) == d) ++counts[r];
  });
  return {counts.begin(), counts.end()};
}

ExactCount fix_count(unsigned n, unsigned r, const OracleLimits& limits) {
  require_cap(n, limits.full_cap);
  std::size_t count = 0;
  for_each_diagram(n, [&](const BoardDiagram& d) {
    if (rotate(d, r) == d) ++count;
  });
  return count;
}

ExactCount burnside_orbit_count(unsigned n, const OracleLimits& limits) {
  ExactCount total = 0;
  for (const auto& c : fix_counts(n, limits)) total += c;
  return exact_div(total, 2 * n, "burnside_orbit_count");
}

std::vector<OrbitRepresentative> list_orbit_representatives(unsigned n,
                                                            const OracleLimits& limits) {
  require_cap(n, limits.full_cap);
  std::map<BracketingString, std::size_t> orbits;
  for_each_diagram(n, [&](const BoardDiagram& d) { ++orbits[canonical_form(d)]; });
  std::vector<OrbitRepresentative> out;
  out.reserve(orbits.size());
  for (auto& [canonical, size] : orbits) out.push_back({canonical, size});
  return out;
}

ExactCount generic_orbit_count(unsigned n, const OracleLimits& limits) {
  require_cap(n, limits.generic_cap);
  std::map<BracketingString, std::size_t> orbits;
  for_each_generic_diagram(n, [&](const BoardDiagram& d) {
    if (is_generic(d)) ++orbits[canonical_form(d)];
  });
  return orbits.size();
}

VerificationReport decomposition_check(unsigned n, const OracleLimits& limits) {
  const auto counts = fix_counts(n, limits);
  ExactCount fixed = 0;
  for (unsigned r = 1; r < 2 * n; ++r) fixed += counts[r];

  ExactCount terms = 0;
  std::vector<std::pair<std::string, ExactCount>> breakdown;
  for (unsigned l = 2; l <= 2 * n; ++l) {
    if ((2 * n) % l != 0) continue;
    ExactCount term = euler_phi(l) * vertex_face_term(n, l);
    breakdown.emplace_back("vertex-face l=" + std::to_string(l), term);
    terms += term;
  }
  const ExactCount edge = edge_face_term(n);
  breakdown.emplace_back("edge-face", edge);
  terms += edge;
  for (unsigned r = 1; r < 2 * n; ++r)
    breakdown.emplace_back("fix r=" + std::to_string(r), counts[r]);

  auto report = VerificationReport::make("decomposition", n, terms, fixed);
  report.breakdown = std::move(breakdown);
  return report;
}

std::map<unsigned, ExactCount> pnk_histogram(unsigned n, const OracleLimits& limits) {
  require_cap(n, limits.full_cap);
  std::map<unsigned, std::size_t> counts;
  ValidStrings strings(2 * n);
  BracketingString s;
  while (strings.next(s)) ++counts[static_cast<unsigned>(tree_stats(tree_from_bracketing(s)).edges)];
  return {counts.begin(), counts.end()};
}

ExactCount brute_quasi_count(unsigned m) {
  std::vector<Symbol> word(m, Symbol::RoundOpen);
  std::size_t count = 0;
  while (true) {
    if (is_quasi_valid(BracketingString(word))) ++count;
    std::size_t i = m;
    while (i > 0 && word[i - 1] == Symbol::Dot) word[--i] = Symbol::RoundOpen;
    if (i == 0) break;
    word[i - 1] = static_cast<Symbol>(static_cast<int>(word[i - 1]) + 1);
  }
  return count;
}

std::vector<VerificationReport> run_verification_suite(unsigned n_max, const OracleLimits& limits) {
  std::vector<VerificationReport> reports;
  for (unsigned n = 1; n <= n_max; ++n) {
    reports.push_back(VerificationReport::make("valid even: recursion vs closed", n,
                                               p_total(n), count_valid(2 * n)));
    reports.push_back(VerificationReport::make("valid odd: recursion vs closed", n,
                                               q_closed(n), count_valid(2 * n - 1)));
    reports.push_back(VerificationReport::make("quasi even: recursion vs closed", n,
                                               c_closed(2 * n), count_quasi(2 * n)));
    reports.push_back(VerificationReport::make("quasi odd: recursion vs closed", n,
                                               c_closed(2 * n - 1), count_quasi(2 * n - 1)));
    if (n <= limits.generic_cap)
      reports.push_back(VerificationReport::make("generic orbits vs sigma", n, sigma_generic(n),
                                                 generic_orbit_count(n, limits)));
    if (n > limits.full_cap) continue;

    const auto counts = fix_counts(n, limits);
    reports.push_back(VerificationReport::make("identity fixed points vs valid count", n,
                                               count_valid(2 * n), counts[0]));
    ExactCount total = 0;
    for (const auto& c : counts) total += c;
    auto burnside = VerificationReport::make("burnside orbits vs p_plus", n, p_plus(n),
                                             exact_div(total, 2 * n, "burnside"));
    for (unsigned r = 0; r < 2 * n; ++r)
      burnside.breakdown.emplace_back("fix r=" + std::to_string(r), counts[r]);
    reports.push_back(std::move(burnside));
    reports.push_back(VerificationReport::make("orbit representatives vs p_plus", n, p_plus(n),
                                               list_orbit_representatives(n, limits).size()));
    reports.push_back(decomposition_check(n, limits));

    const auto histogram = pnk_histogram(n, limits);
    ExactCount matched = 0;
    auto edges = VerificationReport::make("edge histogram vs p_nk", n, n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
      const auto it = histogram.find(k);
      const ExactCount seen = it == histogram.end() ? ExactCount(0) : it->second;
      if (seen == p_nk(n, k)) ++matched;
      edges.breakdown.emplace_back("k=" + std::to_string(k), seen);
    }
    if (histogram.size() > n + 1) matched = 0;
    edges.computed = matched;
    edges.pass = edges.expected == edges.computed;
    reports.push_back(std::move(edges));
  }
  return reports;
}

}  // namespace vfc
