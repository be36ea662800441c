#include "vecfield/formulas.hpp"

#include "memo.hpp"
#include "vecfield/errors.hpp"

#include <cmath>

namespace vfc {

namespace {

ExactCount rising(const ExactCount& x, unsigned k) {
  ExactCount result = 1;
  for (unsigned i = 0; i < k; ++i) result *= x + i;
  return result;
}

ExactCount pow2(unsigned k) { return ExactCount(1) << k; }

detail::MemoSequence& p_table() {
  // Consecutive terms satisfy p_{n,k+1} (k+2)(k+1) = 2 (2n-k)(n-k) p_{n,k},
  // which avoids re-expanding the rising factorials for every k.
  static detail::MemoSequence table([](std::size_t n, const std::vector<ExactCount>&) -> ExactCount {
    ExactCount term = 1;
    ExactCount sum = 1;
    for (std::size_t k = 0; k < n; ++k) {
      term = exact_div(term * 2 * (2 * n - k) * (n - k), ExactCount((k + 2) * (k + 1)), "p_n term");
      sum += term;
    }
    return sum;
  });
  return table;
}

detail::MemoSequence& a_table() {
  static detail::MemoSequence table([](std::size_t n, const std::vector<ExactCount>&) -> ExactCount {
    if (n == 0) return ExactCount(-1);
    if (n == 1) return ExactCount(4);
    ExactCount six = 0;
    ExactCount two = 0;
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      const ExactCount pk = p_total(static_cast<unsigned>(k));
      six += pk * p_total(static_cast<unsigned>(n - 2 - k));
      two += pk * p_total(static_cast<unsigned>(n - 1 - k));
    }
    return 6 * six - 2 * two + p_total(static_cast<unsigned>(n));
  });
  return table;
}

detail::MemoSequence& h_table() {
  static detail::MemoSequence table([](std::size_t j, const std::vector<ExactCount>& h) -> ExactCount {
    if (j == 0) return ExactCount(1);
    if (j == 1) return ExactCount(11);
    return 11 * h[j - 1] + h[j - 2];
  });
  return table;
}

// s_m = c_{2m+1} = -sum_k a_k h_{m-k}
detail::MemoSequence& s_table() {
  static detail::MemoSequence table([](std::size_t m, const std::vector<ExactCount>&) -> ExactCount {
    ExactCount value = 0;
    for (std::size_t k = 0; k <= m; ++k)
      value -= a_coeff(static_cast<unsigned>(k)) * h_seq(static_cast<unsigned>(m - k));
    return value;
  });
  return table;
}

}  // namespace

ExactCount catalan(unsigned n) { return exact_div(binomial(2 * n, n), n + 1, "catalan"); }

ExactCount euler_phi(unsigned l) {
  unsigned result = l;
  unsigned rest = l;
  for (unsigned p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

ExactCount sigma_generic_bracket(unsigned n) {
  ExactCount bracket = catalan(n);
  for (unsigned l = 2; l <= n; ++l)
    if (n % l == 0) bracket += euler_phi(l) * binomial(2 * n / l, n / l);
  if (n % 2 == 1) bracket += binomial(n, (n - 1) / 2);
  return bracket;
}

ExactCount sigma_generic(unsigned n) {
  return exact_div(sigma_generic_bracket(n), 2 * n, "sigma_generic");
}

ExactCount p_nk(unsigned n, unsigned k) {
  if (k > n) return 0;
  const ExactCount numerator = rising(-ExactCount(2 * n), k) * rising(-ExactCount(n), k) * pow2(k);
  const ExactCount denominator = rising(2, k) * rising(1, k);
  return exact_div(numerator, denominator, "p_nk");
}

ExactCount p_total(unsigned n) { return p_table().at(n); }

ExactCount q_closed(unsigned n) {
  ExactCount sum = 0;
  for (unsigned k = 0; k < n; ++k) sum += binomial(2 * n, k) * binomial(n, n - 1 - k) * pow2(k);
  return exact_div(sum, n, "q_closed");
}

ExactCount a_coeff(unsigned n) { return a_table().at(n); }

ExactCount h_seq(unsigned j) { return h_table().at(j); }

ExactCount c_closed(unsigned m) {
  const unsigned half = m / 2;
  ExactCount value = s_table().at(half);
  if (m % 2 == 0) {
    for (unsigned j = 0; j < half; ++j) value -= 4 * s_table().at(j) * p_total(half - j - 1);
  }
  if (value < 0) throw NegativeResult("c_closed(" + std::to_string(m) + ") = " + value.str());
  return value;
}

ExactCount vertex_face_term(unsigned n, unsigned l) {
  if (l < 2 || (2 * n) % l != 0)
    throw NotADivisor(std::to_string(l) + " is not a divisor >= 2 of " + std::to_string(2 * n));
  const unsigned quotient = 2 * n / l;
  if (quotient % 2 == 1) return c_closed(quotient);
  const unsigned reduced = n / l;
  ExactCount sum = 0;
  for (unsigned k = 0; k <= reduced; ++k) sum += p_nk(reduced, k) * (k + 1);
  return sum;
}

ExactCount edge_face_term(unsigned n) {
  if (n % 2 == 0) return 0;
  return 2 * n * p_total((n - 1) / 2);
}

ExactCount p_plus_bracket(unsigned n) {
  ExactCount bracket = p_total(n);
  for (unsigned l = 2; l <= 2 * n; ++l)
    if ((2 * n) % l == 0) bracket += euler_phi(l) * vertex_face_term(n, l);
  return bracket + edge_face_term(n);
}

ExactCount p_plus(unsigned n) { return exact_div(p_plus_bracket(n), 2 * n, "p_plus"); }

std::vector<GrowthPoint> growth_estimates(unsigned n_max) {
  std::vector<GrowthPoint> points;
  points.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    points.push_back({n, std::exp(log_of(sigma_generic(n)) / n),
                      std::exp(log_of(p_plus(n)) / n)});
  }
  return points;
}

}  // namespace vfc
