#pragma once

#include "vecfield/exact.hpp"

#include <cstddef>
#include <vector>

namespace vfc {

/// Closed forms for the configuration counts. Sequence values are memoized
/// behind a lock; every function is safe to call concurrently.
///
/// Indexing follows the degree convention d = n + 1: sigma_generic(n) and
/// p_plus(n) count classes of vector fields of degree n + 1.

ExactCount catalan(unsigned n);

ExactCount euler_phi(unsigned l);

/// Rotation classes of generic configurations (unrooted plane trees on n
/// edges).
ExactCount sigma_generic(unsigned n);

/// Rooted generalized trees with k edges and 2(n - k) half-edges, from the
/// rising-factorial expression. Zero for k > n.
ExactCount p_nk(unsigned n, unsigned k);

/// p_n = sum_k p_nk(n, k).
ExactCount p_total(unsigned n);

/// q_n, the odd-length count, from the Lagrange inversion sum.
ExactCount q_closed(unsigned n);

/// Coefficients of 2z(3z - 1)p^2 + (2z + 1)p + (z - 2). Signed.
ExactCount a_coeff(unsigned n);

/// Coefficients of 1 / (1 - 11z - z^2): h_j = 11 h_{j-1} + h_{j-2}.
ExactCount h_seq(unsigned j);

/// c_m from the closed form (odd m directly, even m via the r/s relation).
/// Throws NegativeResult if a term comes out negative.
ExactCount c_closed(unsigned m);

/// Rotations whose axis passes through a vertex and a face, for order l | 2n.
/// Throws NotADivisor.
ExactCount vertex_face_term(unsigned n, unsigned l);

/// Order-2 rotations whose axis crosses an edge: 0 for even n.
ExactCount edge_face_term(unsigned n);

/// p_n^+, rotation classes of all configurations in degree n + 1.
ExactCount p_plus(unsigned n);

/// The bracket (2n times p_n^+) before the exact division.
ExactCount p_plus_bracket(unsigned n);
ExactCount sigma_generic_bracket(unsigned n);

struct GrowthPoint {
  unsigned n;
  double sigma_root;   // sigma_n^(1/n), tends to 4
  double p_plus_root;  // (p_n^+)^(1/n), tends to 2 / (5 sqrt(5) - 11) ~ 11.0902
};

/// n-th roots for 1 <= n <= n_max, computed through logarithms of the exact
/// values.
std::vector<GrowthPoint> growth_estimates(unsigned n_max);

}  // namespace vfc
