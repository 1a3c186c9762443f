#pragma once

/**
 * @file quotient.hpp
 * @brief Periodicity of geodesics on G/Lambda_{k,i}.
 *
 * The geodesic s -> h exp(sX) closes in G/Lambda iff exp(TX) lies in Lambda
 * for some T > 0, independently of h. The decision is exact:
 *
 * a0 != 0: the t-component forces T = t_step m / |a0|. Within each residue
 *   of m modulo 4 / (quarter turns per step), R(a0 T) and sin(a0 T) are
 *   constant, the v-condition is a fixed membership test in Z^2 and the
 *   z-condition 2k z(T) in Z is affine in m. The affine condition is solved
 *   as a congruence when its slope is rational, and as a linear identity of
 *   polynomials in pi (at most one solution) when the slope is irrational.
 *
 * a0 = 0: the curve is (0, a1 T, a2 T, a3 T); each nonzero ai confines T to a
 *   one-dimensional lattice and the answer is their intersection.
 */

#include <optional>
#include <string>
#include <vector>

#include "oscigeo/geodesic.hpp"
#include "oscigeo/lattice.hpp"
#include "oscigeo/metric.hpp"

namespace oscigeo {

enum class PeriodKind { Periodic, NonClosed, StationaryPoint };
std::string to_string(PeriodKind k);

struct PeriodicityVerdict {
  PeriodKind kind = PeriodKind::NonClosed;
  std::optional<Scalar> minimal_T;
  std::optional<Integer> witness_m;  // T = t_step m / |a0|, only when a0 != 0
};

struct Classification {
  CausalType causal = CausalType::Null;
  PeriodicityVerdict verdict;
};

Classification classify_geodesic(const LatticeSpec& L, const Tangent& X);

/// minimal_T, or nullopt when the geodesic does not close.
std::optional<Scalar> minimal_period(const LatticeSpec& L, const Tangent& X);

/// Least integer j >= j_min with c0 + j c1 in Z.
std::optional<Integer> solve_affine(const Scalar& c0, const Scalar& c1, const Integer& j_min);

/// Independent check of a verdict by direct membership tests. Periodic:
/// exp(T X) in Lambda and no smaller admissible T works. NonClosed: no
/// admissible T among the first scan_limit candidates works. Candidates are
/// t_step m / |a0| for a0 != 0, multiples of the first one-dimensional step
/// otherwise. Returns false if a Periodic check needs more than scan_limit
/// candidates.
bool verify_verdict(const LatticeSpec& L, const Tangent& X, const PeriodicityVerdict& v, long scan_limit = 4096);

/// Float samples of h exp(sX) reduced to coset normal forms; velocity is left zero.
std::vector<PathSample> project_geodesic(const LatticeSpec& L, const GroupElementF& h, const TangentF& X,
                                         double s_end, double step);

/// {"causal", "kind", "minimal_T", "witness_m"}
std::string to_json(const Classification& c);
/// "null, periodic, T = 2*pi" (float value appended in parentheses).
std::string to_text(const Classification& c);

}  // namespace oscigeo
