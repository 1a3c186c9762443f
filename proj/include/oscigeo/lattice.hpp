#pragma once

// Lattices Lambda_{k,i} = (t_step Z) x| Gamma_k of G, Gamma_k = Z x Z x (1/2k)Z,
// with right-coset (G/Lambda) normal forms and the normalizer predicate.

#include <string>
#include <string_view>

#include "oscigeo/group.hpp"

namespace oscigeo {

enum class Twist { Full, Half, Quarter };

struct LatticeSpec {
  int k = 1;
  Twist twist = Twist::Full;

  LatticeSpec() = default;
  LatticeSpec(int k_, Twist twist_);

  /// 2pi, pi or pi/2.
  Scalar t_step() const;
  double t_step_float() const;
  /// t_step measured in quarter turns: 4, 2 or 1.
  int quarter_turns_per_step() const;
  Rational z_step() const { return Rational(1, 2 * k); }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// "k=<int>,twist=<full|half|quarter>"
LatticeSpec parse_lattice(std::string_view text);
std::string to_string(const LatticeSpec& L);
std::string to_string(Twist tw);

bool lattice_contains(const LatticeSpec& L, const GroupElement& g);

/// Unique representative of g*Lambda with t in [0, t_step), v in R(t)[0,1)^2
/// (so v in [0,1)^2 whenever the reduced t is 0) and z in [0, 1/2k).
/// Obtained by right-multiplying with lattice elements: t first, then v, then z.
GroupElement coset_normal_form(const LatticeSpec& L, const GroupElement& g);
GroupElementF coset_normal_form(const LatticeSpec& L, const GroupElementF& g);

/// g1*Lambda == g2*Lambda, i.e. g1^-1 g2 in Lambda.
bool coset_equal(const LatticeSpec& L, const GroupElement& g1, const GroupElement& g2);

/// Closed-form membership in the normalizer N_G(Lambda); z is unconstrained.
///   Full:    t in (pi/2)Z, v in (1/2k)Z^2
///   Half:    t in (pi/2)Z, v in (1/2)Z^2
///   Quarter: t in (pi/2)Z, v in Z^2 (k odd) or (1/2)W (k even),
///            W = {(m,n) in Z^2 : m = n mod 2}
bool normalizer_contains(const LatticeSpec& L, const GroupElement& h);

/// Kernel of h -> induced chi_h on G/Lambda: h in the normalizer with h = (2pi s, 0, r).
bool chi_kernel_contains(const LatticeSpec& L, const GroupElement& h);
/// Kernel of h -> tau_h on G/Lambda: h = (2pi s, 0, z) with z in (1/2k)Z.
bool tau_kernel_contains(const LatticeSpec& L, const GroupElement& h);

/// Lambda_k < N (same point set as Lambda_{k,0}), left cosets in N:
/// Lambda_k a == Lambda_k b iff a b^-1 in Lambda_k under the N law.
bool n_coset_equal(int k, const GroupElement& a, const GroupElement& b);

}  // namespace oscigeo
