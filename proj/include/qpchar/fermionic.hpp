#ifndef QPCHAR_FERMIONIC_HPP
#define QPCHAR_FERMIONIC_HPP

#include <map>
#include <vector>

#include "qpchar/graded_series.hpp"
#include "qpchar/quasiparticles.hpp"

namespace qpchar {

/// q^{sum r^(t)^2 + sum r^(t) delta_{i j_t}} / prod (q;q)_{r^(t) - r^(t+1)} for one color.
/// Throws std::invalid_argument unless dual is weakly decreasing with length <= k_alpha_i.
GradedSeries F_factor(const StandardModule& mod, int i, const std::vector<int>& dual, const Rational& N);

/// q^{-sum_t sum_{p<mu_i} r_{i'}^(t) r_i^(mu_i t - p)}; 1 for i = 1.
GradedSeries I_factor(const StandardModule& mod, int i, const std::vector<int>& dual_i,
                      const std::vector<int>& dual_i_prime, const Rational& N);

/// Exponent of I_factor (nonpositive).
int I_exponent(const StandardModule& mod, int i, const std::vector<int>& dual_i, const std::vector<int>& dual_i_prime);

/// Principal subspace character as a sum over dual-charge-types.
GradedSeries principal_char_R(const StandardModule& mod, const Rational& N, bool primed);

/// Principal subspace character as a sum over charge-count vectors P.
GradedSeries principal_char_P(const StandardModule& mod, const Rational& N, bool primed);

struct WeylShift {
    Weight weight_shift;  ///< sum c_i k_{alpha_i} alpha_i
    int depth_shift = 0;  ///< lambda(mu) + k/2 <mu, mu>
};

/// Effect of e_mu, mu = sum c_i alpha_i^vee, on a vector of weight
/// Lambda_bar + beta (beta in simple-root coordinates).
WeylShift weyl_shift(const StandardModule& mod, const Weight& mu, const Weight& beta);

/// Vacuum space character: Weyl translates of the primed principal character.
GradedSeries vacuum_char(const StandardModule& mod, const Rational& N);

/// prod (1 - q^m)^{-l} times the vacuum character.
GradedSeries module_char(const StandardModule& mod, const Rational& N);

/// Common energy denominator of parafermionic characters: 2k times the pairing denominators.
std::int64_t parafermion_denominator(const StandardModule& mod);

/// sum_P D'_P C_P K_P (q only).
GradedSeries parafermionic_char(const StandardModule& mod, const Rational& N);

/// Refinement by the window class (chg_i mod k_alpha_i) of each basis vector.
std::map<Weight, GradedSeries> parafermionic_char_per_class(const StandardModule& mod, const Rational& N);

/// sum over the primed basis of q^{conformal energy}, by direct enumeration.
GradedSeries parafermionic_char_brute(const StandardModule& mod, const Rational& N);

/// Per-class version of the brute-force sum.
std::map<Weight, GradedSeries> parafermionic_char_brute_per_class(const StandardModule& mod, const Rational& N);

/// sum over enumerate(N, primed) of q^{en b} y^{wt b}.
GradedSeries enumeration_series(const StandardModule& mod, const Rational& N, bool primed);

}  // namespace qpchar

#endif  // QPCHAR_FERMIONIC_HPP
