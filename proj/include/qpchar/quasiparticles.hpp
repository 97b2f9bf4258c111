#ifndef QPCHAR_QUASIPARTICLES_HPP
#define QPCHAR_QUASIPARTICLES_HPP

#include <functional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpchar/lattice.hpp"
#include "qpchar/rational.hpp"
#include "qpchar/root_system.hpp"

namespace qpchar {

/// A standard module L(Lambda) together with the level data every formula needs.
struct StandardModule {
    RootSystem rs;
    HighestWeight weight;
    WindowSign sign = default_window_sign;
    int k = 1;
    std::vector<int> k_alpha;  ///< 0-based by color
    int start = 1;             ///< first charge t with j_t = j

    StandardModule(RootSystem rs, HighestWeight weight, WindowSign sign = default_window_sign);

    int rank() const { return rs.rank(); }
    /// delta_{i, j_t} for a 1-based color i.
    bool in_window(int i, int t) const { return i == weight.j && t >= start; }
    /// Sum_{u=1}^{t} delta_{i, j_u}.
    int window_count(int i, int t) const { return i == weight.j ? std::max(0, t - start + 1) : 0; }
};

/// Per color (0-based), charges n_{1,i} >= n_{2,i} >= ... >= 1 and energies m_{p,i}.
struct QuasiParticleMonomial {
    std::vector<std::vector<int>> charges;
    std::vector<std::vector<int>> energies;

    friend bool operator==(const QuasiParticleMonomial&, const QuasiParticleMonomial&) = default;
    friend auto operator<=>(const QuasiParticleMonomial&, const QuasiParticleMonomial&) = default;
};

QuasiParticleMonomial empty_monomial(int rank);

struct ChargeViews {
    std::vector<std::vector<int>> charge_type;  ///< n_{p,i}, p = 1.. (largest first)
    std::vector<std::vector<int>> dual;         ///< r_i^{(t)}, t = 1..max charge
    std::vector<std::vector<int>> p;            ///< p_i^{(t)}, t = 1..max charge
    std::vector<int> color_type;                ///< chg_i
};

ChargeViews charge_views(const QuasiParticleMonomial& b);

/// Conversions between the per-color views.
std::vector<int> dual_from_charges(const std::vector<int>& charges);
std::vector<int> charges_from_dual(const std::vector<int>& dual);
std::vector<int> p_from_dual(const std::vector<int>& dual);
std::vector<int> dual_from_p(const std::vector<int>& p);

/// Upper bound on m_{p,i} (1-based color and position).
int energy_ceiling(const StandardModule& mod, const QuasiParticleMonomial& b, int i, int p);

bool satisfies_conditions(const StandardModule& mod, const QuasiParticleMonomial& b, bool primed);

/// (chg_1, ..., chg_l) and en b = -sum m.
std::pair<Weight, int> weight_and_energy(const QuasiParticleMonomial& b);

/// en b - (|Lambda_bar + beta|^2 - |Lambda_bar|^2) / 2k. Throws std::invalid_argument
/// unless b lies in the primed set.
Rational conformal_energy(const StandardModule& mod, const QuasiParticleMonomial& b);

/// (|Lambda_bar + beta|^2 - |Lambda_bar|^2) / 2k for beta in simple-root coordinates.
Rational weight_shift_energy(const StandardModule& mod, const Weight& beta);

/// Flattened index set of a P-sequence: one slot per (color, charge t).
struct PLayout {
    std::vector<std::pair<int, int>> slots;  ///< (1-based color, charge t)
    bool primed = false;

    static PLayout make(const StandardModule& mod, bool primed);
    std::size_t size() const { return slots.size(); }
    /// Charges per color (largest first) for a P vector on this layout.
    std::vector<std::vector<int>> charges(const std::vector<int>& P, int rank) const;
    Weight color_type(const std::vector<int>& P, int rank) const;
};

/// 1/2 P^T G P + B.P: the minimal total energy of a charge-count vector.
QuadraticForm<Rational> energy_form(const StandardModule& mod, const PLayout& layout);

/// 1/2 P^T K P + C.P: the minimal conformal energy of a primed charge-count vector.
QuadraticForm<Rational> conformal_form(const StandardModule& mod, const PLayout& layout);

/// Every P on the layout with form(P) <= bound, in lexicographic order.
std::vector<std::vector<int>> charge_classes(const QuadraticForm<Rational>& form, const Rational& bound);

/// Visits the monomials with the given charges satisfying the difference and
/// initial conditions whose total energy is at most budget.
void for_each_in_class(const StandardModule& mod, const std::vector<std::vector<int>>& charges, int budget,
                       const std::function<void(const QuasiParticleMonomial&, int)>& visit);

/// Minimal total energy over monomials with the given charges.
int minimal_energy(const StandardModule& mod, const std::vector<std::vector<int>>& charges);

/// All monomials satisfying the conditions with en b <= N, ordered by
/// color-type, then charge-type, then energy-type.
std::vector<QuasiParticleMonomial> enumerate(const StandardModule& mod, int N, bool primed);

nlohmann::json to_json(const QuasiParticleMonomial& b);
QuasiParticleMonomial monomial_from_json(const nlohmann::json& j);

}  // namespace qpchar

#endif  // QPCHAR_QUASIPARTICLES_HPP
