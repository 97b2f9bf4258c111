#include "qpchar/quasiparticles.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "qpchar/parallel.hpp"

namespace qpchar {

StandardModule::StandardModule(RootSystem rs_, HighestWeight weight_, WindowSign sign_)
    : rs(std::move(rs_)), weight(weight_), sign(sign_), k(weight_.level())
{
    for (int i = 1; i <= rs.rank(); ++i) k_alpha.push_back(qpchar::k_alpha(rs, i, k));
    start = window_start(rs, weight, sign);
}

QuasiParticleMonomial empty_monomial(int rank)
{
    return {std::vector<std::vector<int>>(rank), std::vector<std::vector<int>>(rank)};
}

std::vector<int> dual_from_charges(const std::vector<int>& charges)
{
    int top = charges.empty() ? 0 : *std::max_element(charges.begin(), charges.end());
    std::vector<int> r(top, 0);
    for (int n : charges)
        for (int t = 0; t < n; ++t) ++r[t];
    return r;
}

std::vector<int> charges_from_dual(const std::vector<int>& dual)
{
    // Conjugate partition: the p-th largest charge is #{t : r^{(t)} >= p}.
    std::vector<int> charges(dual.empty() ? 0 : dual.front(), 0);
    for (int r : dual)
        for (int p = 0; p < r; ++p) ++charges[p];
    return charges;
}

std::vector<int> p_from_dual(const std::vector<int>& dual)
{
    std::vector<int> p(dual.size());
    for (std::size_t t = 0; t < dual.size(); ++t) p[t] = dual[t] - (t + 1 < dual.size() ? dual[t + 1] : 0);
    return p;
}

std::vector<int> dual_from_p(const std::vector<int>& p)
{
    std::vector<int> dual(p.size());
    int acc = 0;
    for (std::size_t t = p.size(); t-- > 0;) dual[t] = acc += p[t];
    return dual;
}

ChargeViews charge_views(const QuasiParticleMonomial& b)
{
    ChargeViews v;
    for (const auto& charges : b.charges) {
        v.charge_type.push_back(charges);
        v.dual.push_back(dual_from_charges(charges));
        v.p.push_back(p_from_dual(v.dual.back()));
        int chg = 0;
        for (int n : charges) chg += n;
        v.color_type.push_back(chg);
    }
    return v;
}

namespace {

int ceiling_from_charges(const StandardModule& mod, const std::vector<std::vector<int>>& charges, int i, int p)
{
    const auto& row = charges[i - 1];
    if (p < 1 || p > static_cast<int>(row.size())) throw std::out_of_range("particle position out of range");
    const int n = row[p - 1];
    int bound = -n - 2 * (p - 1) * n - mod.window_count(i, n);
    if (i >= 2) {
        const int ip = mod.rs.i_prime[i - 1];
        const int mu = mod.k_alpha[i - 1] / mod.k_alpha[ip - 1];
        for (int nq : charges[ip - 1]) bound += std::min(mu * nq, n);
    }
    return bound;
}

bool well_formed(const StandardModule& mod, const QuasiParticleMonomial& b)
{
    if (static_cast<int>(b.charges.size()) != mod.rank() || b.energies.size() != b.charges.size()) return false;
    for (std::size_t i = 0; i < b.charges.size(); ++i) {
        const auto& row = b.charges[i];
        if (row.size() != b.energies[i].size()) return false;
        for (std::size_t p = 0; p < row.size(); ++p) {
            if (row[p] < 1 || row[p] > mod.k_alpha[i]) return false;
            if (p > 0 && row[p] > row[p - 1]) return false;
        }
    }
    return true;
}

// Lower bounds e_p >= lo_p on the per-position energies -m_p of one color.
std::vector<int> energy_floors(const StandardModule& mod, const std::vector<std::vector<int>>& charges, int i)
{
    std::vector<int> lo;
    for (std::size_t p = 1; p <= charges[i - 1].size(); ++p)
        lo.push_back(-ceiling_from_charges(mod, charges, i, static_cast<int>(p)));
    return lo;
}

// Smallest energy of positions from..end given the previous energy.
int greedy_rest(const std::vector<int>& charges, const std::vector<int>& lo, std::size_t from, int prev)
{
    int total = 0;
    for (std::size_t p = from; p < charges.size(); ++p) {
        int e = lo[p];
        if (p > 0 && charges[p] == charges[p - 1]) e = std::max(e, prev + 2 * charges[p - 1]);
        total += e;
        prev = e;
    }
    return total;
}

}  // namespace

int energy_ceiling(const StandardModule& mod, const QuasiParticleMonomial& b, int i, int p)
{
    if (i < 1 || i > mod.rank()) throw std::out_of_range("color out of range");
    return ceiling_from_charges(mod, b.charges, i, p);
}

bool satisfies_conditions(const StandardModule& mod, const QuasiParticleMonomial& b, bool primed)
{
    if (!well_formed(mod, b)) return false;
    for (int i = 1; i <= mod.rank(); ++i) {
        const auto& n = b.charges[i - 1];
        const auto& m = b.energies[i - 1];
        for (std::size_t p = 0; p < n.size(); ++p) {
            if (primed && n[p] >= mod.k_alpha[i - 1]) return false;
            if (m[p] > ceiling_from_charges(mod, b.charges, i, static_cast<int>(p + 1))) return false;
            if (p > 0 && n[p] == n[p - 1] && m[p] > m[p - 1] - 2 * n[p - 1]) return false;
        }
    }
    return true;
}

std::pair<Weight, int> weight_and_energy(const QuasiParticleMonomial& b)
{
    Weight w;
    int energy = 0;
    for (std::size_t i = 0; i < b.charges.size(); ++i) {
        int chg = 0;
        for (int n : b.charges[i]) chg += n;
        for (int m : b.energies[i]) energy -= m;
        w.push_back(chg);
    }
    return {w, energy};
}

Rational weight_shift_energy(const StandardModule& mod, const Weight& beta)
{
    // |Lambda_bar + beta|^2 - |Lambda_bar|^2 = 2 kj <omega_j, beta> + |beta|^2 and
    // <omega_j, beta> = beta_j |alpha_j|^2 / 2.
    Rational shift = mod.rs.norm(beta);
    if (mod.weight.kj > 0) shift += Rational(mod.weight.kj * beta[mod.weight.j - 1]) * mod.rs.pairing(mod.weight.j - 1, mod.weight.j - 1);
    return shift / (2 * mod.k);
}

Rational conformal_energy(const StandardModule& mod, const QuasiParticleMonomial& b)
{
    if (!satisfies_conditions(mod, b, true))
        throw std::invalid_argument("conformal energy is defined on the primed set only");
    auto [w, en] = weight_and_energy(b);
    return Rational(en) - weight_shift_energy(mod, w);
}

PLayout PLayout::make(const StandardModule& mod, bool primed)
{
    PLayout layout;
    layout.primed = primed;
    for (int i = 1; i <= mod.rank(); ++i) {
        const int top = mod.k_alpha[i - 1] - (primed ? 1 : 0);
        for (int t = 1; t <= top; ++t) layout.slots.emplace_back(i, t);
    }
    return layout;
}

std::vector<std::vector<int>> PLayout::charges(const std::vector<int>& P, int rank) const
{
    std::vector<std::vector<int>> out(rank);
    // Slots are ordered by increasing charge within a color; emit largest first.
    for (std::size_t s = slots.size(); s-- > 0;) {
        auto [i, t] = slots[s];
        out[i - 1].insert(out[i - 1].end(), P[s], t);
    }
    return out;
}

Weight PLayout::color_type(const std::vector<int>& P, int rank) const
{
    Weight w(rank, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) w[slots[s].first - 1] += slots[s].second * P[s];
    return w;
}

QuadraticForm<Rational> energy_form(const StandardModule& mod, const PLayout& layout)
{
    const auto n = static_cast<Eigen::Index>(layout.size());
    QuadraticForm<Rational> form{RationalMatrix::Constant(n, n, Rational(0)), RationalVector::Constant(n, Rational(0))};
    for (Eigen::Index a = 0; a < n; ++a) {
        auto [i, m] = layout.slots[a];
        for (Eigen::Index c = 0; c < n; ++c) {
            auto [r, nn] = layout.slots[c];
            const int x = std::min(mod.rs.nu[r - 1] * m, mod.rs.nu[i - 1] * nn);
            form.A(a, c) = Rational(x) * mod.rs.pairing(i - 1, r - 1);
        }
        form.b(a) = Rational(mod.window_count(i, m));
    }
    return form;
}

QuadraticForm<Rational> conformal_form(const StandardModule& mod, const PLayout& layout)
{
    auto form = energy_form(mod, layout);
    const auto n = static_cast<Eigen::Index>(layout.size());
    for (Eigen::Index a = 0; a < n; ++a) {
        auto [i, m] = layout.slots[a];
        for (Eigen::Index c = 0; c < n; ++c) {
            auto [r, nn] = layout.slots[c];
            form.A(a, c) -= Rational(m * nn, mod.k) * mod.rs.pairing(i - 1, r - 1);
        }
        if (i == mod.weight.j && mod.weight.kj > 0) form.b(a) -= Rational(mod.weight.kj * m, mod.k_alpha[i - 1]);
    }
    return form;
}

std::vector<std::vector<int>> charge_classes(const QuadraticForm<Rational>& form, const Rational& bound)
{
    std::vector<std::vector<int>> out;
    for_each_lattice_point(form, bound, true, [&](const std::vector<int>& x, const Rational&) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

int minimal_energy(const StandardModule& mod, const std::vector<std::vector<int>>& charges)
{
    int total = 0;
    for (int i = 1; i <= mod.rank(); ++i) total += greedy_rest(charges[i - 1], energy_floors(mod, charges, i), 0, 0);
    return total;
}

void for_each_in_class(const StandardModule& mod, const std::vector<std::vector<int>>& charges, int budget,
                       const std::function<void(const QuasiParticleMonomial&, int)>& visit)
{
    const int l = mod.rank();
    std::vector<std::vector<int>> floors(l);
    std::vector<int> color_min(l + 1, 0);  // color_min[i] = minimal energy of colors i..l-1 (0-based)
    for (int i = l; i-- > 0;) {
        floors[i] = energy_floors(mod, charges, i + 1);
        color_min[i] = color_min[i + 1] + greedy_rest(charges[i], floors[i], 0, 0);
    }
    if (color_min[0] > budget) return;

    QuasiParticleMonomial b{charges, std::vector<std::vector<int>>(l)};
    for (int i = 0; i < l; ++i) b.energies[i].assign(charges[i].size(), 0);

    auto dfs = [&](auto&& self, int i, std::size_t p, int prev, int spent) -> void {
        if (i == l) {
            visit(b, spent);
            return;
        }
        const auto& n = charges[i];
        if (p == n.size()) {
            self(self, i + 1, 0, 0, spent);
            return;
        }
        int e = floors[i][p];
        if (p > 0 && n[p] == n[p - 1]) e = std::max(e, prev + 2 * n[p - 1]);
        for (;; ++e) {
            const int least = spent + e + greedy_rest(n, floors[i], p + 1, e) + color_min[i + 1];
            if (least > budget) break;
            b.energies[i][p] = -e;
            self(self, i, p + 1, e, spent + e);
        }
    };
    dfs(dfs, 0, 0, 0, 0);
}

std::vector<QuasiParticleMonomial> enumerate(const StandardModule& mod, int N, bool primed)
{
    if (N < 0) return {};
    const auto layout = PLayout::make(mod, primed);
    const auto form = energy_form(mod, layout);
    const auto classes = charge_classes(form, Rational(N));
    const int l = mod.rank();
    auto per_class = parallel_map(classes, [&](const std::vector<int>& P) {
        auto charges = layout.charges(P, l);
        const int least = minimal_energy(mod, charges);
        if (Rational(least) != form(P))
            throw std::logic_error("minimal energy of a charge class disagrees with its quadratic form");
        std::vector<QuasiParticleMonomial> found;
        for_each_in_class(mod, charges, N, [&](const QuasiParticleMonomial& b, int) { found.push_back(b); });
        return found;
    });
    std::vector<QuasiParticleMonomial> out;
    for (auto& v : per_class) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    auto key = [](const QuasiParticleMonomial& b) {
        return std::make_tuple(charge_views(b).color_type, b.charges, b.energies);
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& c) { return key(a) < key(c); });
    return out;
}

nlohmann::json to_json(const QuasiParticleMonomial& b) { return {{"charges", b.charges}, {"energies", b.energies}}; }

QuasiParticleMonomial monomial_from_json(const nlohmann::json& j)
{
    return {j.at("charges").get<std::vector<std::vector<int>>>(), j.at("energies").get<std::vector<std::vector<int>>>()};
}

}  // namespace qpchar
