#include "qpchar/fermionic.hpp"

#include <stdexcept>

#include "qpchar/lattice.hpp"
#include "qpchar/parallel.hpp"

namespace qpchar {

namespace {

// Dual-charge columns of each color for a P vector on the given layout.
std::vector<std::vector<int>> duals_of(const PLayout& layout, const std::vector<int>& P, int rank)
{
    std::vector<std::vector<int>> p(rank);
    for (std::size_t s = 0; s < layout.size(); ++s) p[layout.slots[s].first - 1].push_back(P[s]);
    std::vector<std::vector<int>> out;
    for (auto& row : p) out.push_back(dual_from_p(row));
    return out;
}

int read(const std::vector<int>& r, int t) { return t >= 1 && t <= static_cast<int>(r.size()) ? r[t - 1] : 0; }

DenseSeries class_denominator(const std::vector<int>& P, int max_degree)
{
    DenseSeries s = dense_pochhammer_inv(0, max_degree);
    for (int p : P)
        if (p > 0) s = dense_mul(s, dense_pochhammer_inv(p, max_degree), max_degree);
    return s;
}

Weight class_of(const StandardModule& mod, const Weight& chg)
{
    Weight w(chg.size());
    for (std::size_t i = 0; i < chg.size(); ++i) w[i] = chg[i] % mod.k_alpha[i];
    return w;
}

Rational lambda_bar_energy(const StandardModule& mod)
{
    if (mod.weight.kj == 0) return Rational(0);
    const int j = mod.weight.j;
    const Rational norm = fundamental_weight(mod.rs, j)(j - 1) * mod.rs.pairing(j - 1, j - 1) / 2;
    return Rational(mod.weight.kj * mod.weight.kj) * norm / (2 * mod.k);
}

struct ClassTerm {
    Rational shift;
    Weight weight;
    DenseSeries series;
};

void accumulate(GradedSeries& target, const std::vector<std::vector<ClassTerm>>& parts)
{
    for (const auto& part : parts)
        for (const auto& t : part) add_shifted(target, t.shift, t.weight, t.series);
}

}  // namespace

GradedSeries F_factor(const StandardModule& mod, int i, const std::vector<int>& dual, const Rational& N)
{
    if (i < 1 || i > mod.rank()) throw std::out_of_range("color out of range");
    if (static_cast<int>(dual.size()) > mod.k_alpha[i - 1])
        throw std::invalid_argument("dual-charge column longer than k_alpha");
    for (std::size_t t = 0; t < dual.size(); ++t)
        if (dual[t] < 0 || (t > 0 && dual[t] > dual[t - 1]))
            throw std::invalid_argument("dual-charge column must be weakly decreasing and nonnegative");
    int exponent = 0;
    for (std::size_t t = 0; t < dual.size(); ++t) {
        exponent += dual[t] * dual[t];
        if (mod.in_window(i, static_cast<int>(t + 1))) exponent += dual[t];
    }
    GradedSeries s(0, N);
    add_shifted(s, Rational(exponent), Weight{}, class_denominator(p_from_dual(dual), static_cast<int>(floor(N)) - exponent));
    return s;
}

int I_exponent(const StandardModule& mod, int i, const std::vector<int>& dual_i, const std::vector<int>& dual_i_prime)
{
    if (i == 1) return 0;
    const int ip = mod.rs.i_prime[i - 1];
    const int mu = mod.k_alpha[i - 1] / mod.k_alpha[ip - 1];
    int e = 0;
    for (int t = 1; t <= mod.k_alpha[ip - 1]; ++t)
        for (int p = 0; p < mu; ++p) e += read(dual_i_prime, t) * read(dual_i, mu * t - p);
    return -e;
}

GradedSeries I_factor(const StandardModule& mod, int i, const std::vector<int>& dual_i,
                      const std::vector<int>& dual_i_prime, const Rational& N)
{
    return monomial(Rational(I_exponent(mod, i, dual_i, dual_i_prime)), Weight{}, N);
}

GradedSeries principal_char_R(const StandardModule& mod, const Rational& N, bool primed)
{
    const int l = mod.rank();
    const auto layout = PLayout::make(mod, primed);
    const auto classes = charge_classes(energy_form(mod, layout), N);
    auto parts = parallel_map(classes, [&](const std::vector<int>& P) {
        const auto duals = duals_of(layout, P, l);
        int interaction = 0;
        for (int i = 2; i <= l; ++i) interaction += I_exponent(mod, i, duals[i - 1], duals[mod.rs.i_prime[i - 1] - 1]);
        // F-factors are needed beyond N because the interaction lowers the exponent.
        const Rational wide = N - interaction;
        GradedSeries s = GradedSeries::one(0, wide);
        for (int i = 1; i <= l; ++i) s = s * F_factor(mod, i, duals[i - 1], wide);
        Weight chg(l, 0);
        for (int i = 0; i < l; ++i)
            for (int r : duals[i]) chg[i] += r;
        GradedSeries out(l, N);
        add_shifted(out, Rational(interaction), chg, s);
        return out;
    });
    GradedSeries total(l, N);
    for (const auto& part : parts) add_shifted(total, Rational(0), Weight(l, 0), part);
    return total;
}

GradedSeries principal_char_P(const StandardModule& mod, const Rational& N, bool primed)
{
    const int l = mod.rank();
    const auto layout = PLayout::make(mod, primed);
    const auto form = energy_form(mod, layout);
    const auto classes = charge_classes(form, N);
    auto parts = parallel_map(classes, [&](const std::vector<int>& P) {
        const Rational e = form(P);
        return std::vector<ClassTerm>{{e, layout.color_type(P, l), class_denominator(P, static_cast<int>(floor(N - e)))}};
    });
    GradedSeries total(l, N);
    accumulate(total, parts);
    return total;
}

WeylShift weyl_shift(const StandardModule& mod, const Weight& mu, const Weight& beta)
{
    const int l = mod.rank();
    WeylShift out;
    out.weight_shift.assign(l, 0);
    Rational depth(0);
    for (int i = 0; i < l; ++i) {
        out.weight_shift[i] = mu[i] * mod.k_alpha[i];
        int lambda = (i + 1 == mod.weight.j) ? mod.weight.kj : 0;
        for (int r = 0; r < l; ++r) lambda += beta[r] * mod.rs.cartan(i, r);
        depth += Rational(mu[i] * lambda);
        for (int r = 0; r < l; ++r) depth += Rational(mod.k * mu[i] * mu[r], 2) * mod.rs.coroot_pairing(i, r);
    }
    if (!is_integer(depth)) throw std::logic_error("non-integral depth shift under a Weyl translation");
    out.depth_shift = static_cast<int>(depth.numerator());
    return out;
}

GradedSeries vacuum_char(const StandardModule& mod, const Rational& N)
{
    const int l = mod.rank();
    const auto layout = PLayout::make(mod, true);
    const auto eform = energy_form(mod, layout);
    // Over all translates, depth >= conformal energy - |Lambda_bar|^2 / 2k.
    const auto classes = charge_classes(conformal_form(mod, layout), N + lambda_bar_energy(mod));
    auto parts = parallel_map(classes, [&](const std::vector<int>& P) {
        std::vector<ClassTerm> terms;
        const Rational e = eform(P);
        const Weight beta = layout.color_type(P, l);
        QuadraticForm<Rational> lattice{RationalMatrix(l, l), RationalVector(l)};
        for (int i = 0; i < l; ++i) {
            int lambda = (i + 1 == mod.weight.j) ? mod.weight.kj : 0;
            for (int r = 0; r < l; ++r) {
                lambda += beta[r] * mod.rs.cartan(i, r);
                lattice.A(i, r) = Rational(mod.k) * mod.rs.coroot_pairing(i, r);
            }
            lattice.b(i) = Rational(lambda);
        }
        for_each_lattice_point(lattice, N - e, false, [&](const std::vector<int>& mu, const Rational& value) {
            const auto shift = weyl_shift(mod, mu, beta);
            if (Rational(shift.depth_shift) != value) throw std::logic_error("Weyl shift disagrees with its lattice form");
            Weight w = beta;
            for (int i = 0; i < l; ++i) w[i] += shift.weight_shift[i];
            const Rational at = e + shift.depth_shift;
            terms.push_back({at, w, class_denominator(P, static_cast<int>(floor(N - at)))});
        });
        return terms;
    });
    GradedSeries total(l, N);
    accumulate(total, parts);
    return total;
}

GradedSeries module_char(const StandardModule& mod, const Rational& N)
{
    return euler_power(-1, mod.rank(), N) * vacuum_char(mod, N);
}

std::int64_t parafermion_denominator(const StandardModule& mod) { return 2 * mod.k * pairing_denominator(mod.rs); }

std::map<Weight, GradedSeries> parafermionic_char_per_class(const StandardModule& mod, const Rational& N)
{
    const int l = mod.rank();
    const auto layout = PLayout::make(mod, true);
    const auto form = conformal_form(mod, layout);
    const auto classes = charge_classes(form, N);
    auto parts = parallel_map(classes, [&](const std::vector<int>& P) {
        const Rational ce = form(P);
        return std::vector<ClassTerm>{{ce, class_of(mod, layout.color_type(P, l)), class_denominator(P, static_cast<int>(floor(N - ce)))}};
    });
    std::map<Weight, GradedSeries> out;
    for (const auto& part : parts) {
        for (const auto& t : part) {
            auto it = out.try_emplace(t.weight, 0, N, parafermion_denominator(mod)).first;
            add_shifted(it->second, t.shift, Weight{}, t.series);
        }
    }
    return out;
}

GradedSeries parafermionic_char(const StandardModule& mod, const Rational& N)
{
    GradedSeries total(0, N, parafermion_denominator(mod));
    for (const auto& [cls, s] : parafermionic_char_per_class(mod, N)) total = total + s;
    total.rescale(qpchar::lcm(total.denominator(), parafermion_denominator(mod)));
    return total;
}

std::map<Weight, GradedSeries> parafermionic_char_brute_per_class(const StandardModule& mod, const Rational& N)
{
    const int l = mod.rank();
    const auto layout = PLayout::make(mod, true);
    const auto form = conformal_form(mod, layout);
    const auto classes = charge_classes(form, N);
    using Found = std::vector<std::pair<Weight, Rational>>;
    auto parts = parallel_map(classes, [&](const std::vector<int>& P) {
        const auto charges = layout.charges(P, l);
        const Weight chg = layout.color_type(P, l);
        const Rational shift = weight_shift_energy(mod, chg);
        if (Rational(minimal_energy(mod, charges)) - shift != form(P))
            throw std::logic_error("minimal conformal energy of a charge class disagrees with its quadratic form");
        Found found;
        for_each_in_class(mod, charges, static_cast<int>(floor(N + shift)), [&](const QuasiParticleMonomial&, int en) {
            found.emplace_back(class_of(mod, chg), Rational(en) - shift);
        });
        return found;
    });
    std::map<Weight, GradedSeries> out;
    for (const auto& part : parts) {
        for (const auto& [cls, ce] : part) {
            auto it = out.try_emplace(cls, 0, N, parafermion_denominator(mod)).first;
            it->second.add_term(ce, Weight{}, Integer(1));
        }
    }
    return out;
}

GradedSeries parafermionic_char_brute(const StandardModule& mod, const Rational& N)
{
    GradedSeries total(0, N, parafermion_denominator(mod));
    for (const auto& [cls, s] : parafermionic_char_brute_per_class(mod, N)) total = total + s;
    total.rescale(qpchar::lcm(total.denominator(), parafermion_denominator(mod)));
    return total;
}

GradedSeries enumeration_series(const StandardModule& mod, const Rational& N, bool primed)
{
    GradedSeries total(mod.rank(), N);
    for (const auto& b : enumerate(mod, static_cast<int>(floor(N)), primed)) {
        auto [w, en] = weight_and_energy(b);
        total.add_term(Rational(en), w, Integer(1));
    }
    return total;
}

}  // namespace qpchar
