#include <doctest.h>

#include "oracles.hpp"
#include "qpchar/fermionic.hpp"

using namespace qpchar;

namespace {

StandardModule make(const char* type, int k0, int kj, int j)
{
    auto rs = build(LieType::parse(type));
    const auto w = make_weight(rs, k0, kj, j);
    return StandardModule(std::move(rs), w);
}

int slot_of(const PLayout& layout, int i, int t)
{
    for (std::size_t s = 0; s < layout.size(); ++s)
        if (layout.slots[s] == std::pair<int, int>{i, t}) return static_cast<int>(s);
    FAIL("missing slot");
    return -1;
}

}  // namespace

TEST_SUITE("fermionic")
{
    TEST_CASE("F factors")
    {
        const Rational N(12);
        const auto a1 = make("A1", 1, 0, 1);
        CHECK_FALSE(first_discrepancy(F_factor(a1, 1, {}, N), GradedSeries::one(0, N)));
        for (int r = 0; r <= 3; ++r) {
            const auto expect = monomial(Rational(r * r), {}, N) * pochhammer_inv(r, N);
            CHECK_FALSE(first_discrepancy(F_factor(a1, 1, {r}, N), expect));
        }
        const auto shifted = make("A1", 1, 1, 1);
        const auto expect = monomial(Rational(3), {}, N) * pochhammer_inv(1, N);
        CHECK_FALSE(first_discrepancy(F_factor(shifted, 1, {1, 1}, N), expect));
        CHECK_THROWS_AS(F_factor(shifted, 1, {1, 2}, N), std::invalid_argument);
        CHECK_THROWS_AS(F_factor(shifted, 1, {1, 1, 1}, N), std::invalid_argument);
    }

    TEST_CASE("I factors")
    {
        const auto a2 = make("A2", 1, 0, 1);
        CHECK(I_exponent(a2, 2, {1}, {}) == 0);
        CHECK(I_exponent(a2, 2, {1}, {1}) == -1);
        CHECK(I_exponent(a2, 1, {1}, {1}) == 0);
        const auto b2 = make("B2", 1, 0, 1);
        CHECK(I_exponent(b2, 2, {1, 1}, {1}) == -2);
        const Rational N(3);
        CHECK_FALSE(first_discrepancy(I_factor(b2, 2, {1, 1}, {1}, N), monomial(Rational(-2), {}, N)));
    }

    TEST_CASE("energy form entries")
    {
        const auto a2 = make("A2", 1, 0, 1);
        const auto la = PLayout::make(a2, false);
        const auto fa = energy_form(a2, la);
        CHECK(fa.A(slot_of(la, 1, 1), slot_of(la, 2, 1)) == Rational(-1));

        const auto b2 = make("B2", 1, 0, 1);
        const auto lb = PLayout::make(b2, false);
        const auto fb = energy_form(b2, lb);
        CHECK(fb.A(slot_of(lb, 2, 1), slot_of(lb, 2, 1)) == Rational(2));
        CHECK(fb.A(slot_of(lb, 1, 1), slot_of(lb, 2, 1)) == Rational(-1));
        CHECK(fb.A == fb.A.transpose());
    }

    TEST_CASE("principal characters")
    {
        const auto a1 = make("A1", 1, 0, 1);
        const Rational N(4);
        GradedSeries expect(1, N);
        expect.add_term(Rational(0), {0}, 1);
        for (int n = 1; n <= 4; ++n) expect.add_term(Rational(n), {1}, 1);
        expect.add_term(Rational(4), {2}, 1);
        CHECK(principal_char_R(a1, N, false) == expect);
        CHECK(principal_char_P(a1, N, false) == expect);
        CHECK(principal_char_R(a1, N, true) == GradedSeries::one(1, N));
        CHECK(principal_char_R(make("B2", 1, 1, 2), Rational(0), false) == GradedSeries::one(2, Rational(0)));

        // Primed level two: sum_p q^{p^2} y^p / (q;q)_p.
        const auto two = principal_char_R(make("A1", 2, 0, 1), Rational(3), true);
        CHECK(two.q_only().coefficient(Rational(3), {}) == 1);
        CHECK(two.coefficient(Rational(1), {1}) == 1);
    }

    TEST_CASE("Weyl shifts")
    {
        const auto a1 = make("A1", 1, 0, 1);
        auto s = weyl_shift(a1, {0}, {0});
        CHECK(s.weight_shift == Weight{0});
        CHECK(s.depth_shift == 0);
        s = weyl_shift(a1, {1}, {0});
        CHECK(s.weight_shift == Weight{1});
        CHECK(s.depth_shift == 1);
        s = weyl_shift(a1, {1}, {1});
        CHECK(s.weight_shift == Weight{1});
        CHECK(s.depth_shift == 3);
        s = weyl_shift(a1, {-1}, {0});
        CHECK(s.weight_shift == Weight{-1});
        CHECK(s.depth_shift == 1);
    }

    TEST_CASE("vacuum characters")
    {
        const Rational N(4);
        GradedSeries lattice(1, N);
        for (int m = -2; m <= 2; ++m) lattice.add_term(Rational(m * m), {m}, 1);
        CHECK(vacuum_char(make("A1", 1, 0, 1), N) == lattice);
        CHECK(vacuum_char(make("A1", 2, 0, 1), Rational(2)).coefficient(Rational(1), {1}) == 1);
        CHECK(vacuum_char(make("B2", 1, 0, 1), Rational(1, 2)) == GradedSeries::one(2, Rational(1, 2)));
    }

    TEST_CASE("module characters")
    {
        const auto a1 = make("A1", 1, 0, 1);
        const auto m = module_char(a1, Rational(8));
        CHECK(m.coefficient(Rational(1), {0}) == 1);
        CHECK(m.coefficient(Rational(1), {1}) == 1);
        const auto dims = oracle::basic_a1_dimensions(8);
        CHECK(dims[0] == 1);
        CHECK(dims[1] == 3);
        CHECK(dims[2] == 4);
        const auto flat = m.q_only();
        for (int n = 0; n <= 8; ++n) CHECK(flat.coefficient(Rational(n), {}) == dims[n]);
        CHECK(module_char(make("G2", 1, 0, 2), Rational(0)) == GradedSeries::one(2, Rational(0)));
    }

    TEST_CASE("parafermionic characters")
    {
        const auto mod = make("A1", 2, 0, 1);
        const Rational N(4);
        const auto s = parafermionic_char(mod, N);
        const auto ref = oracle::half_square_sum(8);
        for (int twice = 0; twice <= 8; ++twice) {
            const auto it = ref.find(twice);
            CHECK(s.coefficient(Rational(twice, 2), {}) == (it == ref.end() ? 0 : it->second));
        }
        CHECK(format_latex(parafermionic_char(mod, Rational(3))) ==
              "1 + q^{\\frac{1}{2}} + q^{\\frac{3}{2}} + q^{2} + q^{\\frac{5}{2}} + q^{3} + \\cdots\n");

        for (const char* t : {"A1", "A3", "D4", "E6"}) {
            CAPTURE(t);
            const auto one = parafermionic_char(make(t, 1, 0, 1), Rational(10));
            CHECK_FALSE(first_discrepancy(one, GradedSeries::one(0, Rational(10))));
        }
        const auto shifted = make("A1", 1, 1, 1);
        CHECK(parafermionic_char(shifted, Rational(5)) == parafermionic_char_brute(shifted, Rational(5)));
    }

    TEST_CASE("per-class refinement sums to the total")
    {
        const auto mod = make("B2", 1, 0, 1);
        const Rational N(4);
        GradedSeries total(0, N, parafermion_denominator(mod));
        for (const auto& [cls, s] : parafermionic_char_per_class(mod, N)) total = total + s;
        CHECK_FALSE(first_discrepancy(total, parafermionic_char(mod, N)));
        CHECK(parafermionic_char_per_class(mod, N) == parafermionic_char_brute_per_class(mod, N));
    }
}
