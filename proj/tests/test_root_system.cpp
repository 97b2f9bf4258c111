#include <doctest.h>

#include <cmath>

#include <Eigen/LU>

#include "qpchar/root_system.hpp"

using namespace qpchar;

namespace {

std::vector<LieType> all_types()
{
    std::vector<LieType> out;
    for (int l = 1; l <= 6; ++l) out.push_back({Family::A, l});
    for (int l = 2; l <= 5; ++l) out.push_back({Family::B, l});
    for (int l = 2; l <= 5; ++l) out.push_back({Family::C, l});
    for (int l = 4; l <= 6; ++l) out.push_back({Family::D, l});
    for (int l = 6; l <= 8; ++l) out.push_back({Family::E, l});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

struct Known {
    int coxeter;
    int dual_coxeter;
    int index;  // [P:Q]
};

Known known(const LieType& t)
{
    const int l = t.rank;
    switch (t.family) {
    case Family::A: return {l + 1, l + 1, l + 1};
    case Family::B: return {2 * l, 2 * l - 1, 2};
    case Family::C: return {2 * l, l + 1, 2};
    case Family::D: return {2 * l - 2, 2 * l - 2, 4};
    case Family::E: return l == 6 ? Known{12, 12, 3} : l == 7 ? Known{18, 18, 2} : Known{30, 30, 1};
    case Family::F: return {12, 9, 1};
    case Family::G: return {6, 4, 1};
    }
    return {};
}

// Cartan matrices in the textbook (Bourbaki) numbering, a_ij = <alpha_i^vee, alpha_j>.
Eigen::MatrixXi bourbaki_cartan(const LieType& t)
{
    const int l = t.rank;
    Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(l, l);
    auto link = [&](int i, int j) { a(i - 1, j - 1) = a(j - 1, i - 1) = -1; };
    switch (t.family) {
    case Family::A:
        for (int i = 1; i < l; ++i) link(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < l; ++i) link(i, i + 1);
        a(l - 1, l - 2) = -2;
        break;
    case Family::C:
        for (int i = 1; i < l; ++i) link(i, i + 1);
        a(l - 2, l - 1) = -2;
        break;
    case Family::D:
        for (int i = 1; i < l - 1; ++i) link(i, i + 1);
        link(l - 2, l);
        break;
    case Family::E:
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < l; ++i) link(i, i + 1);
        break;
    case Family::F:
        a << 2, -1, 0, 0, -1, 2, -1, 0, 0, -2, 2, -1, 0, 0, -1, 2;
        break;
    case Family::G:
        a << 2, -3, -1, 2;
        break;
    }
    return a;
}

// Position in the textbook numbering of each node of our labelled diagrams.
std::vector<int> to_bourbaki(const LieType& t)
{
    const int l = t.rank;
    std::vector<int> m(l);
    for (int i = 0; i < l; ++i) m[i] = i + 1;
    if (t.family == Family::C)
        for (int i = 0; i < l; ++i) m[i] = l - i;
    if (t.family == Family::G) m = {2, 1};
    if (t.family == Family::E && l < 8) {
        m = {1, 3, 4, 5, 6, 7, 2};
        m.resize(l - 1);
        m.push_back(2);
    }
    if (t.family == Family::E && l == 8) m = {8, 7, 6, 5, 4, 3, 1, 2};
    return m;
}

}  // namespace

TEST_SUITE("root_system")
{
    TEST_CASE("parse and name")
    {
        CHECK(LieType::parse("B3").name() == "B3");
        CHECK(LieType::parse("g2") == LieType{Family::G, 2});
        CHECK_THROWS_AS(LieType::parse("X9"), std::invalid_argument);
        CHECK_THROWS_AS(LieType::parse("D3"), InvalidLieType);
        CHECK_THROWS_AS(LieType::parse("E9"), InvalidLieType);
        CHECK_THROWS_AS(build(LieType{Family::B, 1}), InvalidLieType);
    }

    TEST_CASE("A2 pairing")
    {
        const auto rs = build(LieType::parse("A2"));
        CHECK(rs.pairing(0, 0) == Rational(2));
        CHECK(rs.pairing(1, 1) == Rational(2));
        CHECK(rs.pairing(0, 1) == Rational(-1));
    }

    TEST_CASE("G2 labels and allowed nodes")
    {
        const auto rs = build(LieType::parse("G2"));
        CHECK(rs.pairing(0, 0) == Rational(2));
        CHECK(rs.pairing(1, 1) == Rational(2, 3));
        CHECK(rs.pairing(0, 1) == Rational(-1));
        CHECK(rs.allowed_j == std::vector<int>{2});
        CHECK(k_alpha(rs, 2, 4) == 12);
        CHECK(k_alpha(rs, 1, 4) == 4);
    }

    TEST_CASE("allowed nodes")
    {
        CHECK(build(LieType::parse("B3")).allowed_j == std::vector<int>{1, 3});
        CHECK(build(LieType::parse("A3")).allowed_j == std::vector<int>{1, 2, 3});
        CHECK(build(LieType::parse("C3")).allowed_j == std::vector<int>{1, 2, 3});
        CHECK(build(LieType::parse("D5")).allowed_j == std::vector<int>{1, 4, 5});
        CHECK(build(LieType::parse("F4")).allowed_j == std::vector<int>{4});
        CHECK(build(LieType::parse("E8")).allowed_j.empty());
    }

    TEST_CASE("levels of root subalgebras")
    {
        const auto b4 = build(LieType::parse("B4"));
        CHECK(k_alpha(b4, 4, 3) == 6);
        CHECK(k_alpha(b4, 1, 3) == 3);
        CHECK(k_alpha(build(LieType::parse("A3")), 2, 5) == 5);
        for (const auto& t : all_types()) {
            const auto rs = build(t);
            for (int i = 1; i <= t.rank; ++i) {
                CHECK(k_alpha(rs, i, 2) == rs.nu[i - 1] * 2);
                CHECK(rs.nu[i - 1] >= 1);
                CHECK(rs.nu[i - 1] <= 3);
            }
        }
    }

    TEST_CASE("level constants")
    {
        const auto d5 = build(LieType::parse("D5"));
        CHECK(level_constants(d5, 5, 1).i_prime == 3);
        CHECK(level_constants(d5, 4, 1).i_prime == 3);
        const auto b2 = level_constants(build(LieType::parse("B2")), 2, 1);
        CHECK(b2.nu == 2);
        CHECK(b2.i_prime == 1);
        CHECK(b2.mu == 2);
        const auto first = level_constants(build(LieType::parse("E7")), 1, 2);
        CHECK_FALSE(first.i_prime.has_value());
        CHECK_FALSE(first.mu.has_value());
        CHECK(level_constants(build(LieType::parse("E6")), 6, 1).i_prime == 3);
        CHECK(level_constants(build(LieType::parse("E8")), 8, 1).i_prime == 5);
        CHECK(level_constants(build(LieType::parse("G2")), 2, 1).mu == 3);
    }

    TEST_CASE("pairing symmetry, norms and coroot diagonal")
    {
        for (const auto& t : all_types()) {
            CAPTURE(t.name());
            const auto rs = build(t);
            for (int i = 0; i < t.rank; ++i) {
                CHECK(rs.coroot_pairing(i, i) == Rational(2 * rs.nu[i]));
                const Rational n = rs.pairing(i, i);
                CHECK((n == Rational(2) || n == Rational(1) || n == Rational(2, 3)));
                for (int r = 0; r < t.rank; ++r) {
                    CHECK(rs.pairing(i, r) == rs.pairing(r, i));
                    CHECK(rs.coroot_pairing(i, r) == rs.coroot_pairing(r, i));
                    if (i != r) CHECK(rs.pairing(i, r) <= Rational(0));
                }
            }
        }
    }

    TEST_CASE("Cartan matrices match the textbook tables after relabelling")
    {
        for (const auto& t : all_types()) {
            CAPTURE(t.name());
            const auto rs = build(t);
            const auto ref = bourbaki_cartan(t);
            const auto m = to_bourbaki(t);
            for (int i = 0; i < t.rank; ++i)
                for (int r = 0; r < t.rank; ++r) CHECK(rs.cartan(i, r) == ref(m[i] - 1, m[r] - 1));
        }
    }

    TEST_CASE("Coxeter numbers, root counts and lattice index")
    {
        for (const auto& t : all_types()) {
            CAPTURE(t.name());
            const auto rs = build(t);
            const auto k = known(t);
            CHECK(rs.coxeter_number() == k.coxeter);
            CHECK(rs.dual_coxeter_number() == k.dual_coxeter);
            CHECK(static_cast<int>(rs.positive_roots.size()) * 2 == t.rank * k.coxeter);
            const double det = rs.cartan.cast<double>().determinant();
            CHECK(std::lround(det) == k.index);
        }
    }

    TEST_CASE("fundamental weights are dual to the coroots")
    {
        for (const auto& t : all_types()) {
            CAPTURE(t.name());
            const auto rs = build(t);
            for (int j = 1; j <= t.rank; ++j) {
                const auto w = fundamental_weight(rs, j);
                for (int i = 0; i < t.rank; ++i) {
                    Rational s(0);
                    for (int r = 0; r < t.rank; ++r) s += Rational(rs.cartan(i, r)) * w(r);
                    CHECK(s == Rational(i == j - 1 ? 1 : 0));
                }
            }
        }
    }

    TEST_CASE("rectangular weights")
    {
        const auto b3 = build(LieType::parse("B3"));
        CHECK(parse_weight(b3, "1,2,3") == HighestWeight{1, 2, 3});
        CHECK(parse_weight(b3, "2,0,3") == HighestWeight{2, 0, 1});
        CHECK_THROWS_AS(parse_weight(b3, "1,1,2"), std::invalid_argument);
        CHECK_THROWS_AS(parse_weight(b3, "0,0,1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_weight(b3, "1,1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_weight(b3, "1,x,1"), std::invalid_argument);
    }

    TEST_CASE("j_t window")
    {
        const auto a1 = build(LieType::parse("A1"));
        CHECK(j_window(a1, {1, 1, 1}, 2) == 1);
        CHECK(j_window(a1, {1, 1, 1}, 1) == 0);
        CHECK(j_window(a1, {2, 0, 1}, 1) == 0);
        CHECK(j_window(a1, {2, 0, 1}, 2) == 0);
        CHECK_THROWS_AS(j_window(a1, {2, 0, 1}, 3), std::out_of_range);
        CHECK_THROWS_AS(j_window(a1, {2, 0, 1}, 0), std::out_of_range);

        // Short-root j: the two signs differ.
        const auto b2 = build(LieType::parse("B2"));
        const HighestWeight w{1, 1, 2};
        CHECK(window_start(b2, w, WindowSign::plus) == 4);
        CHECK(window_start(b2, w, WindowSign::minus) == 2);
        CHECK(j_window(b2, w, 3, WindowSign::plus) == 0);
        CHECK(j_window(b2, w, 4, WindowSign::plus) == 2);
        CHECK(j_window(b2, w, 3, WindowSign::minus) == 2);
        // Long-root j: the two signs agree.
        CHECK(window_start(b2, {1, 1, 1}, WindowSign::plus) == window_start(b2, {1, 1, 1}, WindowSign::minus));
    }

    TEST_CASE("empty window when kj = 0")
    {
        for (const auto& t : all_types()) {
            const auto rs = build(t);
            for (int k = 1; k <= 3; ++k) {
                const auto w = make_weight(rs, k, 0, 0);
                const int top = w.j == 0 ? k : k_alpha(rs, w.j, k);
                for (int t_ = 1; t_ <= top; ++t_)
                    for (auto sign : {WindowSign::plus, WindowSign::minus}) CHECK(j_window(rs, w, t_, sign) == 0);
            }
        }
    }
}
