#include "qpchar/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace qpchar {

namespace {

bool valid(Family f, int l)
{
    switch (f) {
    case Family::A: return l >= 1;
    case Family::B:
    case Family::C: return l >= 2;
    case Family::D: return l >= 4;
    case Family::E: return l >= 6 && l <= 8;
    case Family::F: return l == 4;
    case Family::G: return l == 2;
    }
    return false;
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

// Squared lengths and edges of the labelled diagram.
struct Diagram {
    std::vector<Rational> norms;
    std::vector<std::pair<int, int>> edges;  // 0-based
};

Diagram diagram(const LieType& t)
{
    const int l = t.rank;
    Diagram d;
    d.norms.assign(l, Rational(2));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (t.family) {
    case Family::A: chain(l); break;
    case Family::B:
        chain(l);
        d.norms[l - 1] = 1;
        break;
    case Family::C:
        chain(l);
        for (int i = 1; i < l; ++i) d.norms[i] = 1;
        break;
    case Family::D:
        chain(l - 1);
        d.edges.emplace_back(l - 3, l - 1);
        break;
    case Family::E:
        chain(l - 1);
        d.edges.emplace_back(l == 8 ? 4 : 2, l - 1);
        break;
    case Family::F:
        chain(4);
        d.norms[2] = d.norms[3] = 1;
        break;
    case Family::G:
        chain(2);
        d.norms[1] = Rational(2, 3);
        break;
    }
    return d;
}

// For adjacent nodes the pairing is fixed by the Cartan entry of the longer
// root: a_{long,short} = -1, i.e. <alpha_i, alpha_r> = -max(|alpha_i|^2, |alpha_r|^2) / 2.
RationalMatrix pairing_matrix(const Diagram& d)
{
    const auto l = static_cast<Eigen::Index>(d.norms.size());
    RationalMatrix m = RationalMatrix::Constant(l, l, Rational(0));
    for (Eigen::Index i = 0; i < l; ++i) m(i, i) = d.norms[i];
    for (auto [a, b] : d.edges) {
        Rational v = -std::max(d.norms[a], d.norms[b]) / 2;
        m(a, b) = m(b, a) = v;
    }
    return m;
}

std::vector<Weight> positive_roots(const Eigen::MatrixXi& cartan)
{
    const int l = static_cast<int>(cartan.rows());
    std::vector<Weight> roots;
    std::set<Weight> known;
    std::vector<Weight> layer;
    for (int i = 0; i < l; ++i) {
        Weight e(l, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    while (!layer.empty()) {
        roots.insert(roots.end(), layer.begin(), layer.end());
        std::vector<Weight> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < l; ++i) {
                // p = largest s with beta - s alpha_i a root
                int p = 0;
                Weight down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int r = 0; r < l; ++r) pairing += beta[r] * cartan(i, r);
                if (p - pairing > 0) {
                    Weight up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return roots;
}

}  // namespace

LieType LieType::parse(std::string_view text)
{
    if (text.size() < 2) throw InvalidLieType("unknown algebra '" + std::string(text) + "'");
    char c = text[0];
    if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
    if (c < 'A' || c > 'G') throw InvalidLieType("unknown algebra '" + std::string(text) + "'");
    int rank = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw InvalidLieType("unknown algebra '" + std::string(text) + "'");
    LieType t{static_cast<Family>(c - 'A'), rank};
    if (!valid(t.family, t.rank))
        throw InvalidLieType("unknown algebra '" + std::string(text) + "': no diagram of type " + t.name());
    return t;
}

std::string LieType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

int RootSystem::coxeter_number() const
{
    int h = 1;
    for (int a : marks) h += a;
    return h;
}

int RootSystem::dual_coxeter_number() const
{
    int h = 1;
    for (int a : comarks) h += a;
    return h;
}

Rational RootSystem::pair(const Weight& a, const Weight& b) const
{
    Rational s(0);
    const int l = rank();
    for (int i = 0; i < l; ++i) {
        if (a[i] == 0) continue;
        for (int r = 0; r < l; ++r)
            if (b[r] != 0) s += pairing(i, r) * (a[i] * b[r]);
    }
    return s;
}

RootSystem build(const LieType& type)
{
    if (!valid(type.family, type.rank))
        throw InvalidLieType("invalid family/rank pair " + type.name());
    const int l = type.rank;
    RootSystem rs;
    rs.type = type;
    auto d = diagram(type);
    rs.pairing = pairing_matrix(d);
    rs.coroot_pairing.resize(l, l);
    rs.cartan.resize(l, l);
    rs.nu.resize(l);
    for (int i = 0; i < l; ++i) {
        Rational nu = Rational(2) / d.norms[i];
        rs.nu[i] = static_cast<int>(nu.numerator());
        for (int r = 0; r < l; ++r) {
            rs.coroot_pairing(i, r) = Rational(4) * rs.pairing(i, r) / (d.norms[i] * d.norms[r]);
            Rational a = Rational(2) * rs.pairing(i, r) / d.norms[i];
            rs.cartan(i, r) = static_cast<int>(a.numerator());
        }
    }

    rs.positive_roots = positive_roots(rs.cartan);
    const Weight* theta = &rs.positive_roots.front();
    auto height = [](const Weight& w) {
        int h = 0;
        for (int x : w) h += x;
        return h;
    };
    for (const auto& r : rs.positive_roots)
        if (height(r) > height(*theta)) theta = &r;
    rs.marks = *theta;
    rs.comarks.resize(l);
    for (int i = 0; i < l; ++i) {
        Rational c = Rational(rs.marks[i]) * d.norms[i] / 2;
        rs.comarks[i] = static_cast<int>(c.numerator());
        if (rs.comarks[i] == 1) rs.allowed_j.push_back(i + 1);
    }

    rs.i_prime.assign(l, 0);
    for (int i = 2; i <= l; ++i) {
        int ip = i - 1;
        if (i == l && type.family == Family::D) ip = l - 2;
        if (i == l && type.family == Family::E) ip = (l == 8) ? 5 : 3;
        rs.i_prime[i - 1] = ip;
    }
    return rs;
}

RationalVector fundamental_weight(const RootSystem& rs, int j)
{
    const int l = rs.rank();
    if (j < 1 || j > l) throw std::out_of_range("node index out of range");
    // Gauss-Jordan on [cartan | e_j]; the Cartan matrix is invertible.
    RationalMatrix m(l, l + 1);
    for (int i = 0; i < l; ++i) {
        for (int r = 0; r < l; ++r) m(i, r) = Rational(rs.cartan(i, r));
        m(i, l) = Rational(i == j - 1 ? 1 : 0);
    }
    for (int c = 0; c < l; ++c) {
        int pivot = c;
        while (m(pivot, c) == Rational(0)) ++pivot;
        m.row(c).swap(m.row(pivot));
        const Rational inv = Rational(1) / m(c, c);
        for (int r = 0; r <= l; ++r) m(c, r) *= inv;
        for (int i = 0; i < l; ++i) {
            if (i == c || m(i, c) == Rational(0)) continue;
            const Rational f = m(i, c);
            for (int r = 0; r <= l; ++r) m(i, r) -= f * m(c, r);
        }
    }
    return m.col(l);
}

std::int64_t pairing_denominator(const RootSystem& rs)
{
    std::int64_t d = 1;
    for (Eigen::Index i = 0; i < rs.pairing.rows(); ++i)
        for (Eigen::Index r = 0; r < rs.pairing.cols(); ++r) d = qpchar::lcm(d, rs.pairing(i, r).denominator());
    return d;
}

int k_alpha(const RootSystem& rs, int i, int k)
{
    if (i < 1 || i > rs.rank()) throw std::out_of_range("color index out of range");
    return rs.nu[i - 1] * k;
}

LevelConstants level_constants(const RootSystem& rs, int i, int k)
{
    LevelConstants c;
    c.nu = k_alpha(rs, i, k) / k;
    if (i >= 2) {
        int ip = rs.i_prime[i - 1];
        c.i_prime = ip;
        c.mu = k_alpha(rs, i, k) / k_alpha(rs, ip, k);
    }
    return c;
}

HighestWeight make_weight(const RootSystem& rs, int k0, int kj, int j)
{
    if (k0 < 0 || kj < 0) throw std::invalid_argument("k0 and kj must be nonnegative");
    if (k0 + kj <= 0) throw std::invalid_argument("level k = k0 + kj must be positive");
    const auto& allowed = rs.allowed_j;
    if (kj == 0) {
        int jj = allowed.empty() ? 0 : allowed.front();
        return {k0, 0, jj};
    }
    if (std::find(allowed.begin(), allowed.end(), j) == allowed.end()) {
        std::string list;
        for (int a : allowed) list += (list.empty() ? "" : ",") + std::to_string(a);
        throw std::invalid_argument("node j=" + std::to_string(j) + " is not allowed for " + rs.type.name() +
                                    " (allowed: {" + list + "})");
    }
    return {k0, kj, j};
}

HighestWeight parse_weight(const RootSystem& rs, std::string_view text)
{
    int parts[3] = {0, 0, 0};
    std::size_t pos = 0;
    for (int n = 0; n < 3; ++n) {
        auto comma = text.find(',', pos);
        if ((n < 2) != (comma != std::string_view::npos))
            throw std::invalid_argument("weight must be 'k0,kj,j', got '" + std::string(text) + "'");
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), parts[n]);
        if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
            throw std::invalid_argument("weight must be 'k0,kj,j', got '" + std::string(text) + "'");
        pos = comma + 1;
    }
    return make_weight(rs, parts[0], parts[1], parts[2]);
}

WindowSign parse_window_sign(std::string_view text)
{
    if (text == "plus") return WindowSign::plus;
    if (text == "minus") return WindowSign::minus;
    throw std::invalid_argument("window sign must be 'plus' or 'minus'");
}

std::string to_string(WindowSign sign) { return sign == WindowSign::plus ? "plus" : "minus"; }

int window_start(const RootSystem& rs, const HighestWeight& w, WindowSign sign)
{
    if (w.j == 0) return w.level() + 1;
    const int nu = rs.nu[w.j - 1];
    const int start = sign == WindowSign::plus ? nu * w.k0 + (nu - 1) * w.kj + 1 : nu * w.k0 - (nu - 1) * w.kj + 1;
    return std::max(start, 1);
}

int j_window(const RootSystem& rs, const HighestWeight& w, int t, WindowSign sign)
{
    const int top = w.j == 0 ? w.level() : k_alpha(rs, w.j, w.level());
    if (t < 1 || t > top) throw std::out_of_range("charge t outside [1, k_alpha_j]");
    return t >= window_start(rs, w, sign) ? w.j : 0;
}

}  // namespace qpchar
