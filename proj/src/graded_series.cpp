#include "qpchar/graded_series.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace qpchar {

namespace {

std::int64_t scaled_floor(const Rational& x, std::int64_t denominator) { return floor(x * denominator); }

std::string weight_string(const Weight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

}  // namespace

GradedSeries::GradedSeries(int dim, Rational truncation, std::int64_t denominator)
    : dim_(dim), truncation_(truncation), denominator_(denominator)
{
    if (dim < 0) throw std::invalid_argument("series dimension must be nonnegative");
    if (denominator <= 0) throw std::invalid_argument("series denominator must be positive");
}

GradedSeries GradedSeries::one(int dim, Rational truncation)
{
    GradedSeries s(dim, truncation);
    s.add_term(Rational(0), Weight(dim, 0), Integer(1));
    return s;
}

void GradedSeries::add_term(const Rational& energy, const Weight& w, const Integer& c)
{
    if (energy > truncation_) return;
    if (denominator_ % energy.denominator() != 0) rescale(qpchar::lcm(denominator_, energy.denominator()));
    add_scaled(energy.numerator() * (denominator_ / energy.denominator()), w, c);
}

void GradedSeries::add_scaled(std::int64_t numerator, const Weight& w, const Integer& c)
{
    if (static_cast<int>(w.size()) != dim_) throw std::invalid_argument("weight dimension mismatch");
    if (c == 0 || Rational(numerator, denominator_) > truncation_) return;
    auto [it, inserted] = terms_.try_emplace(Key{numerator, w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedSeries::rescale(std::int64_t denominator)
{
    if (denominator == denominator_) return;
    if (denominator % denominator_ != 0) throw std::invalid_argument("rescale needs a multiple of the denominator");
    const std::int64_t factor = denominator / denominator_;
    Terms out;
    for (auto& [key, c] : terms_) out.emplace(Key{key.first * factor, key.second}, std::move(c));
    terms_ = std::move(out);
    denominator_ = denominator;
}

Integer GradedSeries::coefficient(const Rational& energy, const Weight& w) const
{
    if (energy > truncation_)
        throw std::out_of_range("energy " + to_string(energy) + " beyond truncation " + to_string(truncation_));
    if (denominator_ % energy.denominator() != 0) return 0;
    const Weight& key_w = dim_ == 0 ? Weight{} : w;
    auto it = terms_.find(Key{energy.numerator() * (denominator_ / energy.denominator()), key_w});
    return it == terms_.end() ? Integer(0) : it->second;
}

GradedSeries GradedSeries::q_only() const
{
    GradedSeries out(0, truncation_, denominator_);
    for (const auto& [key, c] : terms_) out.add_scaled(key.first, Weight{}, c);
    return out;
}

GradedSeries GradedSeries::truncated(const Rational& truncation) const
{
    if (truncation > truncation_) throw std::invalid_argument("cannot raise the truncation of a series");
    GradedSeries out(dim_, truncation, denominator_);
    for (const auto& [key, c] : terms_)
        if (Rational(key.first, denominator_) <= truncation) out.terms_.emplace(key, c);
    return out;
}

bool operator==(const GradedSeries& a, const GradedSeries& b)
{
    if (a.dim_ != b.dim_ || a.truncation_ != b.truncation_ || a.size() != b.size()) return false;
    return !first_discrepancy(a, b).has_value();
}

GradedSeries combine(const GradedSeries& a, const GradedSeries& b, SeriesOp op)
{
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("truncation mismatch: " + to_string(a.truncation()) + " vs " +
                                    to_string(b.truncation()));
    if (a.dim() != 0 && b.dim() != 0 && a.dim() != b.dim())
        throw std::invalid_argument("weight dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    const int dim = std::max(a.dim(), b.dim());
    const std::int64_t d = qpchar::lcm(a.denominator(), b.denominator());
    const std::int64_t fa = d / a.denominator();
    const std::int64_t fb = d / b.denominator();
    GradedSeries out(dim, a.truncation(), d);
    auto lift = [dim](const Weight& w) { return w.empty() ? Weight(dim, 0) : w; };

    if (op == SeriesOp::add) {
        for (const auto& [key, c] : a.terms()) out.add_scaled(key.first * fa, lift(key.second), c);
        for (const auto& [key, c] : b.terms()) out.add_scaled(key.first * fb, lift(key.second), c);
        return out;
    }
    const std::int64_t top = scaled_floor(a.truncation(), d);
    Weight w(dim, 0);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const std::int64_t e = ka.first * fa + kb.first * fb;
            if (e > top) continue;
            for (int i = 0; i < dim; ++i)
                w[i] = (ka.second.empty() ? 0 : ka.second[i]) + (kb.second.empty() ? 0 : kb.second[i]);
            out.add_scaled(e, w, ca * cb);
        }
    }
    return out;
}

GradedSeries monomial(const Rational& energy, const Weight& w, const Rational& truncation)
{
    GradedSeries s(static_cast<int>(w.size()), truncation, energy.denominator());
    s.add_term(energy, w, Integer(1));
    return s;
}

DenseSeries dense_mul(const DenseSeries& a, const DenseSeries& b, int max_degree)
{
    if (max_degree < 0) return {};
    DenseSeries out(max_degree + 1, Integer(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= max_degree; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_degree; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

DenseSeries dense_pochhammer_inv(int r, int max_degree)
{
    if (max_degree < 0) return {};
    DenseSeries s(max_degree + 1, Integer(0));
    s[0] = 1;
    // Multiply by 1/(1 - q^i) as a running prefix sum with stride i.
    for (int i = 1; i <= r; ++i)
        for (int n = i; n <= max_degree; ++n) s[n] += s[n - i];
    return s;
}

DenseSeries dense_euler_power(int e, int max_degree)
{
    if (max_degree < 0) return {};
    DenseSeries s(max_degree + 1, Integer(0));
    s[0] = 1;
    const int reps = e < 0 ? -e : e;
    for (int rep = 0; rep < reps; ++rep) {
        for (int m = 1; m <= max_degree; ++m) {
            if (e < 0) {
                for (int n = m; n <= max_degree; ++n) s[n] += s[n - m];
            } else {
                for (int n = max_degree; n >= m; --n) s[n] -= s[n - m];
            }
        }
    }
    return s;
}

void add_shifted(GradedSeries& target, const Rational& shift, const Weight& w, const DenseSeries& s)
{
    if (target.denominator() % shift.denominator() != 0)
        target.rescale(qpchar::lcm(target.denominator(), shift.denominator()));
    const std::int64_t d = target.denominator();
    const std::int64_t base = shift.numerator() * (d / shift.denominator());
    for (std::size_t n = 0; n < s.size(); ++n)
        if (s[n] != 0) target.add_scaled(base + static_cast<std::int64_t>(n) * d, w, s[n]);
}

void add_shifted(GradedSeries& target, const Rational& shift, const Weight& shift_w, const GradedSeries& s)
{
    std::int64_t d = qpchar::lcm(target.denominator(), qpchar::lcm(shift.denominator(), s.denominator()));
    target.rescale(d);
    const std::int64_t base = shift.numerator() * (d / shift.denominator());
    const std::int64_t f = d / s.denominator();
    Weight w(target.dim(), 0);
    for (const auto& [key, c] : s.terms()) {
        for (int i = 0; i < target.dim(); ++i)
            w[i] = (shift_w.empty() ? 0 : shift_w[i]) + (key.second.empty() ? 0 : key.second[i]);
        target.add_scaled(base + key.first * f, w, c);
    }
}

GradedSeries pochhammer_inv(int r, const Rational& truncation)
{
    if (r < 0) throw std::invalid_argument("pochhammer_inv needs r >= 0");
    GradedSeries s(0, truncation);
    add_shifted(s, Rational(0), Weight{}, dense_pochhammer_inv(r, static_cast<int>(floor(truncation))));
    return s;
}

GradedSeries euler_power(int e, int l, const Rational& truncation)
{
    if (l <= 0) throw std::invalid_argument("euler_power needs l >= 1");
    GradedSeries s(0, truncation);
    add_shifted(s, Rational(0), Weight{}, dense_euler_power(e * l, static_cast<int>(floor(truncation))));
    return s;
}

nlohmann::json to_json(const GradedSeries& s)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : s.terms()) terms.push_back({key.first, key.second, c.str()});
    return {{"D", s.denominator()}, {"N", to_string(s.truncation())}, {"terms", std::move(terms)}};
}

GradedSeries series_from_json(const nlohmann::json& j)
{
    const auto& terms = j.at("terms");
    int dim = terms.empty() ? 0 : static_cast<int>(terms.front().at(1).size());
    GradedSeries s(dim, parse_rational(j.at("N").get<std::string>()), j.at("D").get<std::int64_t>());
    for (const auto& t : terms)
        s.add_scaled(t.at(0).get<std::int64_t>(), t.at(1).get<Weight>(), Integer(t.at(2).get<std::string>()));
    return s;
}

std::optional<std::string> first_discrepancy(const GradedSeries& a, const GradedSeries& b)
{
    if (a.truncation() != b.truncation())
        return "truncation " + to_string(a.truncation()) + " vs " + to_string(b.truncation());
    if (a.dim() != 0 && b.dim() != 0 && a.dim() != b.dim())
        return "dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
    const std::int64_t d = qpchar::lcm(a.denominator(), b.denominator());
    const int dim = std::max(a.dim(), b.dim());
    std::map<GradedSeries::Key, std::pair<Integer, Integer>> merged;
    auto collect = [&](const GradedSeries& s, bool left) {
        const std::int64_t f = d / s.denominator();
        for (const auto& [key, c] : s.terms()) {
            auto& slot = merged[{key.first * f, key.second.empty() ? Weight(dim, 0) : key.second}];
            (left ? slot.first : slot.second) = c;
        }
    };
    collect(a, true);
    collect(b, false);
    for (const auto& [key, cs] : merged) {
        if (cs.first != cs.second) {
            return "q^" + to_string(Rational(key.first, d)) + " y^" + weight_string(key.second) + ": " +
                   cs.first.str() + " vs " + cs.second.str();
        }
    }
    return std::nullopt;
}

std::string format_table(const GradedSeries& s)
{
    std::vector<std::array<std::string, 3>> rows;
    std::array<std::size_t, 3> width{6, 6, 11};
    for (const auto& [key, c] : s.terms()) {
        std::array<std::string, 3> row{to_string(s.energy(key.first)), weight_string(key.second), c.str()};
        for (int i = 0; i < 3; ++i) width[i] = std::max(width[i], row[i].size());
        rows.push_back(std::move(row));
    }
    std::ostringstream out;
    auto emit = [&](const std::array<std::string, 3>& row) {
        out << std::string(width[0] - row[0].size(), ' ') << row[0] << "  " << row[1]
            << std::string(width[1] - row[1].size(), ' ') << "  " << std::string(width[2] - row[2].size(), ' ')
            << row[2] << '\n';
    };
    emit({"energy", "weight", "coefficient"});
    for (const auto& row : rows) emit(row);
    out << "# " << rows.size() << " terms, truncated at q^" << to_string(s.truncation()) << '\n';
    return out.str();
}

std::string format_latex(const GradedSeries& s)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : s.terms()) {
        Integer mag = c < 0 ? Integer(-c) : c;
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        std::string body;
        Rational e = s.energy(key.first);
        if (e == Rational(1)) {
            body += "q";
        } else if (e != Rational(0)) {
            const std::string x = is_integer(e) ? to_string(e)
                                                : "\\frac{" + std::to_string(e.numerator()) + "}{" +
                                                      std::to_string(e.denominator()) + "}";
            body += "q^{" + x + "}";
        }
        for (std::size_t i = 0; i < key.second.size(); ++i) {
            int p = key.second[i];
            if (p == 0) continue;
            body += " y_{" + std::to_string(i + 1) + "}";
            if (p != 1) body += "^{" + std::to_string(p) + "}";
        }
        if (mag != 1 || body.empty()) out << mag.str();
        out << body;
        first = false;
    }
    if (first) out << "0";
    out << " + \\cdots\n";
    return out.str();
}

}  // namespace qpchar
