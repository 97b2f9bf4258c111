#ifndef QPCHAR_GRADED_SERIES_HPP
#define QPCHAR_GRADED_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpchar/rational.hpp"
#include "qpchar/root_system.hpp"

namespace qpchar {

/// Truncated series in q^{1/D} and y_1..y_l with exact integer coefficients.
///
/// Energies are stored as integer numerators over the series denominator D.
/// A series of dimension 0 carries no y-grading and multiplies with a series
/// of any dimension.
class GradedSeries {
public:
    using Key = std::pair<std::int64_t, Weight>;
    using Terms = std::map<Key, Integer>;

    GradedSeries() = default;
    GradedSeries(int dim, Rational truncation, std::int64_t denominator = 1);

    /// The constant series 1.
    static GradedSeries one(int dim, Rational truncation);

    int dim() const { return dim_; }
    const Rational& truncation() const { return truncation_; }
    std::int64_t denominator() const { return denominator_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Adds c q^energy y^w; terms above the truncation are dropped.
    void add_term(const Rational& energy, const Weight& w, const Integer& c);
    /// Same with the energy given as a numerator over denominator().
    void add_scaled(std::int64_t numerator, const Weight& w, const Integer& c);

    /// Re-expresses every energy over a multiple of the current denominator.
    void rescale(std::int64_t denominator);

    /// Stored coefficient or 0; throws std::out_of_range above the truncation.
    Integer coefficient(const Rational& energy, const Weight& w) const;

    /// Sets every y_i = 1.
    GradedSeries q_only() const;

    /// Same coefficients truncated to a lower bound.
    GradedSeries truncated(const Rational& truncation) const;

    Rational energy(std::int64_t numerator) const { return Rational(numerator, denominator_); }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b);

private:
    int dim_ = 0;
    Rational truncation_{0};
    std::int64_t denominator_ = 1;
    Terms terms_;
};

enum class SeriesOp { add, mul };

/// Exact sum or product truncated at the common truncation.
/// Throws std::invalid_argument on mismatched truncation or dimension.
GradedSeries combine(const GradedSeries& a, const GradedSeries& b, SeriesOp op);

inline GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) { return combine(a, b, SeriesOp::add); }
inline GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return combine(a, b, SeriesOp::mul); }

/// q^energy y^w, or the empty series when energy > truncation.
GradedSeries monomial(const Rational& energy, const Weight& w, const Rational& truncation);

/// 1 / prod_{i=1}^r (1 - q^i).
GradedSeries pochhammer_inv(int r, const Rational& truncation);

/// prod_{m>=1} (1 - q^m)^{e l}.
GradedSeries euler_power(int e, int l, const Rational& truncation);

/// Dense q-series with integer exponents 0..size()-1.
using DenseSeries = std::vector<Integer>;

DenseSeries dense_pochhammer_inv(int r, int max_degree);
DenseSeries dense_euler_power(int e, int max_degree);
DenseSeries dense_mul(const DenseSeries& a, const DenseSeries& b, int max_degree);

/// target += q^shift y^w * s (dense terms with integer exponents).
void add_shifted(GradedSeries& target, const Rational& shift, const Weight& w, const DenseSeries& s);

/// target += q^shift y^(shift_w) * s for every term of s.
void add_shifted(GradedSeries& target, const Rational& shift, const Weight& shift_w, const GradedSeries& s);

/// { "D", "N", "terms": [[numerator, weight, "coefficient"], ...] }.
nlohmann::json to_json(const GradedSeries& s);
GradedSeries series_from_json(const nlohmann::json& j);

/// Human-readable description of the first term where a and b differ.
std::optional<std::string> first_discrepancy(const GradedSeries& a, const GradedSeries& b);

std::string format_table(const GradedSeries& s);
std::string format_latex(const GradedSeries& s);

}  // namespace qpchar

#endif  // QPCHAR_GRADED_SERIES_HPP
