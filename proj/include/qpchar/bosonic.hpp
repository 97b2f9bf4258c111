#ifndef QPCHAR_BOSONIC_HPP
#define QPCHAR_BOSONIC_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpchar/graded_series.hpp"
#include "qpchar/quasiparticles.hpp"

namespace qpchar {

/// Raised when an oracle consistency check fails (never a user error).
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiplicities of the weights Lambda - n delta + beta of L(Lambda), n <= depth_bound.
struct MultiplicityTable {
    LieType type;
    HighestWeight weight;
    int depth_bound = 0;
    std::map<std::pair<int, Weight>, Integer> entries;

    Integer at(int n, const Weight& beta) const;
    /// Same table restricted to a smaller depth bound.
    MultiplicityTable restricted(int depth) const;

    friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// Affine Freudenthal recursion, shell by shell in depth.
MultiplicityTable freudenthal(const StandardModule& mod, int depth_bound);

nlohmann::json to_json(const MultiplicityTable& t);
MultiplicityTable table_from_json(const nlohmann::json& j);

/// On-disk store of multiplicity tables, one JSON file per highest weight.
class MultiplicityCache {
public:
    explicit MultiplicityCache(std::filesystem::path dir);

    /// CHARCACHE_DIR if set, else ./.charcache.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file_for(const LieType& type, const HighestWeight& w) const;

    /// A stored table covering depth_bound, if any.
    std::optional<MultiplicityTable> load(const LieType& type, const HighestWeight& w, int depth_bound) const;
    /// Atomic write (temporary file, then rename).
    void store(const MultiplicityTable& t) const;

    struct Entry {
        std::filesystem::path file;
        std::string type;
        HighestWeight weight;
        int depth_bound = 0;
        std::size_t entries = 0;
    };
    std::vector<Entry> list() const;
    /// Removes every cached table; returns how many were removed.
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
};

/// Loads from the cache when possible, otherwise computes and stores.
MultiplicityTable multiplicities(const StandardModule& mod, int depth_bound, const MultiplicityCache* cache);

/// sum mult q^n y^beta.
GradedSeries module_char_bosonic(const StandardModule& mod, const Rational& N, const MultiplicityCache* cache = nullptr);

/// Module character times prod (1 - q^m)^l. Throws OracleError on a negative coefficient.
GradedSeries vacuum_char_bosonic(const StandardModule& mod, const Rational& N, const MultiplicityCache* cache = nullptr);

/// (|Lambda_bar + beta|^2 - |Lambda_bar|^2) / 2k, computed from the fundamental weights.
Rational coset_shift(const StandardModule& mod, const Weight& beta);

/// Checks the coset energy on A_1, k = 2, Lambda = 2 Lambda_0: the depth-1
/// vacuum vector of weight alpha must have energy 1/2. Returns a failure
/// description, or nothing when the check passes.
std::optional<std::string> coset_anchor_failure();

/// Window sum of vacuum multiplicities with coset-shifted energies (q only).
/// Throws OracleError if the anchor check fails.
GradedSeries parafermionic_char_bosonic(const StandardModule& mod, const Rational& N,
                                        const MultiplicityCache* cache = nullptr);

/// Same, one series per window weight (m_1, ..., m_l).
std::map<Weight, GradedSeries> parafermionic_char_bosonic_per_class(const StandardModule& mod, const Rational& N,
                                                                    const MultiplicityCache* cache = nullptr);

/// Every finite Weyl reflection of Lambda_bar + beta, mapped back to beta when it
/// stays in the root lattice coset. Used for invariance spot checks.
std::vector<Weight> weyl_orbit(const StandardModule& mod, const Weight& beta);

}  // namespace qpchar

#endif  // QPCHAR_BOSONIC_HPP
