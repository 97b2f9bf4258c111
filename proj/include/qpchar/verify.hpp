#ifndef QPCHAR_VERIFY_HPP
#define QPCHAR_VERIFY_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qpchar/bosonic.hpp"
#include "qpchar/graded_series.hpp"
#include "qpchar/quasiparticles.hpp"

namespace qpchar {

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail;  ///< first discrepancy or error message; empty on success
    double seconds = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
};

struct VerifyReport {
    std::vector<IdentityResult> results;
    bool all_pass() const;
};

enum class Suite { all, principal, module, vacuum, parafermion };

Suite parse_suite(std::string_view text);

/// Compares two series produced by the given thunks, timing both.
IdentityResult compare_series(std::string name, const std::function<GradedSeries()>& lhs,
                              const std::function<GradedSeries()>& rhs);

/// Runs the identity checks of a suite on one instance.
VerifyReport verify_suite(const StandardModule& mod, const Rational& N, Suite suite,
                          const MultiplicityCache* cache = nullptr);

/// One line per identity: "PASS name  terms a/b  0.12s" or "FAIL name ... first discrepancy".
void print_report(std::ostream& out, const VerifyReport& report);
std::string format_result(const IdentityResult& r);

}  // namespace qpchar

#endif  // QPCHAR_VERIFY_HPP
