#include "qpchar/verify.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "qpchar/fermionic.hpp"

namespace qpchar {

bool VerifyReport::all_pass() const
{
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

Suite parse_suite(std::string_view text)
{
    if (text == "all") return Suite::all;
    if (text == "principal") return Suite::principal;
    if (text == "module") return Suite::module;
    if (text == "vacuum") return Suite::vacuum;
    if (text == "parafermion" || text == "parafermionic") return Suite::parafermion;
    throw std::invalid_argument("unknown suite '" + std::string(text) + "' (all, principal, module, vacuum, parafermion)");
}

IdentityResult compare_series(std::string name, const std::function<GradedSeries()>& lhs,
                              const std::function<GradedSeries()>& rhs)
{
    IdentityResult r;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        const GradedSeries a = lhs();
        const GradedSeries b = rhs();
        r.lhs_terms = a.size();
        r.rhs_terms = b.size();
        if (auto d = first_discrepancy(a, b)) {
            r.detail = "first discrepancy at " + *d;
        } else {
            r.pass = true;
        }
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerifyReport verify_suite(const StandardModule& mod, const Rational& N, Suite suite, const MultiplicityCache* cache)
{
    VerifyReport report;
    auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
    auto add = [&](IdentityResult r) { report.results.push_back(std::move(r)); };

    if (want(Suite::principal)) {
        for (bool primed : {false, true}) {
            const std::string tag = primed ? " (primed)" : "";
            add(compare_series("principal R-form = P-form" + tag, [&] { return principal_char_R(mod, N, primed); },
                               [&] { return principal_char_P(mod, N, primed); }));
            add(compare_series("principal formula = enumeration" + tag, [&] { return principal_char_R(mod, N, primed); },
                               [&] { return enumeration_series(mod, N, primed); }));
        }
    }
    if (want(Suite::module))
        add(compare_series("module fermionic = Freudenthal", [&] { return module_char(mod, N); },
                           [&] { return module_char_bosonic(mod, N, cache); }));
    if (want(Suite::vacuum))
        add(compare_series("vacuum fermionic = bosonic", [&] { return vacuum_char(mod, N); },
                           [&] { return vacuum_char_bosonic(mod, N, cache); }));
    if (want(Suite::parafermion)) {
        add(compare_series("parafermion formula = conformal-energy sum", [&] { return parafermionic_char(mod, N); },
                           [&] { return parafermionic_char_brute(mod, N); }));
        if (auto failure = coset_anchor_failure()) {
            add({"parafermion formula = bosonic", false, "coset anchor failed: " + *failure, 0, 0, 0});
        } else {
            add(compare_series("parafermion formula = bosonic", [&] { return parafermionic_char(mod, N); },
                               [&] { return parafermionic_char_bosonic(mod, N, cache); }));
        }
    }
    return report;
}

std::string format_result(const IdentityResult& r)
{
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", r.seconds);
    std::string line = (r.pass ? "PASS  " : "FAIL  ") + r.name + "  terms " + std::to_string(r.lhs_terms) + "/" +
                       std::to_string(r.rhs_terms) + "  " + timing;
    if (!r.detail.empty()) line += "  " + r.detail;
    return line;
}

void print_report(std::ostream& out, const VerifyReport& report)
{
    for (const auto& r : report.results) out << format_result(r) << '\n';
}

}  // namespace qpchar
