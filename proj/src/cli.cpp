#include "qpchar/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qpchar/bosonic.hpp"
#include "qpchar/fermionic.hpp"
#include "qpchar/parallel.hpp"
#include "qpchar/verify.hpp"

namespace qpchar {

namespace {

struct Options {
    std::string algebra;
    std::string weight = "1,0,1";
    std::string space = "principal";
    std::string form = "R";
    std::string source = "fermionic";
    std::string truncate = "10";
    std::string format = "table";
    std::string jt_sign = to_string(default_window_sign);
    std::string suite = "all";
    std::string cache_dir;
    bool primed = false;
    bool per_class = false;
    int threads = 0;
};

// A usage error carrying a one-line hint.
struct UsageError : std::runtime_error {
    std::string hint;
    UsageError(const std::string& what, std::string hint_) : std::runtime_error(what), hint(std::move(hint_)) {}
};

StandardModule module_from(const Options& o)
{
    if (o.algebra.empty()) throw UsageError("--algebra is required", "pass e.g. --algebra B2");
    LieType type;
    try {
        type = LieType::parse(o.algebra);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), "valid algebras: A1.., B2.., C2.., D4.., E6, E7, E8, F4, G2");
    }
    RootSystem rs = build(type);
    HighestWeight w;
    try {
        w = parse_weight(rs, o.weight);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), "--weight takes k0,kj,j with j a node of comark 1");
    }
    WindowSign sign;
    try {
        sign = parse_window_sign(o.jt_sign);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), "use --jt-sign plus or --jt-sign minus");
    }
    return StandardModule(std::move(rs), w, sign);
}

Rational truncation_from(const Options& o)
{
    Rational N;
    try {
        N = parse_rational(o.truncate);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), "--truncate takes an integer or a fraction such as 31/2");
    }
    if (N < Rational(0)) throw UsageError("truncation must be nonnegative", "pass --truncate 0 or larger");
    return N;
}

std::filesystem::path cache_dir_from(const Options& o)
{
    return o.cache_dir.empty() ? MultiplicityCache::default_dir() : std::filesystem::path(o.cache_dir);
}

void print_series(std::ostream& out, const GradedSeries& s, const std::string& format)
{
    if (format == "json") {
        out << to_json(s).dump() << '\n';
    } else if (format == "latex") {
        out << format_latex(s);
    } else {
        out << format_table(s);
    }
}

std::string weight_label(const Weight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

int run_char(const Options& o, std::ostream& out)
{
    const auto mod = module_from(o);
    const Rational N = truncation_from(o);
    const bool bosonic = o.source == "bosonic";
    const MultiplicityCache cache(cache_dir_from(o));

    if (o.space == "parafermionic" && o.per_class) {
        auto classes = bosonic ? parafermionic_char_bosonic_per_class(mod, N, &cache) : parafermionic_char_per_class(mod, N);
        if (o.format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [cls, s] : classes) arr.push_back({{"class", cls}, {"series", to_json(s)}});
            out << arr.dump() << '\n';
        } else {
            for (const auto& [cls, s] : classes) {
                out << "# class " << weight_label(cls) << '\n';
                print_series(out, s, o.format);
            }
        }
        return exit_ok;
    }

    GradedSeries s;
    if (o.space == "principal") {
        if (bosonic) throw UsageError("no bosonic principal character", "use --source fermionic with --space principal");
        s = o.form == "P" ? principal_char_P(mod, N, o.primed) : principal_char_R(mod, N, o.primed);
    } else if (o.space == "vacuum") {
        s = bosonic ? vacuum_char_bosonic(mod, N, &cache) : vacuum_char(mod, N);
    } else if (o.space == "module") {
        s = bosonic ? module_char_bosonic(mod, N, &cache) : module_char(mod, N);
    } else {
        s = bosonic ? parafermionic_char_bosonic(mod, N, &cache) : parafermionic_char(mod, N);
    }
    print_series(out, s, o.format);
    return exit_ok;
}

int run_enumerate(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto mod = module_from(o);
    const Rational N = truncation_from(o);
    const auto monomials = enumerate(mod, static_cast<int>(floor(N)), o.primed);
    std::map<int, std::size_t> counts;
    for (const auto& b : monomials) ++counts[weight_and_energy(b).second];

    std::ostringstream summary;
    summary << "energy  count\n";
    for (const auto& [e, c] : counts) summary << std::setw(6) << e << "  " << std::setw(5) << c << '\n';
    summary << "# " << monomials.size() << " monomials with energy <= " << floor(N) << '\n';

    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& b : monomials) arr.push_back(to_json(b));
        out << arr.dump() << '\n';
        err << summary.str();
    } else {
        for (const auto& b : monomials) out << to_json(b).dump() << '\n';
        out << summary.str();
    }
    return exit_ok;
}

int run_verify(const Options& o, std::ostream& out)
{
    const auto mod = module_from(o);
    const Rational N = truncation_from(o);
    Suite suite;
    try {
        suite = parse_suite(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), "--suite takes all, principal, module, vacuum or parafermion");
    }
    const MultiplicityCache cache(cache_dir_from(o));
    out << "# " << mod.rs.type.name() << " weight " << o.weight << " level " << mod.k << " truncate "
        << to_string(N) << " jt-sign " << to_string(mod.sign) << '\n';
    const auto report = verify_suite(mod, N, suite, &cache);
    print_report(out, report);
    return report.all_pass() ? exit_ok : exit_verify_failed;
}

int run_cache(const std::string& action, const Options& o, std::ostream& out)
{
    const MultiplicityCache cache(cache_dir_from(o));
    if (action == "clear") {
        std::size_t n = 0;
        try {
            n = cache.clear();
        } catch (const std::exception& e) {
            throw UsageError(e.what(), "point --cache-dir at a writable directory");
        }
        out << "removed " << n << " tables from " << cache.dir().string() << '\n';
        return exit_ok;
    }
    std::vector<MultiplicityCache::Entry> entries;
    try {
        entries = cache.list();
    } catch (const std::exception& e) {
        throw UsageError(e.what(), "point --cache-dir at a directory");
    }
    if (action == "stat") {
        out << "cache " << cache.dir().string() << '\n';
        for (const auto& e : entries)
            out << e.type << "  weight " << e.weight.k0 << "," << e.weight.kj << "," << e.weight.j << "  N "
                << e.depth_bound << "  entries " << e.entries << "  bytes " << std::filesystem::file_size(e.file) << '\n';
    } else {
        for (const auto& e : entries) out << e.file.filename().string() << '\n';
    }
    out << entries.size() << " tables\n";
    return exit_ok;
}

void add_instance_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--algebra", o.algebra, "Lie type, e.g. A1, B2, G2")->required();
    cmd->add_option("--weight", o.weight, "highest weight k0,kj,j")->capture_default_str();
    cmd->add_option("--truncate", o.truncate, "largest q exponent kept (integer or fraction)")->capture_default_str();
    cmd->add_option("--jt-sign", o.jt_sign, "j_t window sign: plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    cmd->add_option("--cache-dir", o.cache_dir, "multiplicity cache directory (default $CHARCACHE_DIR or ./.charcache)");
    cmd->add_option("--threads", o.threads, "worker threads (default $CHAR_THREADS or 1)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quasi-particle bases and fermionic characters of standard affine modules", "qpchar"};
    app.require_subcommand(1);
    Options o;

    auto* ch = app.add_subcommand("char", "print a character");
    add_instance_options(ch, o);
    ch->add_option("--space", o.space, "principal, vacuum, module or parafermionic")
        ->check(CLI::IsMember({"principal", "vacuum", "module", "parafermionic"}))
        ->capture_default_str();
    ch->add_option("--form", o.form, "R or P (principal space)")->check(CLI::IsMember({"R", "P"}))->capture_default_str();
    ch->add_option("--source", o.source, "fermionic or bosonic")
        ->check(CLI::IsMember({"fermionic", "bosonic"}))
        ->capture_default_str();
    ch->add_option("--format", o.format, "table, json or latex")
        ->check(CLI::IsMember({"table", "json", "latex"}))
        ->capture_default_str();
    ch->add_flag("--primed", o.primed, "principal space: restrict to charges below k_alpha");
    ch->add_flag("--per-class", o.per_class, "parafermionic space: one series per window class");

    auto* en = app.add_subcommand("enumerate", "list quasi-particle monomials");
    add_instance_options(en, o);
    en->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    en->add_flag("--primed", o.primed, "restrict to charges below k_alpha");

    auto* ve = app.add_subcommand("verify", "check the character identities on one instance");
    add_instance_options(ve, o);
    ve->add_option("--suite", o.suite, "all, principal, module, vacuum or parafermion")->capture_default_str();

    std::string cache_action = "list";
    auto* ca = app.add_subcommand("cache", "inspect or clear the multiplicity cache");
    ca->add_option("action", cache_action, "list, clear or stat")
        ->check(CLI::IsMember({"list", "clear", "stat"}))
        ->capture_default_str();
    ca->add_option("--cache-dir", o.cache_dir, "multiplicity cache directory");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return exit_ok;
        err << "hint: run with --help for the full grammar\n";
        return exit_usage;
    }

    int threads = o.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("CHAR_THREADS"); env && *env) threads = std::atoi(env);
    }
    set_thread_count(threads > 0 ? threads : 1);

    try {
        if (ch->parsed()) return run_char(o, out);
        if (en->parsed()) return run_enumerate(o, out, err);
        if (ve->parsed()) return run_verify(o, out);
        return run_cache(cache_action, o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nhint: " << e.hint << '\n';
        return exit_usage;
    } catch (const OracleError& e) {
        err << "oracle error: " << e.what() << '\n';
        return exit_verify_failed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_verify_failed;
    }
}

}  // namespace qpchar
