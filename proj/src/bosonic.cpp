#include "qpchar/bosonic.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "qpchar/lattice.hpp"
#include "qpchar/parallel.hpp"

namespace qpchar {

namespace fs = std::filesystem;

Integer MultiplicityTable::at(int n, const Weight& beta) const
{
    auto it = entries.find({n, beta});
    return it == entries.end() ? Integer(0) : it->second;
}

MultiplicityTable MultiplicityTable::restricted(int depth) const
{
    if (depth > depth_bound) throw std::invalid_argument("cannot extend a multiplicity table by restriction");
    MultiplicityTable out{type, weight, depth, {}};
    for (const auto& [key, m] : entries)
        if (key.first <= depth) out.entries.emplace(key, m);
    return out;
}

namespace {

// Inner products scaled by 6, so every value below is an integer.
struct Scaled {
    int l = 0;
    int k = 0;
    int dual_coxeter = 0;
    std::vector<std::vector<std::int64_t>> S;  // 6 <alpha_i, alpha_r>
    std::vector<std::int64_t> L;               // 6 <Lambda_bar, alpha_i>
    std::vector<std::int64_t> Rho;             // 6 <rho, alpha_i>
    std::vector<Weight> roots;                 // all finite roots
    std::vector<Weight> positive;
    std::vector<int> marks;

    explicit Scaled(const StandardModule& mod)
        : l(mod.rank()), k(mod.k), dual_coxeter(mod.rs.dual_coxeter_number()), marks(mod.rs.marks)
    {
        S.assign(l, std::vector<std::int64_t>(l));
        L.assign(l, 0);
        Rho.assign(l, 0);
        for (int i = 0; i < l; ++i) {
            for (int r = 0; r < l; ++r) {
                const Rational v = mod.rs.pairing(i, r) * 6;
                S[i][r] = v.numerator();
            }
            Rho[i] = S[i][i] / 2;
        }
        if (mod.weight.kj > 0) L[mod.weight.j - 1] = mod.weight.kj * S[mod.weight.j - 1][mod.weight.j - 1] / 2;
        positive = mod.rs.positive_roots;
        roots = positive;
        for (auto r : positive) {
            for (int& x : r) x = -x;
            roots.push_back(r);
        }
    }

    std::int64_t ip(const Weight& a, const Weight& b) const
    {
        std::int64_t s = 0;
        for (int i = 0; i < l; ++i)
            if (a[i] != 0)
                for (int r = 0; r < l; ++r) s += a[i] * b[r] * S[i][r];
        return s;
    }
    std::int64_t dot(const std::vector<std::int64_t>& v, const Weight& b) const
    {
        std::int64_t s = 0;
        for (int i = 0; i < l; ++i) s += v[i] * b[i];
        return s;
    }
    // 6 (|Lambda + rho|^2 - |lambda + rho|^2) for lambda = Lambda - n delta + beta.
    std::int64_t lhs(int n, const Weight& beta) const
    {
        return 12LL * n * (k + dual_coxeter) - 2 * dot(L, beta) - ip(beta, beta) - 2 * dot(Rho, beta);
    }
    bool is_top(int n, const Weight& beta) const
    {
        return n == 0 && std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; });
    }
    bool admissible(int n, const Weight& beta) const
    {
        if (n < 0) return false;
        if (is_top(n, beta)) return true;
        for (int i = 0; i < l; ++i)
            if (beta[i] > n * marks[i]) return false;
        return lhs(n, beta) > 0;
    }
};

int height(const Weight& w)
{
    int h = 0;
    for (int x : w) h += x;
    return h;
}

Weight plus(const Weight& a, const Weight& b, int j)
{
    Weight out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += j * b[i];
    return out;
}

}  // namespace

MultiplicityTable freudenthal(const StandardModule& mod, int depth_bound)
{
    if (depth_bound < 0) throw std::invalid_argument("depth bound must be nonnegative");
    const Scaled sc(mod);
    const int l = sc.l;
    std::vector<std::map<Weight, Integer>> shells(depth_bound + 1);
    auto lookup = [&](int n, const Weight& beta) -> Integer {
        if (n < 0) return 0;
        auto it = shells[n].find(beta);
        return it == shells[n].end() ? Integer(0) : it->second;
    };

    for (int n = 0; n <= depth_bound; ++n) {
        // Candidates: |beta|^2 + 2 <Lambda_bar + rho, beta> < 2 n (k + h^vee).
        QuadraticForm<Rational> form{RationalMatrix(l, l), RationalVector(l)};
        for (int i = 0; i < l; ++i) {
            for (int r = 0; r < l; ++r) form.A(i, r) = Rational(sc.S[i][r], 3);
            form.b(i) = Rational(sc.L[i] + sc.Rho[i], 3);
        }
        std::map<int, std::vector<Weight>, std::greater<>> by_height;
        for_each_lattice_point(form, Rational(2 * n * (sc.k + sc.dual_coxeter)), false,
                               [&](const std::vector<int>& beta, const Rational&) {
                                   if (sc.admissible(n, beta)) by_height[height(beta)].push_back(beta);
                               });
        for (auto& [h, layer] : by_height) {
            std::sort(layer.begin(), layer.end());
            auto values = parallel_map(layer, [&](const Weight& beta) -> Integer {
                if (sc.is_top(n, beta)) return 1;
                Integer rhs = 0;
                for (const auto& alpha : sc.roots) {
                    const std::int64_t base = sc.dot(sc.L, alpha) + sc.ip(beta, alpha);  // 6 <Lambda_bar + beta, alpha>
                    const std::int64_t norm = sc.ip(alpha, alpha);
                    const bool positive = height(alpha) > 0;
                    for (int m = positive ? 0 : 1; m <= n; ++m) {
                        // Admissible points along the string form an interval starting at j = 0.
                        for (int j = 1; n - j * m >= 0; ++j) {
                            const Weight up = plus(beta, alpha, j);
                            if (!sc.admissible(n - j * m, up)) break;
                            const Integer mult = lookup(n - j * m, up);
                            if (mult != 0) rhs += Integer(base + 6LL * m * sc.k + j * norm) * mult;
                        }
                    }
                }
                for (int m = 1; m <= n; ++m)
                    for (int j = 1; j * m <= n; ++j) {
                        const Integer mult = lookup(n - j * m, beta);
                        if (mult != 0) rhs += Integer(6LL * l * m * sc.k) * mult;
                    }
                rhs *= 2;
                const Integer lhs = sc.lhs(n, beta);
                if (rhs % lhs != 0)
                    throw OracleError("non-integral Freudenthal multiplicity at depth " + std::to_string(n));
                Integer mult = rhs / lhs;
                if (mult < 0) throw OracleError("negative Freudenthal multiplicity at depth " + std::to_string(n));
                return mult;
            });
            for (std::size_t a = 0; a < layer.size(); ++a)
                if (values[a] != 0) shells[n].emplace(layer[a], values[a]);
        }
    }
    MultiplicityTable t{mod.rs.type, mod.weight, depth_bound, {}};
    for (int n = 0; n <= depth_bound; ++n)
        for (auto& [beta, m] : shells[n]) t.entries.emplace(std::make_pair(n, beta), std::move(m));
    return t;
}

nlohmann::json to_json(const MultiplicityTable& t)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, m] : t.entries) entries.push_back({key.first, key.second, m.str()});
    return {{"header",
             {{"type", std::string(1, "ABCDEFG"[static_cast<int>(t.type.family)])},
              {"rank", t.type.rank},
              {"k0", t.weight.k0},
              {"kj", t.weight.kj},
              {"j", t.weight.j},
              {"depth_bound", t.depth_bound}}},
            {"entries", std::move(entries)}};
}

MultiplicityTable table_from_json(const nlohmann::json& j)
{
    const auto& h = j.at("header");
    MultiplicityTable t;
    t.type = LieType::parse(h.at("type").get<std::string>() + std::to_string(h.at("rank").get<int>()));
    t.weight = {h.at("k0").get<int>(), h.at("kj").get<int>(), h.at("j").get<int>()};
    t.depth_bound = h.at("depth_bound").get<int>();
    for (const auto& e : j.at("entries")) {
        Integer m = e.at(2).is_string() ? Integer(e.at(2).get<std::string>()) : Integer(e.at(2).get<std::int64_t>());
        t.entries.emplace(std::make_pair(e.at(0).get<int>(), e.at(1).get<Weight>()), m);
    }
    return t;
}

MultiplicityCache::MultiplicityCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path MultiplicityCache::default_dir()
{
    if (const char* env = std::getenv("CHARCACHE_DIR"); env && *env) return env;
    return ".charcache";
}

fs::path MultiplicityCache::file_for(const LieType& type, const HighestWeight& w) const
{
    return dir_ / (type.name() + "_" + std::to_string(w.k0) + "_" + std::to_string(w.kj) + "_" + std::to_string(w.j) + ".json");
}

std::optional<MultiplicityTable> MultiplicityCache::load(const LieType& type, const HighestWeight& w, int depth_bound) const
{
    const auto file = file_for(type, w);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        auto t = table_from_json(nlohmann::json::parse(in));
        if (!(t.type == type) || !(t.weight == w) || t.depth_bound < depth_bound) return std::nullopt;
        return t.depth_bound == depth_bound ? t : t.restricted(depth_bound);
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are recomputed
    }
}

namespace {

// False when the directory does not exist yet; throws when the path is taken by something else.
bool usable_dir(const fs::path& dir)
{
    std::error_code ec;
    if (!fs::exists(dir, ec)) return false;
    if (!fs::is_directory(dir, ec)) throw std::runtime_error("cache path " + dir.string() + " is not a directory");
    return true;
}

}  // namespace

void MultiplicityCache::store(const MultiplicityTable& t) const
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto target = file_for(t.type, t.weight);
    std::random_device rd;
    const auto temp = target.string() + ".tmp." + std::to_string(rd());
    {
        std::ofstream out(temp);
        if (!out) throw std::runtime_error("cannot write cache file " + temp);
        out << to_json(t).dump() << '\n';
        if (!out) throw std::runtime_error("cannot write cache file " + temp);
    }
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp);
        throw std::runtime_error("cannot install cache file " + target.string() + ": " + ec.message());
    }
}

std::vector<MultiplicityCache::Entry> MultiplicityCache::list() const
{
    std::vector<Entry> out;
    if (!usable_dir(dir_)) return out;
    for (const auto& f : fs::directory_iterator(dir_)) {
        if (f.path().extension() != ".json") continue;
        try {
            std::ifstream in(f.path());
            auto t = table_from_json(nlohmann::json::parse(in));
            out.push_back({f.path(), t.type.name(), t.weight, t.depth_bound, t.entries.size()});
        } catch (const std::exception&) {
        }
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.file < b.file; });
    return out;
}

std::size_t MultiplicityCache::clear() const
{
    std::size_t removed = 0;
    std::error_code ec;
    if (!usable_dir(dir_)) return 0;
    std::vector<fs::path> doomed;
    for (const auto& f : fs::directory_iterator(dir_))
        if (f.path().extension() == ".json" || f.path().string().find(".json.tmp.") != std::string::npos)
            doomed.push_back(f.path());
    for (const auto& p : doomed) {
        fs::remove(p, ec);
        if (ec) throw std::runtime_error("cannot remove " + p.string() + ": " + ec.message());
        ++removed;
    }
    return removed;
}

MultiplicityTable multiplicities(const StandardModule& mod, int depth_bound, const MultiplicityCache* cache)
{
    if (cache) {
        if (auto t = cache->load(mod.rs.type, mod.weight, depth_bound)) return *t;
    }
    auto t = freudenthal(mod, depth_bound);
    if (cache) {
        try {
            cache->store(t);
        } catch (const std::exception&) {
            // An unwritable cache only costs recomputation.
        }
    }
    return t;
}

GradedSeries module_char_bosonic(const StandardModule& mod, const Rational& N, const MultiplicityCache* cache)
{
    const int depth = static_cast<int>(floor(N));
    GradedSeries s(mod.rank(), N);
    if (depth < 0) return s;
    for (const auto& [key, m] : multiplicities(mod, depth, cache).entries) s.add_term(Rational(key.first), key.second, m);
    return s;
}

GradedSeries vacuum_char_bosonic(const StandardModule& mod, const Rational& N, const MultiplicityCache* cache)
{
    GradedSeries s = euler_power(1, mod.rank(), N) * module_char_bosonic(mod, N, cache);
    for (const auto& [key, c] : s.terms())
        if (c < 0) throw OracleError("negative vacuum-space dimension at q^" + to_string(s.energy(key.first)));
    return s;
}

Rational coset_shift(const StandardModule& mod, const Weight& beta)
{
    const int l = mod.rank();
    RationalVector bar = RationalVector::Constant(l, Rational(0));
    if (mod.weight.kj > 0) bar = fundamental_weight(mod.rs, mod.weight.j) * Rational(mod.weight.kj);
    RationalVector mu = bar;
    for (int i = 0; i < l; ++i) mu(i) += Rational(beta[i]);
    auto norm = [&](const RationalVector& v) {
        Rational s(0);
        for (int i = 0; i < l; ++i)
            for (int r = 0; r < l; ++r) s += v(i) * v(r) * mod.rs.pairing(i, r);
        return s;
    };
    return (norm(mu) - norm(bar)) / (2 * mod.k);
}

std::optional<std::string> coset_anchor_failure()
{
    const auto rs = build(LieType{Family::A, 1});
    const StandardModule mod(rs, make_weight(rs, 2, 0, 1));
    const auto vac = vacuum_char_bosonic(mod, Rational(1));
    const Integer dim = vac.coefficient(Rational(1), Weight{1});
    const Rational energy = Rational(1) - coset_shift(mod, Weight{1});
    if (dim != 1 || energy != Rational(1, 2)) {
        return "anchor A1, k=2, 2Lambda_0, depth 1, weight alpha: dimension " + dim.str() + ", energy " +
               to_string(energy) + " (expected 1 and 1/2)";
    }
    return std::nullopt;
}

std::map<Weight, GradedSeries> parafermionic_char_bosonic_per_class(const StandardModule& mod, const Rational& N,
                                                                    const MultiplicityCache* cache)
{
    if (auto failure = coset_anchor_failure()) throw OracleError("coset energy anchor failed: " + *failure);
    const int l = mod.rank();
    std::vector<Weight> window{Weight(l, 0)};
    for (int i = 0; i < l; ++i) {
        std::vector<Weight> next;
        for (const auto& w : window)
            for (int m = 0; m < mod.k_alpha[i]; ++m) {
                Weight v = w;
                v[i] = m;
                next.push_back(v);
            }
        window = std::move(next);
    }
    std::map<Weight, Rational> shift;
    Rational widest(0);
    for (const auto& w : window) {
        shift[w] = coset_shift(mod, w);
        widest = std::max(widest, shift[w]);
    }
    const Rational depth = Rational(floor(N + widest));
    const auto vac = vacuum_char_bosonic(mod, depth, cache);
    std::map<Weight, GradedSeries> out;
    const std::int64_t d = 2 * mod.k * pairing_denominator(mod.rs);
    for (const auto& w : window) out.try_emplace(w, 0, N, d);
    for (const auto& [key, c] : vac.terms()) {
        auto it = shift.find(key.second);
        if (it == shift.end()) continue;
        out.at(key.second).add_term(vac.energy(key.first) - it->second, Weight{}, c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

GradedSeries parafermionic_char_bosonic(const StandardModule& mod, const Rational& N, const MultiplicityCache* cache)
{
    GradedSeries total(0, N, 2 * mod.k * pairing_denominator(mod.rs));
    for (const auto& [w, s] : parafermionic_char_bosonic_per_class(mod, N, cache)) total = total + s;
    return total;
}

std::vector<Weight> weyl_orbit(const StandardModule& mod, const Weight& beta)
{
    const int l = mod.rank();
    std::set<Weight> seen{beta};
    std::vector<Weight> frontier{beta};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < l; ++i) {
                // s_i(Lambda_bar + b) - Lambda_bar = b - <alpha_i^vee, Lambda_bar + b> alpha_i
                int c = (i + 1 == mod.weight.j) ? mod.weight.kj : 0;
                for (int r = 0; r < l; ++r) c += mod.rs.cartan(i, r) * b[r];
                Weight v = b;
                v[i] -= c;
                if (seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace qpchar
