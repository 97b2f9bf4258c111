#include <doctest.h>

#include <numeric>

#include "qpchar/bosonic.hpp"
#include "qpchar/fermionic.hpp"
#include "qpchar/parallel.hpp"

using namespace qpchar;

namespace {

StandardModule make(const char* type, int k0, int kj, int j)
{
    auto rs = build(LieType::parse(type));
    const auto w = make_weight(rs, k0, kj, j);
    return StandardModule(std::move(rs), w);
}

// Restores the global thread count on scope exit.
struct ThreadScope {
    int saved = thread_count();
    explicit ThreadScope(int n) { set_thread_count(n); }
    ~ThreadScope() { set_thread_count(saved); }
};

template <typename Fn>
std::pair<std::string, std::string> serial_and_parallel(Fn&& fn)
{
    std::string serial, parallel;
    {
        ThreadScope scope(1);
        serial = fn();
    }
    {
        ThreadScope scope(4);
        parallel = fn();
    }
    return {serial, parallel};
}

}  // namespace

TEST_SUITE("determinism")
{
    TEST_CASE("parallel_map keeps input order")
    {
        ThreadScope scope(4);
        std::vector<int> items(1000);
        std::iota(items.begin(), items.end(), 0);
        const auto out = parallel_map(items, [](int x) { return x * x; });
        for (int i = 0; i < 1000; ++i) CHECK(out[i] == i * i);
    }

    TEST_CASE("parallel_map rethrows worker exceptions")
    {
        ThreadScope scope(3);
        std::vector<int> items{1, 2, 3, 4, 5};
        CHECK_THROWS_AS(parallel_map(items,
                                     [](int x) {
                                         if (x == 4) throw std::runtime_error("boom");
                                         return x;
                                     }),
                        std::runtime_error);
    }

    TEST_CASE("characters do not depend on the thread count")
    {
        const auto b2 = make("B2", 1, 1, 2);
        const auto g2 = make("G2", 1, 0, 2);
        auto [a, b] = serial_and_parallel([&] { return to_json(principal_char_R(b2, Rational(8), false)).dump(); });
        CHECK(a == b);
        std::tie(a, b) = serial_and_parallel([&] { return to_json(principal_char_P(g2, Rational(8), true)).dump(); });
        CHECK(a == b);
        std::tie(a, b) = serial_and_parallel([&] { return to_json(vacuum_char(b2, Rational(5))).dump(); });
        CHECK(a == b);
        std::tie(a, b) = serial_and_parallel([&] { return to_json(parafermionic_char(g2, Rational(4))).dump(); });
        CHECK(a == b);
    }

    TEST_CASE("Freudenthal tables do not depend on the thread count")
    {
        for (const auto& mod : {make("B2", 1, 1, 2), make("A2", 2, 0, 1), make("C2", 1, 1, 1)}) {
            auto [a, b] = serial_and_parallel([&] { return to_json(freudenthal(mod, 4)).dump(); });
            CHECK(a == b);
        }
    }

    TEST_CASE("enumeration does not depend on the thread count")
    {
        const auto mod = make("A2", 1, 1, 2);
        auto [a, b] = serial_and_parallel([&] {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& m : enumerate(mod, 7, false)) arr.push_back(to_json(m));
            return arr.dump();
        });
        CHECK(a == b);
    }
}
