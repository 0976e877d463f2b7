#include "generators.hpp"
#include "junctionlab/inverse.hpp"

#include <doctest.h>

#include <algorithm>
#include <thread>

using namespace junctionlab;

namespace {

// Straight transcription of the decrement-loop generator program: lower the leading block
// m*b^d one unit at a time until its digit sum fits, then recurse on both halves.
// Only valid for u > b.
std::vector<std::int64_t> decrement_loop_gen(std::int64_t u, std::int64_t b) {
    if (u < 0 || u == 1) return {};
    if (u == 0) return {0};
    auto sumdigits = [b](std::int64_t v) {
        std::int64_t s = 0;
        for (; v > 0; v /= b) s += v % b;
        return s;
    };
    std::int64_t d = 0;
    std::int64_t pd = 1;
    while (pd <= u / b) {
        pd *= b;
        ++d;
    }
    std::int64_t m = u / pd;
    while (sumdigits(m) > u - m * pd) {
        if (--m == 0) {
            m = b - 1;
            --d;
            pd /= b;
        }
    }
    const std::int64_t k = u - m * pd - sumdigits(m);
    std::vector<std::int64_t> out;
    for (auto x : decrement_loop_gen(k, b)) out.push_back(x + m * pd);
    for (auto x : decrement_loop_gen((b - 1) * d - k - 2, b)) out.push_back(m * pd - 1 - x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("canonical_rep") {
    const auto r = canonical_rep(int_pow<Nat>(10, 13) + 1, Base(10));
    CHECK(r.m == 13);
    CHECK(r.c == 1);
    CHECK(r.k == 0);
    const auto s = canonical_rep<std::int64_t>(115, Base(10));
    CHECK(s.m == 2);
    CHECK(s.c == 1);
    CHECK(s.k == 14);
    for (std::uint32_t bv = 2; bv <= 10; ++bv)
        for (std::uint64_t rr = 2; rr <= 12; ++rr) {
            const auto t = canonical_rep(int_pow<std::int64_t>(bv, rr), Base(bv));
            CHECK(t.m == rr - 1);
            CHECK(t.c == bv - 1);
            CHECK(t.k == int_pow<std::int64_t>(bv, rr - 1) - bv + 1);
        }
    CHECK_THROWS_AS(canonical_rep<std::int64_t>(10, Base(10)), std::domain_error);
}

TEST_CASE("generators") {
    const Base ten(10);
    CHECK(generators<std::int64_t>(101, ten) == std::vector<std::int64_t>{91, 100});
    const auto big = generators(int_pow<Nat>(10, 13) + 1, ten);
    CHECK(big == std::vector<Nat>{Nat("9999999999892"), Nat("9999999999901"), Nat("10000000000000")});
    for (std::uint32_t bv = 2; bv <= 10; ++bv) CHECK(generators<std::int64_t>(1, Base(bv)).empty());
    CHECK(generators<std::int64_t>(-5, ten).empty());
    CHECK(generators<std::int64_t>(0, ten) == std::vector<std::int64_t>{0});
}

TEST_CASE("count_generators") {
    const Base ten(10);
    CHECK(count_generators(int_pow<Nat>(10, 13) + 1, ten) == 3);
    CHECK(count_generators(std::int64_t{0}, ten) + count_generators(std::int64_t{115}, ten) == 3);
    CHECK(count_generators(std::int64_t{115}, ten) == 2);
    CHECK(count_generators(std::int64_t{5}, Base(2)) == 2);
    CHECK(count_generators(std::int64_t{-7}, ten) == 0);
    CHECK(count_generators(std::int64_t{101}, ten) == 2);
}

TEST_CASE("generators_bruteforce") {
    const Base ten(10);
    CHECK(generators_bruteforce<std::int64_t>(101, ten) == std::vector<std::int64_t>{91, 100});
    CHECK(generators_bruteforce<std::int64_t>(20, ten).empty());
    CHECK(generators_bruteforce<std::int64_t>(0, ten) == std::vector<std::int64_t>{0});
}

TEST_CASE("base 2 f(u) and F(u) for u <= 18") {
    const Base two(2);
    const std::vector<std::uint64_t> f{0, 2, 3, 5, 5, 7, 8, 10, 9, 11, 12, 14, 14, 16, 17, 19, 17, 19, 20};
    const std::vector<std::uint32_t> F{1, 0, 1, 1, 0, 2, 0, 1, 1, 1, 1, 1, 1, 0, 2, 0, 1, 2, 0};
    for (std::uint64_t u = 0; u <= 18; ++u) {
        CHECK(step(u, two) == f[u]);
        CHECK(count_generators(static_cast<std::int64_t>(u), two) == F[u]);
    }
}

TEST_CASE("stream_by_count") {
    const Base ten(10);
    CHECK(stream_by_count(ten, [](std::uint32_t f) { return f == 0; }, 21) ==
          std::vector<std::uint64_t>{1, 3, 5, 7, 9, 20, 31, 42, 53, 64, 75, 86, 97, 108, 110,
                                     121, 132, 143, 154, 165, 176});
    CHECK(stream_by_count(ten, [](std::uint32_t f) { return f >= 2; }, 16) ==
          std::vector<std::uint64_t>{101, 103, 105, 107, 109, 111, 113, 115, 117, 202, 204, 206,
                                     208, 210, 212, 214});
    CHECK(stream_by_count(Base(3), [](std::uint32_t f) { return f == 0; }, 1) ==
          std::vector<std::uint64_t>{1});
}

TEST_CASE("smallest_with_count searches") {
    CHECK(smallest_with_count_scan(Base(2), 4, 10000) == 4102U);
    CHECK(smallest_with_count_scan(Base(10), 2, 1000) == 101U);
    CHECK(smallest_with_count_scan(Base(5), 5, 2000000) == 1953134U);
    CHECK_FALSE(smallest_with_count_scan(Base(10), 3, 1000000).has_value());
    CHECK(smallest_with_count_structured(Base(10), 3, 20) == BlockForm{13, 0});
    CHECK(smallest_with_count_structured(Base(10), 4, 30) == BlockForm{24, 101});
    CHECK(smallest_with_count_structured(Base(2), 5, 200)->value(Base(2)) == int_pow<Nat>(2, 136) + 6);
    CHECK_FALSE(smallest_with_count_structured(Base(10), 4, 23).has_value());
    CHECK(smallest_with_count_structured(Base(10), 5, 1ULL << 50U) == BlockForm{1111111111124ULL, 101});
}

TEST_CASE("count_table agrees with the memoized recurrence") {
    for (std::uint32_t bv = 2; bv <= 10; ++bv) {
        const Base b(bv);
        const auto table = count_table(b, 20000);
        bool same = true;
        for (std::int64_t u = 0; u <= 20000; ++u)
            same = same && table[static_cast<std::size_t>(u)] == count_generators(u, b);
        CHECK_MESSAGE(same, "b=" << bv);
    }
}

TEST_CASE("recurrence matches the window scan and the decrement loop") {
    for (std::uint32_t bv = 2; bv <= 10; ++bv) {
        const Base b(bv);
        bool ok = true;
        std::int64_t first_bad = -1;
        for (std::int64_t u = 0; u <= 100000 && ok; ++u) {
            const auto fast = generators(u, b);
            ok = fast == generators_bruteforce(u, b) && count_generators(u, b) == fast.size();
            if (u > static_cast<std::int64_t>(bv)) ok = ok && fast == decrement_loop_gen(u, bv);
            if (!ok) first_bad = u;
        }
        CHECK_MESSAGE(ok, "b=" << bv << " u=" << first_bad);
    }
}

TEST_CASE("recurrence matches the window scan on large random inputs") {
    testgen::Rng rng(5);
    for (int t = 0; t < 3000; ++t) {
        const Base b(rng.base());
        const Nat u = Nat(rng.interesting(b.value(), 1ULL << 62U)) * rng.uniform(1, 1000) + rng.uniform(0, 50);
        REQUIRE(generators(u, b) == generators_bruteforce(u, b));
    }
}

TEST_CASE("parity and partition identities") {
    constexpr std::int64_t limit = 100000;
    for (std::uint32_t bv = 2; bv <= 10; ++bv) {
        const Base b(bv);
        bool parity = true;
        std::uint64_t total = 0;
        for (std::int64_t u = 0; u <= limit; ++u) {
            const auto f = count_generators(u, b);
            total += f;
            if (u % 2 == 1 && (!b.is_even() || u < static_cast<std::int64_t>(bv)))
                parity = parity && f == 0;
        }
        std::uint64_t reach = 0;
        for (std::int64_t v = 0; v <= limit; ++v) reach += step(v, b) <= limit ? 1 : 0;
        CHECK_MESSAGE(parity, "b=" << bv);
        CHECK_MESSAGE(total == reach, "b=" << bv);
    }
}

TEST_CASE("generators are strictly increasing and lie in the window") {
    testgen::Rng rng(6);
    for (int t = 0; t < 5000; ++t) {
        const Base b(rng.base());
        const auto u = static_cast<std::int64_t>(rng.uniform(2, 1ULL << 40U));
        const auto gens = generators(u, b);
        const auto [lo, hi] = generator_window(u, b);
        REQUIRE(std::adjacent_find(gens.begin(), gens.end(), std::greater_equal<>()) == gens.end());
        for (auto v : gens) {
            REQUIRE(lo <= v);
            REQUIRE(v <= hi);
            REQUIRE(step(v, b) == u);
        }
    }
}

TEST_CASE("recursive arguments stay within [0, (b-1)m]") {
    testgen::Rng rng(7);
    for (int t = 0; t < 5000; ++t) {
        const Base b(rng.base());
        const auto m = rng.uniform(1, 18);
        if (b.minus_one() * m < 2) continue;
        const auto k = static_cast<std::int64_t>(rng.uniform(0, b.minus_one() * m - 2));
        const auto u = int_pow<std::int64_t>(b.value(), m) + 1 + k;
        const auto rep = canonical_rep(u, b);
        const auto bound = static_cast<std::int64_t>(b.minus_one() * m);
        REQUIRE(rep.m == m);
        REQUIRE(rep.c == 1);
        REQUIRE(rep.k == k);
        REQUIRE(bound - k - 2 >= 0);
        REQUIRE(bound - k - 2 <= bound);
    }
}

TEST_CASE("count cache is shared safely between threads and honours its cap") {
    CountCache cache(64);
    std::vector<std::thread> workers;
    std::vector<std::uint64_t> sums(4);
    for (std::size_t w = 0; w < sums.size(); ++w)
        workers.emplace_back([&, w] {
            for (std::int64_t u = 0; u < 5000; ++u) sums[w] += count_generators(u, Base(10), cache);
        });
    for (auto& t : workers) t.join();
    CHECK(sums[0] == sums[1]);
    CHECK(sums[2] == sums[3]);
    CHECK(cache.size() <= 64);

    CountCache fresh(CountCache::default_cap());
    std::uint64_t plain = 0;
    for (std::int64_t u = 0; u < 5000; ++u) plain += count_generators(u, Base(10), fresh);
    CHECK(plain == sums[0]);
}
