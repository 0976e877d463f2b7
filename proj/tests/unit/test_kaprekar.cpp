#include "junctionlab/inverse.hpp"
#include "junctionlab/kaprekar.hpp"

#include <doctest.h>

#include <algorithm>

using namespace junctionlab;

namespace {

TowerInt tw(const std::string& text, std::uint32_t b) { return parse_tower(text, Base(b)); }

TowerInt num(std::uint64_t v, std::uint32_t b) { return TowerInt::from_u64(v, Base(b)); }

std::vector<std::uint32_t> tau_of(std::uint32_t b, std::uint64_t n_max) {
    return tau_sequence(KTable(Base(b), n_max), n_max);
}

}  // namespace

TEST_CASE("index_set") {
    CHECK(index_set(Base(10)) == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(index_set(Base(5)) == std::vector<std::uint32_t>{0, 2});
    CHECK(index_set(Base(2)) == std::vector<std::uint32_t>{0});
    CHECK(index_set(Base(3)) == std::vector<std::uint32_t>{0});
    CHECK(reduce_index(-4, Base(10)) == 5);
}

TEST_CASE("seed rows") {
    const auto ten = seed_row(Base(10));
    const std::vector<std::uint64_t> expect{0, 10, 2, 12, 4, 14, 6, 16, 8};
    for (std::uint32_t i = 0; i < 9; ++i) CHECK(ten.K.at(i) == num(expect[i], 10));
    const auto six = seed_row(Base(6));
    const std::vector<std::uint64_t> expect6{0, 6, 2, 8, 4};
    for (std::uint32_t i = 0; i < 5; ++i) CHECK(six.K.at(i) == num(expect6[i], 6));
    CHECK(seed_row(Base(3)).K.at(0).is_zero());
}

TEST_CASE("kprime examples") {
    const KTable five(Base(5), 5);
    CHECK(five.kprime(5, 0) == num(34, 5));
    CHECK(five.kprime(2, 0) == num(2, 5));
    for (std::uint32_t b = 4; b <= 12; b += 2) {
        const KTable t(Base(b), 4);
        for (std::uint32_t i = 1; i + 3 < b; ++i)
            CHECK_MESSAGE(t.kprime(4, i) == num(2 * b * b + 2 * b - 6, b), "b=" << b << " i=" << i);
    }
}

TEST_CASE("extend_table examples") {
    const KTable ten = extend_table(Base(10), 4);
    CHECK(ten.row(4).K.at(4) == tw("10^24+102", 10));
    CHECK(ten.row(4).Kmin == ten.row(4).K.at(4));
    CHECK(*ten.row(4).B == num(24, 10));

    const KTable five(Base(5), 9);
    const auto& r9 = five.row(9);
    CHECK(*r9.B == num(488442, 5));
    CHECK(r9.Kmin == tw("5^488442+5^4+8", 5));
    CHECK(r9.K.at(2) == r9.Kmin);
    CHECK(r9.h.at(0) == 5);
    CHECK(r9.h.at(2) == 4);
}

TEST_CASE("closed forms for n = 1, 2, 3 in bases 2..12") {
    for (std::uint32_t bv = 2; bv <= 12; ++bv) {
        const Base b(bv);
        const KTable t(b, 3);
        INFO("b=" << bv);
        const std::uint64_t mod = bv - 1;
        auto K = [&](std::uint64_t n, std::uint64_t i) { return t.row(n).K.at(static_cast<std::uint32_t>(i % mod)); };
        if (b.is_even()) {
            for (std::uint64_t l = 0; 2 * l <= bv - 2; ++l) CHECK(K(1, 2 * l) == num(2 * l, bv));
            for (std::uint64_t l = 0; 2 * l + 4 <= bv; ++l) CHECK(K(1, 2 * l + 1) == num(bv + 2 * l, bv));
            for (std::uint64_t l = 0; l <= bv - 2; ++l)
                CHECK(K(2, 2 + 2 * l) == num(bv * bv + 1 + 2 * l, bv));
            if (bv >= 4) {
                const TowerInt top = TowerInt::power_of_base(num(bv + 3, bv));
                CHECK(K(3, 0) == top.add_u64(bv * bv + 2 * bv - 4));
                for (std::uint64_t l = 0; l <= bv - 3; ++l) CHECK(K(3, 2 + 2 * l) == top.add_u64(1 + 2 * l));
            }
        } else {
            for (std::uint64_t l = 0; 2 * l + 3 <= bv; ++l) CHECK(K(1, 2 * l) == num(2 * l, bv));
            for (std::uint64_t l = 0; 2 * l + 3 <= bv; ++l) CHECK(K(2, 2 + 2 * l) == num(bv + 1 + 2 * l, bv));
            if (bv >= 5) {
                CHECK(K(3, 0) == num(bv * bv + 2 * bv - 3, bv));
                for (std::uint64_t l = 0; 2 * l + 5 <= bv; ++l) CHECK(K(3, 2 + 2 * l) == num(bv * bv + 1 + 2 * l, bv));
            }
        }
    }
}

TEST_CASE("fast path") {
    const auto b8 = fast_path(Base(2), 8);
    CHECK(b8.B == num(8206, 2));
    CHECK(b8.K == tw("2^8206+4103", 2));
    CHECK(fast_path(Base(3), 5).K == tw("3^17+5", 3));
    CHECK(fast_path(Base(2), 2).K == tw("2^2+1", 2));
    CHECK_THROWS(fast_path(Base(4), 3));
    for (std::uint32_t b : {2U, 3U}) {
        const KTable t(Base(b), 32);
        for (std::uint64_t n = 2; n <= 32; ++n) {
            const auto fp = fast_path(Base(b), n);
            CHECK_MESSAGE(fp.B == *t.row(n).B, "b=" << b << " n=" << n);
            CHECK_MESSAGE(fp.K == t.row(n).Kmin, "b=" << b << " n=" << n);
        }
    }
}

TEST_CASE("quasi-positional representations") {
    const KTable ten(Base(10), 8);
    const auto& r8 = ten.row(8);
    const auto rep = quasi_rep(ten, 8, r8.argmin);
    CHECK(rep.alphas == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(rep.ns == std::vector<std::uint64_t>{8, 4, 2});
    CHECK(rep.beta == 0);
    CHECK(evaluate(ten, rep) == TowerInt::power_of_base(*r8.B) + tw("10^24+103", 10));
    CHECK(render(rep, Base(10)) == "cB(8)+cB(4)+cB(2)+K_0(1)");

    const auto one = quasi_rep(ten, 1, 3);
    CHECK(one.alphas.empty());
    CHECK(one.beta == 3);

    const KTable two(Base(2), 4);
    const auto r = quasi_rep(two, 4, 0);
    CHECK(r.ns == std::vector<std::uint64_t>{4, 2});
    CHECK(evaluate(two, r) == tw("2^12+6", 2));
}

TEST_CASE("base pairs 2m and 4m-1 share their representations") {
    for (std::uint32_t m : {1U, 2U, 5U}) {
        const auto report = base_pair_equivalent(m, 16);
        CHECK_MESSAGE(report.equivalent, report.first_mismatch);
    }
}

TEST_CASE("tau sequences") {
    CHECK(tau_of(5, 16) == std::vector<std::uint32_t>{0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0});
    CHECK(tau_of(4, 13) == std::vector<std::uint32_t>{0, 2, 2, 1, 1, 1, 2, 0, 2, 0, 2, 0, 0});
    CHECK(tau_of(10, 8) == std::vector<std::uint32_t>{0, 2, 2, 4, 4, 4, 4, 6});
}

TEST_CASE("base 5 tau is the Thue-Morse recurrence") {
    const auto tau = tau_of(5, 128);
    for (std::uint64_t n = 2; n <= 128; ++n) {
        const auto expect = n % 2 == 1 ? tau[(n + 1) / 2 - 1] : 1 - tau[n / 2 - 1];
        CHECK_MESSAGE(tau[n - 1] == expect, "n=" << n);
    }
}

TEST_CASE("base 4 tau block pattern and the base 7 relabelling") {
    std::vector<std::uint32_t> expect{0, 2, 2};
    for (std::uint64_t delta = 3; expect.size() < 1000; delta = 4 * delta + 1) {
        expect.insert(expect.end(), delta, 1);
        for (std::uint64_t k = 0; k < delta; ++k) {
            expect.push_back(2);
            expect.push_back(0);
        }
        expect.push_back(0);
    }
    expect.resize(1000);
    const auto tau4 = tau_of(4, 1000);
    CHECK(tau4 == expect);

    auto tau7 = tau_of(7, 100);
    for (auto& t : tau7) t = t == 1 ? 2 : t == 2 ? 1 : t;
    CHECK(std::equal(tau7.begin(), tau7.end(), tau4.begin()));
}

TEST_CASE("heights of K(n)") {
    const KTable ten(Base(10), 16);
    CHECK(height_of_K(ten, 3) == 4);
    std::vector<std::uint64_t> heights;
    for (std::uint64_t n = 2; n <= 16; ++n) heights.push_back(height_of_K(ten, n));
    CHECK(heights == std::vector<std::uint64_t>{3, 4, 4, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6});
    for (std::uint32_t b : {3U, 5U, 7U, 9U}) CHECK(height_of_K(KTable(Base(b), 2), 2) == 3);
    CHECK(height_of_K(KTable(Base(2), 2), 2) == 4);
    CHECK_FALSE(conjectured_height(Base(3), 2).has_value());
    CHECK(conjectured_height(Base(10), 16) == 6U);
}

TEST_CASE("toy sequence") {
    const auto a = toy_sequence_a(40);
    const std::vector<std::uint64_t> exponents{8, 12, 16, 24, 32, 80, 128, 320, 512, 4352};
    const std::vector<std::uint64_t> small{0, 1, 2, 4, 8, 16, 64};
    for (std::size_t k = 0; k < small.size(); ++k) CHECK(a[k] == num(small[k], 2));
    for (std::size_t k = 0; k < exponents.size(); ++k)
        CHECK(a[small.size() + k] == TowerInt::power_of_base(num(exponents[k], 2)));

    std::vector<std::uint64_t> heights;
    for (std::uint64_t n = 2; n <= 10; ++n) heights.push_back(a[n - 1].height());
    CHECK(heights == std::vector<std::uint64_t>{1, 2, 3, 4, 4, 5, 5, 5, 5});
    for (std::uint64_t n = 11; n <= 40; ++n) CHECK_MESSAGE(a[n - 1].height() == toy_height_pattern(n), "n=" << n);
}

TEST_CASE("minimality against exhaustive search") {
    for (std::uint32_t bv = 2; bv <= 10; ++bv) {
        const KTable t(Base(bv), 3);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            const auto k = t.row(n).Kmin.to_natural();
            REQUIRE(k.has_value());
            if (*k > 3'000'000) continue;
            CHECK_MESSAGE(smallest_with_count_scan(Base(bv), n, 3'000'000) == k->convert_to<std::uint64_t>(),
                          "b=" << bv << " n=" << n);
        }
    }
}
