#include "junctionlab/inverse.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>

namespace junctionlab {

template <SignedKernelInt T>
std::vector<T> generators_bruteforce(const T& u, Base b) {
    if (u < 0 || u == 1) return {};
    if (u == 0) return {T(0)};
    const auto [lo, hi] = generator_window(u, b);
    std::vector<T> out;
    for (T v = lo; v <= hi; ++v)
        if (step(v, b) == u) out.push_back(v);
    return out;
}

template <SignedKernelInt T>
std::vector<T> generators(const T& u, Base b) {
    if (u < 0 || u == 1) return {};
    if (u == 0) return {T(0)};
    if (u <= T(b.value())) return generators_bruteforce(u, b);

    const auto rep = canonical_rep(u, b);
    const T top = T(rep.c) * int_pow<T>(b.value(), rep.m);
    const T mirrored = T(b.minus_one()) * T(rep.m) - rep.k - 2;

    // Mirrored generators lie below top, the shifted ones at or above it.
    std::vector<T> out;
    const auto low = generators(mirrored, b);
    const auto high = generators(rep.k, b);
    out.reserve(low.size() + high.size());
    for (auto it = low.rbegin(); it != low.rend(); ++it) out.push_back(top - 1 - *it);
    for (const auto& v : high) out.push_back(top + v);
#ifndef NDEBUG
    for (const auto& v : out) assert(step(v, b) == u);
#endif
    return out;
}

template std::vector<std::int64_t> generators<std::int64_t>(const std::int64_t&, Base);
template std::vector<Nat> generators<Nat>(const Nat&, Base);
template std::vector<std::int64_t> generators_bruteforce<std::int64_t>(const std::int64_t&,
                                                                       Base);
template std::vector<Nat> generators_bruteforce<Nat>(const Nat&, Base);

CountCache::CountCache(std::size_t cap) : cap_(cap) {}

std::size_t CountCache::default_cap() {
    const char* env = std::getenv("JUNCTIONLAB_CACHE_CAP");
    if (env == nullptr || *env == '\0') return std::numeric_limits<std::size_t>::max();
    try {
        return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("JUNCTIONLAB_CACHE_CAP is not a number: ") + env);
    }
}

std::optional<std::uint32_t> CountCache::find(std::uint32_t b, std::int64_t u) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(Key{b, u});
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void CountCache::insert(std::uint32_t b, std::int64_t u, std::uint32_t count) {
    std::unique_lock lock(mu_);
    if (map_.size() >= cap_) return;
    map_.insert_or_assign(Key{b, u}, count);
}

std::size_t CountCache::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

void CountCache::clear() {
    std::unique_lock lock(mu_);
    map_.clear();
}

CountCache& default_count_cache() {
    static CountCache cache;
    return cache;
}

std::uint32_t count_generators(std::int64_t u, Base b, CountCache& cache) {
    if (u < 0 || u == 1) return 0;
    if (u == 0) return 1;
    if (auto hit = cache.find(b.value(), u)) return *hit;
    std::uint32_t count = 0;
    if (u <= static_cast<std::int64_t>(b.value())) {
        count = static_cast<std::uint32_t>(generators_bruteforce(u, b).size());
    } else {
        const auto rep = canonical_rep(u, b);
        const std::int64_t mirrored =
            static_cast<std::int64_t>(b.minus_one()) * static_cast<std::int64_t>(rep.m) - rep.k - 2;
        count = count_generators(rep.k, b, cache) + count_generators(mirrored, b, cache);
    }
    cache.insert(b.value(), u, count);
    return count;
}

std::uint32_t count_generators(const Nat& u, Base b, CountCache& cache) {
    if (u <= std::numeric_limits<std::int64_t>::max())
        return count_generators(static_cast<std::int64_t>(u), b, cache);
    const auto rep = canonical_rep(u, b);
    const Nat mirrored = Nat(b.minus_one()) * rep.m - rep.k - 2;
    return count_generators(rep.k, b, cache) + count_generators(mirrored, b, cache);
}

std::vector<std::uint64_t> stream_by_count(Base b,
                                           const std::function<bool(std::uint32_t)>& keep,
                                           std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("stream_by_count: limit must be >= 1");
    std::vector<std::uint64_t> out;
    out.reserve(limit);
    for (std::int64_t u = 0; out.size() < limit; ++u)
        if (keep(count_generators(u, b))) out.push_back(static_cast<std::uint64_t>(u));
    return out;
}

std::vector<std::uint8_t> count_table(Base b, std::uint64_t ceiling) {
    std::vector<std::uint8_t> table(ceiling + 1, 0);
    const std::uint64_t radix = b.value();
    std::uint64_t m = 0;
    std::uint64_t power = 1;  // b^m
    for (std::uint64_t u = 0; u <= ceiling; ++u) {
        if (u <= radix) {
            table[u] = static_cast<std::uint8_t>(
                generators_bruteforce(static_cast<std::int64_t>(u), b).size());
            continue;
        }
        while (power <= (u - 1) / radix) {
            power *= radix;
            ++m;
        }
        const std::uint64_t block = power + 1;
        const std::uint64_t c = u / block;
        const std::uint64_t k = u - c * block;
        const std::int64_t mirrored = static_cast<std::int64_t>((radix - 1) * m) -
                                      static_cast<std::int64_t>(k) - 2;
        unsigned total = table[k];
        if (mirrored >= 0) total += table[static_cast<std::uint64_t>(mirrored)];
        table[u] = static_cast<std::uint8_t>(std::min(total, 255U));
    }
    return table;
}

std::vector<std::optional<std::uint64_t>> first_occurrences(Base b, std::uint32_t n_max,
                                                            std::uint64_t ceiling) {
    std::vector<std::optional<std::uint64_t>> out(n_max);
    const auto table = count_table(b, ceiling);
    std::uint32_t missing = n_max;
    for (std::uint64_t u = 0; u <= ceiling && missing > 0; ++u) {
        const std::uint32_t f = table[u];
        if (f >= 1 && f <= n_max && !out[f - 1]) {
            out[f - 1] = u;
            --missing;
        }
    }
    return out;
}

std::optional<std::uint64_t> smallest_with_count_scan(Base b, std::uint32_t n,
                                                      std::uint64_t ceiling) {
    if (n == 0) {
        for (std::uint64_t u = 0; u <= ceiling; ++u)
            if (count_generators(static_cast<std::int64_t>(u), b) == 0) return u;
        return std::nullopt;
    }
    return first_occurrences(b, n, ceiling)[n - 1];
}

std::vector<std::uint64_t> with_count_at_least(Base b, std::uint32_t t, std::uint64_t limit) {
    if (t == 0) throw std::invalid_argument("with_count_at_least requires t >= 1");
    const std::uint64_t radix = b.value();
    auto count = [&](std::uint64_t u) { return count_generators(static_cast<std::int64_t>(u), b); };

    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 0; u <= std::min(limit, radix); ++u)
        if (count(u) >= t) out.push_back(u);

    // u in [b^m + 1, b^(m+1)] is c(b^m+1) + k with k <= b^m. Past k = (b-1)m - 2 the
    // mirrored argument is negative and F(u) = F(k), so those u are translates of the
    // part of the list at or below b^m.
    std::uint64_t power = radix;
    for (std::uint64_t m = 1; power < limit; ++m) {
        const std::uint64_t hi = power > limit / radix ? limit : std::min(limit, power * radix);
        const std::vector<std::uint64_t> below(out.begin(), std::upper_bound(out.begin(), out.end(), power));
        const std::int64_t k_direct = static_cast<std::int64_t>((radix - 1) * m) - 2;
        for (std::uint64_t c = 1; c < radix && c * (power + 1) <= hi; ++c) {
            const std::uint64_t start = c * (power + 1);
            const std::uint64_t stop = std::min(hi, start + power);
            for (std::int64_t k = 0; k <= k_direct && start + k <= stop; ++k)
                if (count(start + k) >= t) out.push_back(start + k);
            auto it = k_direct < 0 ? below.begin()
                                   : std::upper_bound(below.begin(), below.end(), static_cast<std::uint64_t>(k_direct));
            for (; it != below.end() && start + *it <= stop; ++it) out.push_back(start + *it);
        }
        if (power > limit / radix) break;
        power *= radix;
    }
    return out;
}

std::optional<BlockForm> smallest_with_count_structured(Base b, std::uint32_t n, std::uint64_t max_m) {
    if (n < 2) throw std::invalid_argument("smallest_with_count_structured requires n >= 2");
    constexpr std::uint64_t kDirectSpan = 4096;
    const std::uint32_t half = (n + 1) / 2;
    const std::uint64_t bm1 = b.minus_one();
    auto count = [&](std::uint64_t v) { return count_generators(static_cast<std::int64_t>(v), b); };

    // Every split k + j = (b-1)m - 2 with F(k) + F(j) = n has a side with F >= ceil(n/2).
    std::vector<std::uint64_t> heavy;
    std::uint64_t heavy_limit = 0;
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        if (bm1 * m < 2) continue;
        const std::uint64_t s = bm1 * m - 2;
        std::optional<std::uint64_t> best;
        auto consider = [&](std::uint64_t k) {
            if (k <= s && count(k) + count(s - k) == n && (!best || k < *best)) best = k;
        };
        if (s <= kDirectSpan) {
            for (std::uint64_t k = 0; k <= s && !best; ++k) consider(k);
        } else {
            if (half < 2) throw std::domain_error("structured search: dense split for n = 2");
            if (s > heavy_limit) {
                heavy_limit = std::max(2 * heavy_limit, s);
                heavy = with_count_at_least(b, half, heavy_limit);
            }
            if (heavy.empty() || heavy.front() > s) {
                // No heavy side fits yet: jump to the first m whose split can hold one.
                if (!heavy.empty()) m = std::max(m, (heavy.front() + 2 + bm1 - 1) / bm1) - 1;
                else m = std::max(m, (heavy_limit + 2) / bm1);
                continue;
            }
            for (auto h : heavy) {
                if (h > s) break;
                consider(h);
                consider(s - h);
            }
        }
        if (best) return BlockForm{m, *best};
    }
    return std::nullopt;
}

}  // namespace junctionlab
