#pragma once
// inverse.hpp - the inverse of the step map: generator sets Gen(u), counts F(u),
// brute-force oracles, self/junction number streams and K(n) searches.

#include "junctionlab/digits.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace junctionlab {

template <class T>
concept SignedKernelInt = std::same_as<T, Nat> || std::same_as<T, std::int64_t>;

/// u = c(b^m + 1) + k with m = floor(log_b(u-1)) and c = floor(u / (b^m + 1)).
template <SignedKernelInt T>
struct CanonicalRep {
    std::uint64_t m;
    std::uint32_t c;
    T k;
};

/// Unique canonical representation of u > b.
template <SignedKernelInt T>
CanonicalRep<T> canonical_rep(const T& u, Base b) {
    if (u <= T(b.value())) throw std::domain_error("canonical_rep requires u > b");
    const std::uint64_t m = floor_log(T(u - 1), b);
    const T block = int_pow<T>(b.value(), m) + 1;
    const T c = u / block;
    return {m, static_cast<std::uint32_t>(c), T(u - c * block)};
}

/// Sorted generator set by the recurrence. Negative u is allowed (empty set).
template <SignedKernelInt T>
std::vector<T> generators(const T& u, Base b);

/// Sorted generator set by scanning the generator window. Independent of the recurrence.
template <SignedKernelInt T>
std::vector<T> generators_bruteforce(const T& u, Base b);

/// Thread-safe memo for F(u) keyed by (b, u), plain u in the 64-bit range.
/// Insertions stop once the cap is reached; lookups keep working.
class CountCache {
public:
    explicit CountCache(std::size_t cap = default_cap());

    std::optional<std::uint32_t> find(std::uint32_t b, std::int64_t u) const;
    void insert(std::uint32_t b, std::int64_t u, std::uint32_t count);
    std::size_t size() const;
    std::size_t cap() const noexcept { return cap_; }
    void clear();

    /// JUNCTIONLAB_CACHE_CAP if set, otherwise unbounded.
    static std::size_t default_cap();

private:
    struct Key {
        std::uint32_t b;
        std::int64_t u;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<std::int64_t>{}(k.u) * 31U + k.b;
        }
    };

    std::size_t cap_;
    mutable std::shared_mutex mu_;
    std::unordered_map<Key, std::uint32_t, KeyHash> map_;
};

/// Process-wide cache used when none is passed explicitly.
CountCache& default_count_cache();

/// F(u) = |Gen(u)| by the count recurrence, memoized.
std::uint32_t count_generators(std::int64_t u, Base b, CountCache& cache = default_count_cache());
std::uint32_t count_generators(const Nat& u, Base b, CountCache& cache = default_count_cache());

/// The first `limit` values u = 0, 1, 2, ... whose F(u) satisfies the predicate.
std::vector<std::uint64_t> stream_by_count(Base b,
                                           const std::function<bool(std::uint32_t)>& keep,
                                           std::uint64_t limit);

/// F(u) for every u in [0, ceiling], computed bottom-up by the recurrence.
/// Counts saturate at 255.
std::vector<std::uint8_t> count_table(Base b, std::uint64_t ceiling);

/// Smallest u <= ceiling with F(u) = n, by exhaustive scan.
std::optional<std::uint64_t> smallest_with_count_scan(Base b, std::uint32_t n,
                                                      std::uint64_t ceiling);

/// Entry n-1 is the smallest u <= ceiling with F(u) = n, for n = 1..n_max.
std::vector<std::optional<std::uint64_t>> first_occurrences(Base b, std::uint32_t n_max,
                                                            std::uint64_t ceiling);

/// Every u <= limit with F(u) >= t (t >= 1), ascending, built from the block structure of
/// the recurrence rather than by scanning. Sparse for t >= 2.
std::vector<std::uint64_t> with_count_at_least(Base b, std::uint32_t t, std::uint64_t limit);

/// u = b^m + 1 + k, kept symbolic because m itself may have a dozen digits.
struct BlockForm {
    std::uint64_t m = 0;
    std::uint64_t k = 0;

    [[nodiscard]] Nat value(Base b) const { return int_pow<Nat>(b.value(), m) + 1 + k; }
    bool operator==(const BlockForm&) const = default;
};

/// Smallest u = b^m + 1 + k (1 <= m <= max_m, 0 <= k <= (b-1)m - 2) with F(u) = n.
std::optional<BlockForm> smallest_with_count_structured(Base b, std::uint32_t n, std::uint64_t max_m);

extern template std::vector<std::int64_t> generators<std::int64_t>(const std::int64_t&, Base);
extern template std::vector<Nat> generators<Nat>(const Nat&, Base);
extern template std::vector<std::int64_t> generators_bruteforce<std::int64_t>(
    const std::int64_t&, Base);
extern template std::vector<Nat> generators_bruteforce<Nat>(const Nat&, Base);

}  // namespace junctionlab
