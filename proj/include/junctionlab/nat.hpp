#pragma once
// nat.hpp - plain arbitrary-precision naturals and the base type shared by all modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace junctionlab {

/// Arbitrary-precision integer. Used for plain (materialized) values; sign is
/// only ever negative for the signed inputs of the generator recursion.
using Nat = boost::multiprecision::cpp_int;

/// Integer types the digit and inverse kernels are instantiated for.
template <class T>
concept KernelInt = std::same_as<T, Nat> || std::same_as<T, std::int64_t> ||
                    std::same_as<T, std::uint64_t>;

template <KernelInt T>
constexpr bool is_negative(const T& v) {
    if constexpr (std::same_as<T, std::uint64_t>)
        return false;
    else
        return v < 0;
}

/// A radix b >= 2.
class Base {
public:
    explicit Base(std::uint32_t b) : b_(b) {
        if (b < 2) throw std::invalid_argument("base must be >= 2, got " + std::to_string(b));
    }

    [[nodiscard]] std::uint32_t value() const noexcept { return b_; }
    [[nodiscard]] std::uint32_t minus_one() const noexcept { return b_ - 1; }
    [[nodiscard]] bool is_even() const noexcept { return b_ % 2 == 0; }

    friend bool operator==(Base, Base) = default;

private:
    std::uint32_t b_;
};

/// b^e computed by repeated multiplication.
template <KernelInt T>
T int_pow(std::uint32_t b, std::uint64_t e) {
    T result = 1;
    T factor = b;
    while (e != 0) {
        if (e & 1U) result *= factor;
        e >>= 1U;
        if (e != 0) factor *= factor;
    }
    return result;
}

/// Smallest k >= 0 with b^k >= v (v >= 1), i.e. ceil(log_b v), by exact comparison.
template <KernelInt T>
std::uint64_t ceil_log(const T& v, Base b) {
    if (v <= 1) return 0;
    std::uint64_t k = 0;
    T p = 1;
    while (p < v) {
        if (p > v / b.value()) return k + 1;  // next power already exceeds v
        p *= b.value();
        ++k;
    }
    return k;
}

/// Largest k >= 0 with b^k <= v (v >= 1), i.e. floor(log_b v).
template <KernelInt T>
std::uint64_t floor_log(const T& v, Base b) {
    if (v < 1) throw std::domain_error("floor_log of value < 1");
    std::uint64_t k = 0;
    T p = 1;
    while (p <= v / b.value()) {
        p *= b.value();
        ++k;
    }
    return k;
}

inline std::string to_string(const Nat& v) { return v.str(); }

}  // namespace junctionlab
