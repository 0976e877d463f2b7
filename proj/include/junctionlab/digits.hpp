#pragma once
// digits.hpp - base-b digit kernel: expansion, digit sum s(v), step map f(v) = v + s(v),
// the generator search window and the complement identity.
//
// Everything here is a pure function over plain integers. The kernel is shared by the
// recurrence and by every brute-force oracle, so it stays free of caching.

#include "junctionlab/nat.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace junctionlab {

/// Base-b digits of v, least significant first. digits_of(0) is {0}.
template <KernelInt T>
std::vector<std::uint32_t> digits_of(T v, Base b) {
    if (is_negative(v)) throw std::domain_error("digits_of: negative value");
    std::vector<std::uint32_t> out;
    if (v == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint32_t radix = b.value();
    while (v != 0) {
        out.push_back(static_cast<std::uint32_t>(v % radix));
        v /= radix;
    }
    return out;
}

template <KernelInt T>
T digit_sum(T v, Base b) {
    if (is_negative(v)) throw std::domain_error("digit_sum: negative value");
    const std::uint32_t radix = b.value();
    T s = 0;
    while (v != 0) {
        s += static_cast<std::uint32_t>(v % radix);
        v /= radix;
    }
    return s;
}

/// f(v) = v + s(v).
template <KernelInt T>
T step(const T& v, Base b) {
    return v + digit_sum(v, b);
}

/// Closed interval [lo, hi] containing every v with step(v) == u, for u >= 2.
template <KernelInt T>
std::pair<T, T> generator_window(const T& u, Base b) {
    if (u < 2) throw std::domain_error("generator_window requires u >= 2");
    const T width = T(b.minus_one()) * T(ceil_log(u, b));
    const T lo = u > width ? T(u - width) : T(0);
    return {lo, T(u - 1)};
}

/// c*b^m - 1 - v. Its digit sum is (b-1)m + c - 1 - s(v).
template <KernelInt T>
T complement(std::uint32_t c, std::uint64_t m, const T& v, Base b) {
    if (c < 1 || c > b.minus_one()) throw std::domain_error("complement: c outside [1, b-1]");
    const T top = T(c) * int_pow<T>(b.value(), m);
    if (is_negative(v) || v > top - 1) throw std::domain_error("complement: v outside [0, c*b^m - 1]");
    return top - 1 - v;
}

extern template std::vector<std::uint32_t> digits_of<Nat>(Nat, Base);
extern template Nat digit_sum<Nat>(Nat, Base);
extern template Nat step<Nat>(const Nat&, Base);
extern template std::pair<Nat, Nat> generator_window<Nat>(const Nat&, Base);
extern template Nat complement<Nat>(std::uint32_t, std::uint64_t, const Nat&, Base);

}  // namespace junctionlab
