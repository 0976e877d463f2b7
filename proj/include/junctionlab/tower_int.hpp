#pragma once
// tower_int.hpp - exact naturals in sparse radix form
//
//     (1/gamma) * (alpha_1 b^{d_1} + alpha_2 b^{d_2} + ... + alpha_k b^{d_k})
//
// where the exponents d_i are themselves TowerInt values. This lets towers of
// exponentials (b^(b^(b^...))) be added, scaled, compared and classified mod (b-1)
// exactly, without ever materializing their digits.
//
// Canonical form:
//   * values below 2^62 are stored as a plain machine word (gamma = 1);
//   * otherwise 1 <= alpha_i <= b-1, d_1 > d_2 > ... > d_k, gamma | (b-1), and gamma
//     has been reduced as far as the coefficients allow. A numerator whose exponents are
//     all small (top exponent <= kMaterializeDigits) is divided out to gamma = 1.
//
// Representations with gamma > 1 are not unique, so equality is always decided by
// compare(), which clears denominators first.

#include "junctionlab/nat.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace junctionlab {

struct TowerTerm;

/// Signals an exactness violation (non-divisible division, non-integral value).
class ExactnessError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class TowerInt {
public:
    /// Numbers below this bound always use the machine-word representation.
    static constexpr std::uint64_t kSmallLimit = std::uint64_t{1} << 62U;
    /// Numerators whose top exponent is at most this many digits get divided out.
    static constexpr std::uint64_t kMaterializeDigits = 1024;
    /// Default digit budget of to_natural().
    static constexpr std::uint64_t kDefaultDigitBudget = 1'000'000;

    explicit TowerInt(Base b);  // zero

    static TowerInt zero(Base b) { return TowerInt(b); }
    static TowerInt one(Base b) { return from_u64(1, b); }
    static TowerInt from_u64(std::uint64_t v, Base b);
    static TowerInt from_natural(const Nat& v, Base b);

    /// b^e.
    static TowerInt power_of_base(const TowerInt& e);

    /// Builds (1/gamma) * sum(terms) and canonicalizes. Terms may be unsorted and carry
    /// arbitrary nonnegative coefficients. Throws ExactnessError if the value is not integral
    /// or gamma does not divide b-1.
    static TowerInt from_terms(Base b, std::vector<std::pair<Nat, TowerInt>> terms,
                               std::uint32_t gamma = 1);

    [[nodiscard]] Base base() const noexcept;
    [[nodiscard]] std::uint32_t gamma() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_small() const noexcept;
    /// Only meaningful when is_small().
    [[nodiscard]] std::uint64_t small_value() const noexcept;

    /// Canonical numerator terms, highest exponent first (digit expansion for small values).
    [[nodiscard]] std::vector<TowerTerm> terms() const;

    [[nodiscard]] TowerInt add(const TowerInt& other) const;
    [[nodiscard]] TowerInt add_u64(std::uint64_t v) const;
    [[nodiscard]] TowerInt scale_by_natural(const Nat& t) const;
    /// Exact division by q | (b-1). Throws ExactnessError if q does not divide the value.
    [[nodiscard]] TowerInt divide_exact(std::uint32_t q) const;

    /// Value mod (b-1), in [0, b-2] (always 0 for b = 2).
    [[nodiscard]] std::uint32_t residue_mod_bm1() const;

    /// Exact digits if the value has at most digit_budget base-b digits, else nullopt.
    [[nodiscard]] std::optional<Nat> to_natural(
        std::uint64_t digit_budget = kDefaultDigitBudget) const;

    /// Smallest h >= 1 with value <= b^^(h-1) (b^^0 = 1). Rejects zero.
    [[nodiscard]] std::uint64_t height() const;

    /// Canonical string in the tower grammar.
    [[nodiscard]] std::string render() const;

    friend std::strong_ordering compare(const TowerInt& x, const TowerInt& y);
    friend std::strong_ordering operator<=>(const TowerInt& x, const TowerInt& y) {
        return compare(x, y);
    }
    friend bool operator==(const TowerInt& x, const TowerInt& y) {
        return compare(x, y) == std::strong_ordering::equal;
    }

    friend TowerInt operator+(const TowerInt& x, const TowerInt& y) { return x.add(y); }

    struct Rep;

private:
    explicit TowerInt(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;

    friend struct TowerOps;
};

struct TowerTerm {
    std::uint32_t alpha;
    TowerInt exponent;
};

/// Height of a tower value, see TowerInt::height().
inline std::uint64_t height_of(const TowerInt& x) { return x.height(); }

/// b^^j as a TowerInt (b^^0 = 1).
TowerInt tower_constant(Base b, std::uint64_t j);

/// Thrown by parse_tower with the byte offset of the problem.
class TowerParseError : public std::invalid_argument {
public:
    TowerParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    [[nodiscard]] std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Parses the tower grammar:
///
///     tower   := frac? sum          frac := "(1/" natural ")*"   (applies to the whole sum)
///     sum     := term ("+" term)*
///     term    := natural | coeff "*" pow | pow
///     pow     := b "^" "{" tower "}" | b "^" natural
///
/// Also accepted, for transcribing published tables: parenthesized sub-expressions,
/// products by naturals and "/q" suffixes, e.g. "2*(10^{13}+8)/9".
TowerInt parse_tower(std::string_view text, Base b);

}  // namespace junctionlab
