#include "junctionlab/tower_int.hpp"

#include <cctype>

namespace junctionlab {

namespace {

// Intermediate rational value num/den; den is folded in when the value is finished.
struct Fraction {
    TowerInt num;
    Nat den;
};

constexpr std::uint64_t kFactorDigits = 4096;

class Parser {
public:
    Parser(std::string_view text, Base b) : text_(text), b_(b) {}

    TowerInt run() {
        if (text_.empty()) fail("empty input");
        TowerInt v = tower();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, peek()) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw TowerParseError(msg, pos_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Nat natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
        Nat v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    // "(1/q)*" prefix: applies to the whole following sum.
    std::optional<Nat> frac_prefix() {
        const std::size_t save = pos_;
        if (accept('(') && accept('1') && accept('/') &&
            std::isdigit(static_cast<unsigned char>(peek()))) {
            Nat q = natural();
            if (accept(')') && accept('*')) return q;
        }
        pos_ = save;
        return std::nullopt;
    }

    TowerInt tower() {
        const std::size_t start = pos_;
        Nat den = 1;
        if (auto q = frac_prefix()) den = *q;
        Fraction f = sum();
        f.den *= den;
        return finish(f, start);
    }

    TowerInt finish(const Fraction& f, std::size_t at) {
        if (f.den == 0) {
            pos_ = at;
            fail("division by zero");
        }
        if (f.den == 1) return f.num;
        try {
            if (auto n = f.num.to_natural(kFactorDigits)) {
                if (*n % f.den != 0) fail("value is not an integer");
                return TowerInt::from_natural(*n / f.den, b_);
            }
            if (f.den > b_.minus_one()) fail("denominator must divide b-1");
            return f.num.divide_exact(static_cast<std::uint32_t>(f.den));
        } catch (const ExactnessError& e) {
            pos_ = at;
            fail(e.what());
        }
    }

    Fraction sum() {
        Fraction acc = product();
        while (accept('+')) {
            Fraction rhs = product();
            if (acc.den == rhs.den) {
                acc.num = acc.num + rhs.num;
            } else {
                acc.num = acc.num.scale_by_natural(rhs.den) + rhs.num.scale_by_natural(acc.den);
                acc.den *= rhs.den;
            }
        }
        return acc;
    }

    Fraction product() {
        Fraction acc = factor();
        for (;;) {
            if (accept('*')) {
                const std::size_t at = pos_;
                Fraction rhs = factor();
                acc = multiply(acc, rhs, at);
            } else if (accept('/')) {
                Nat q = natural();
                if (q == 0) fail("division by zero");
                acc.den *= q;
            } else {
                return acc;
            }
        }
    }

    Fraction multiply(const Fraction& x, const Fraction& y, std::size_t at) {
        if (auto n = x.num.to_natural(kFactorDigits))
            return {y.num.scale_by_natural(*n), x.den * y.den};
        if (auto n = y.num.to_natural(kFactorDigits))
            return {x.num.scale_by_natural(*n), x.den * y.den};
        pos_ = at;
        fail("product of two tower values is not supported");
    }

    Fraction factor() {
        const std::size_t at = pos_;
        if (accept('(')) {
            TowerInt inner = tower();
            expect(')');
            return {inner, 1};
        }
        Nat v = natural();
        if (!accept('^')) return {TowerInt::from_natural(v, b_), 1};
        if (v != b_.value()) {
            pos_ = at;
            fail("power base must be " + std::to_string(b_.value()));
        }
        TowerInt exponent(b_);
        if (accept('{')) {
            exponent = tower();
            expect('}');
        } else if (accept('(')) {
            exponent = tower();
            expect(')');
        } else {
            exponent = TowerInt::from_natural(natural(), b_);
        }
        return {TowerInt::power_of_base(exponent), 1};
    }

    std::string_view text_;
    Base b_;
    std::size_t pos_ = 0;
};

}  // namespace

TowerInt parse_tower(std::string_view text, Base b) { return Parser(text, b).run(); }

}  // namespace junctionlab
