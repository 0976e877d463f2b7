#include "junctionlab/tower_int.hpp"

#include "junctionlab/digits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace junctionlab {

struct TowerInt::Rep {
    std::uint32_t base = 2;
    bool small = true;
    std::uint64_t value = 0;        // small form
    std::uint32_t gamma = 1;        // sparse form
    std::vector<TowerTerm> terms;   // sparse numerator, highest exponent first
};

namespace {

using Poly = std::vector<TowerTerm>;

struct ExponentLess {
    bool operator()(const TowerInt& a, const TowerInt& b) const { return compare(a, b) < 0; }
};

using TermMap = std::map<TowerInt, Nat, ExponentLess>;

std::strong_ordering poly_compare(const Poly& x, const Poly& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) return c;
        if (x[i].alpha != y[i].alpha) return x[i].alpha <=> y[i].alpha;
    }
    return x.size() <=> y.size();
}

void check_same_base(const TowerInt& x, const TowerInt& y) {
    if (x.base() != y.base())
        throw std::invalid_argument("TowerInt operands have different bases");
}

}  // namespace

struct TowerOps {
    static TowerInt make_small(std::uint32_t base, std::uint64_t v) {
        auto rep = std::make_shared<TowerInt::Rep>();
        rep->base = base;
        rep->small = true;
        rep->value = v;
        return TowerInt(std::move(rep));
    }

    static TowerInt make_sparse(std::uint32_t base, Poly poly, std::uint32_t gamma) {
        auto rep = std::make_shared<TowerInt::Rep>();
        rep->base = base;
        rep->small = false;
        rep->gamma = gamma;
        rep->terms = std::move(poly);
        return TowerInt(std::move(rep));
    }

    static const TowerInt::Rep& rep(const TowerInt& x) { return *x.rep_; }

    static Poly poly_of(const TowerInt& x) { return x.terms(); }

    // Positional carry: beta*b^d with beta >= b becomes (beta mod b)*b^d + floor(beta/b)*b^(d+1).
    static Poly normalize(Base b, TermMap& m) {
        const Nat radix = b.value();
        for (auto it = m.begin(); it != m.end();) {
            if (it->second >= radix) {
                Nat carry = it->second / radix;
                it->second %= radix;
                TowerInt next = it->first.add_u64(1);
                m[next] += carry;
            }
            if (it->second == 0)
                it = m.erase(it);
            else
                ++it;
        }
        Poly out;
        out.reserve(m.size());
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            out.push_back({static_cast<std::uint32_t>(it->second), it->first});
        return out;
    }

    static Poly poly_add(Base b, const Poly& x, const Poly& y) {
        TermMap m;
        for (const auto& t : x) m[t.exponent] += t.alpha;
        for (const auto& t : y) m[t.exponent] += t.alpha;
        return normalize(b, m);
    }

    static Poly poly_scale(Base b, const Poly& x, const Nat& t) {
        if (t == 1) return x;
        TermMap m;
        for (const auto& term : x) m.emplace(term.exponent, Nat(term.alpha) * t);
        return normalize(b, m);
    }

    // Exact value of a numerator whose exponents are all small and at most max_exp.
    static std::optional<Nat> poly_value(Base b, const Poly& p, std::uint64_t max_exp) {
        if (p.empty()) return Nat(0);
        const TowerInt& top = p.front().exponent;
        if (!top.is_small() || top.small_value() > max_exp) return std::nullopt;
        Nat acc = 0;
        std::uint64_t prev = top.small_value();
        // Horner over the sparse exponents, highest first.
        for (const auto& t : p) {
            const std::uint64_t d = t.exponent.small_value();
            acc *= int_pow<Nat>(b.value(), prev - d);
            acc += t.alpha;
            prev = d;
        }
        acc *= int_pow<Nat>(b.value(), prev);
        return acc;
    }

    static TowerInt canonicalize(Base b, Poly p, std::uint32_t gamma) {
        if (p.empty()) return make_small(b.value(), 0);
        if (gamma > 1) {
            std::uint32_t g = gamma;
            for (const auto& t : p) g = std::gcd(g, t.alpha);
            if (g > 1) {
                for (auto& t : p) t.alpha /= g;
                gamma /= g;
            }
        }
        if (gamma > 1) {
            if (b.minus_one() % gamma != 0)
                throw ExactnessError("denominator " + std::to_string(gamma) +
                                     " does not divide b-1");
            std::uint64_t alpha_sum = 0;
            for (const auto& t : p) alpha_sum += t.alpha;
            if (alpha_sum % gamma != 0)
                throw ExactnessError("sparse radix value is not an integer");
            if (auto n = poly_value(b, p, TowerInt::kMaterializeDigits)) {
                if (*n % gamma != 0) throw ExactnessError("sparse radix value is not an integer");
                return TowerInt::from_natural(*n / gamma, b);
            }
            return make_sparse(b.value(), std::move(p), gamma);
        }
        if (auto n = poly_value(b, p, 64)) return TowerInt::from_natural(*n, b);
        return make_sparse(b.value(), std::move(p), 1);
    }
};

TowerInt::TowerInt(Base b) : rep_(TowerOps::make_small(b.value(), 0).rep_) {}

TowerInt TowerInt::from_u64(std::uint64_t v, Base b) {
    if (v < kSmallLimit) return TowerOps::make_small(b.value(), v);
    return from_natural(Nat(v), b);
}

TowerInt TowerInt::from_natural(const Nat& v, Base b) {
    if (v < 0) throw std::domain_error("TowerInt::from_natural: negative value");
    if (v < kSmallLimit) return TowerOps::make_small(b.value(), static_cast<std::uint64_t>(v));
    const auto digits = digits_of(v, b);
    Poly poly;
    for (std::size_t i = digits.size(); i-- > 0;)
        if (digits[i] != 0) poly.push_back({digits[i], from_u64(i, b)});
    return TowerOps::make_sparse(b.value(), std::move(poly), 1);
}

TowerInt TowerInt::power_of_base(const TowerInt& e) {
    const Base b = e.base();
    if (e.is_small() && e.small_value() <= 64)
        return from_natural(int_pow<Nat>(b.value(), e.small_value()), b);
    return TowerOps::make_sparse(b.value(), Poly{{1, e}}, 1);
}

TowerInt TowerInt::from_terms(Base b, std::vector<std::pair<Nat, TowerInt>> terms,
                              std::uint32_t gamma) {
    if (gamma == 0) throw ExactnessError("zero denominator");
    TermMap m;
    for (auto& [coef, exp] : terms) {
        if (coef < 0) throw std::domain_error("negative coefficient");
        if (exp.base() != b) throw std::invalid_argument("exponent has a different base");
        if (coef != 0) m[exp] += coef;
    }
    return TowerOps::canonicalize(b, TowerOps::normalize(b, m), gamma);
}

Base TowerInt::base() const noexcept { return Base(rep_->base); }
std::uint32_t TowerInt::gamma() const noexcept { return rep_->small ? 1 : rep_->gamma; }
bool TowerInt::is_zero() const noexcept { return rep_->small && rep_->value == 0; }
bool TowerInt::is_small() const noexcept { return rep_->small; }
std::uint64_t TowerInt::small_value() const noexcept { return rep_->value; }

std::vector<TowerTerm> TowerInt::terms() const {
    if (!rep_->small) return rep_->terms;
    std::vector<TowerTerm> out;
    if (rep_->value == 0) return out;
    const Base b = base();
    const auto digits = digits_of(rep_->value, b);
    for (std::size_t i = digits.size(); i-- > 0;)
        if (digits[i] != 0) out.push_back({digits[i], TowerOps::make_small(b.value(), i)});
    return out;
}

TowerInt TowerInt::add(const TowerInt& other) const {
    check_same_base(*this, other);
    const Base b = base();
    if (is_small() && other.is_small()) return from_u64(small_value() + other.small_value(), b);
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    const std::uint32_t gx = gamma();
    const std::uint32_t gy = other.gamma();
    const std::uint32_t l = std::lcm(gx, gy);
    Poly px = TowerOps::poly_scale(b, terms(), l / gx);
    Poly py = TowerOps::poly_scale(b, other.terms(), l / gy);
    return TowerOps::canonicalize(b, TowerOps::poly_add(b, px, py), l);
}

TowerInt TowerInt::add_u64(std::uint64_t v) const { return add(from_u64(v, base())); }

TowerInt TowerInt::scale_by_natural(const Nat& t) const {
    if (t < 0) throw std::domain_error("scale_by_natural: negative factor");
    const Base b = base();
    if (t == 0 || is_zero()) return TowerInt(b);
    if (is_small()) return from_natural(Nat(small_value()) * t, b);
    return TowerOps::canonicalize(b, TowerOps::poly_scale(b, rep_->terms, t), rep_->gamma);
}

TowerInt TowerInt::divide_exact(std::uint32_t q) const {
    const Base b = base();
    if (q == 0 || b.minus_one() % q != 0)
        throw ExactnessError("divide_exact: divisor " + std::to_string(q) +
                             " does not divide b-1");
    if (residue_mod_bm1() % q != 0)
        throw ExactnessError("divide_exact: value is not divisible by " + std::to_string(q));
    if (is_small()) return from_u64(small_value() / q, b);
    return TowerOps::canonicalize(b, rep_->terms, rep_->gamma * q);
}

std::uint32_t TowerInt::residue_mod_bm1() const {
    const Base b = base();
    const std::uint64_t bm1 = b.minus_one();
    if (bm1 == 1) return 0;
    if (is_small()) return static_cast<std::uint32_t>(small_value() % bm1);
    // b^d = 1 + d(b-1) (mod (b-1)^2), and gamma(b-1) divides (b-1)^2.
    const std::uint64_t g = rep_->gamma;
    const unsigned __int128 modulus = static_cast<unsigned __int128>(g) * bm1;
    unsigned __int128 acc = 0;
    for (const auto& t : rep_->terms) {
        const std::uint64_t r = t.exponent.residue_mod_bm1() % g;
        const unsigned __int128 power_mod = (1 + static_cast<unsigned __int128>(r) * bm1) % modulus;
        acc = (acc + static_cast<unsigned __int128>(t.alpha) * power_mod) % modulus;
    }
    if (acc % g != 0) throw ExactnessError("residue undefined: numerator not divisible by gamma");
    return static_cast<std::uint32_t>(acc / g);
}

std::optional<Nat> TowerInt::to_natural(std::uint64_t digit_budget) const {
    const Base b = base();
    if (compare(*this, power_of_base(from_u64(digit_budget, b))) >= 0) return std::nullopt;
    if (is_small()) return Nat(small_value());
    auto n = TowerOps::poly_value(b, rep_->terms, digit_budget + 64);
    if (!n) throw ExactnessError("to_natural: value below budget has a tower exponent");
    return *n / rep_->gamma;
}

TowerInt tower_constant(Base b, std::uint64_t j) {
    TowerInt t = TowerInt::one(b);
    for (std::uint64_t i = 0; i < j; ++i) t = TowerInt::power_of_base(t);
    return t;
}

std::uint64_t TowerInt::height() const {
    if (is_zero()) throw std::domain_error("height of zero is undefined");
    std::uint64_t h = 1;
    TowerInt level = one(base());
    while (compare(*this, level) > 0) {
        level = power_of_base(level);
        ++h;
    }
    return h;
}

std::strong_ordering compare(const TowerInt& x, const TowerInt& y) {
    check_same_base(x, y);
    const bool xs = x.is_small();
    const bool ys = y.is_small();
    if (xs && ys) return x.small_value() <=> y.small_value();
    // Sparse values are at least kSmallLimit by construction.
    if (xs) return std::strong_ordering::less;
    if (ys) return std::strong_ordering::greater;
    const auto& rx = TowerOps::rep(x);
    const auto& ry = TowerOps::rep(y);
    if (rx.gamma == ry.gamma) return poly_compare(rx.terms, ry.terms);
    const Base b = x.base();
    return poly_compare(TowerOps::poly_scale(b, rx.terms, ry.gamma),
                        TowerOps::poly_scale(b, ry.terms, rx.gamma));
}

namespace {

// Number of base-b digit positions whose value always stays below the small-value limit.
std::uint64_t word_digits(std::uint32_t b) {
    std::uint64_t d = 0;
    for (std::uint64_t p = b; p <= TowerInt::kSmallLimit / b; p *= b) ++d;
    return d + 1;
}

std::string render_pow(const TowerInt& exponent, std::uint32_t base) {
    std::string out = std::to_string(base) + "^";
    if (exponent.is_small()) return out + std::to_string(exponent.small_value());
    return out + "{" + exponent.render() + "}";
}

}  // namespace

std::string TowerInt::render() const {
    if (is_small()) return std::to_string(small_value());
    const Base b = base();
    const auto& terms = rep_->terms;

    // The lowest run of small-exponent terms is printed as one decimal literal when it is
    // short (fits a machine word) or dense (half its digit positions used).
    const std::uint64_t short_span = word_digits(b.value());
    std::size_t literal_from = terms.size();
    for (std::size_t s = terms.size(); s-- > 0;) {
        if (!terms[s].exponent.is_small()) break;
        const std::uint64_t span = terms[s].exponent.small_value() + 1;
        if (span <= short_span || 2 * (terms.size() - s) >= span) literal_from = s;
    }

    std::ostringstream out;
    if (rep_->gamma > 1) out << "(1/" << rep_->gamma << ")*";
    for (std::size_t i = 0; i < literal_from; ++i) {
        if (i != 0) out << '+';
        if (terms[i].alpha != 1) out << terms[i].alpha << '*';
        out << render_pow(terms[i].exponent, b.value());
    }
    if (literal_from < terms.size()) {
        Poly tail(terms.begin() + static_cast<std::ptrdiff_t>(literal_from), terms.end());
        auto literal = TowerOps::poly_value(b, tail, ~std::uint64_t{0});
        if (literal_from != 0) out << '+';
        out << literal->str();
    }
    return out.str();
}

}  // namespace junctionlab
