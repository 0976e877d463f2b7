#include "junctionlab/kaprekar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace junctionlab {

std::vector<std::uint32_t> index_set(Base b) {
    std::vector<std::uint32_t> out;
    if (b.is_even()) {
        for (std::uint32_t i = 0; i + 2 <= b.value(); ++i) out.push_back(i);
    } else {
        for (std::uint32_t i = 0; i + 3 <= b.value(); i += 2) out.push_back(i);
        if (out.empty()) out.push_back(0);
    }
    return out;
}

std::uint32_t reduce_index(std::int64_t i, Base b) {
    const std::int64_t mod = b.minus_one();
    return static_cast<std::uint32_t>(((i % mod) + mod) % mod);
}

KTableRow seed_row(Base b) {
    KTableRow row(b);
    row.n = 1;
    for (std::uint32_t i : index_set(b)) {
        const std::uint64_t v = (i % 2 == 0) ? i : b.value() + i - 1;
        row.K.emplace(i, TowerInt::from_u64(v, b));
    }
    row.argmin = 0;
    row.Kmin = TowerInt::zero(b);
    return row;
}

KTable::KTable(Base b) : b_(b), indices_(index_set(b)) { rows_.push_back(seed_row(b)); }

KTable::KTable(Base b, std::uint64_t n_max) : KTable(b) { extend_to(n_max); }

const KTableRow& KTable::row(std::uint64_t n) const {
    if (n < 1 || n > rows_.size())
        throw std::out_of_range("K-table row " + std::to_string(n) + " not computed");
    return rows_[n - 1];
}

void KTable::extend_to(std::uint64_t n_max) {
    while (rows_.size() < n_max) extend();
}

namespace {

bool contains(const std::vector<std::uint32_t>& set, std::uint32_t i) {
    return std::find(set.begin(), set.end(), i) != set.end();
}

std::uint32_t partner(std::uint32_t i, Base b) {
    return reduce_index(-static_cast<std::int64_t>(i) - 2, b);
}

}  // namespace

TowerInt KTable::kprime(std::uint64_t n, std::uint32_t i) const {
    if (n < 2) throw std::invalid_argument("K'_i(n) needs n >= 2");
    const KTableRow& hi = row((n + 1) / 2);
    const KTableRow& lo = row(n / 2);
    const std::uint32_t j = partner(i, b_);
    return std::min(hi.K.at(i) + lo.K.at(j), lo.K.at(i) + hi.K.at(j));
}

void KTable::extend() {
    const std::uint64_t n = rows_.size() + 1;
    const std::uint64_t hi_n = (n + 1) / 2;
    const std::uint64_t lo_n = n / 2;
    const KTableRow& hi = rows_[hi_n - 1];
    const KTableRow& lo = rows_[lo_n - 1];

    KTableRow out(b_);
    out.n = n;

    std::map<std::uint32_t, TowerInt> cross;
    for (std::uint32_t l : indices_) cross.emplace(l, hi.K.at(l) + lo.K.at(partner(l, b_)));
    const TowerInt smallest =
        std::min_element(cross.begin(), cross.end(),
                         [](const auto& x, const auto& y) { return x.second < y.second; })
            ->second;
    for (const auto& [l, s] : cross)
        if (s == smallest) out.J.push_back(l);

    for (std::uint32_t i : indices_) out.kprime.emplace(i, kprime(n, i));

    try {
        out.B = smallest.add_u64(2).divide_exact(b_.minus_one());
    } catch (const ExactnessError& e) {
        throw std::logic_error("B(" + std::to_string(n) + ") in base " +
                               std::to_string(b_.value()) + ": " + e.what());
    }
    const TowerInt block = TowerInt::power_of_base(*out.B).add_u64(1);

    for (std::uint32_t i : indices_) {
        std::uint32_t c = 0;
        for (std::uint32_t t = 1; t <= b_.minus_one(); ++t) {
            const auto down = reduce_index(static_cast<std::int64_t>(i) - 2 * t, b_);
            const auto up = reduce_index(2 * static_cast<std::int64_t>(t) - i - 2, b_);
            if (contains(out.J, down) || contains(out.J, up)) {
                c = t;
                break;
            }
        }
        if (c == 0) throw std::logic_error("no multiplier c found for index " + std::to_string(i));
        const auto up = reduce_index(2 * static_cast<std::int64_t>(c) - i - 2, b_);
        const std::uint64_t h = contains(out.J, up) ? lo_n : hi_n;
        const auto src = reduce_index(static_cast<std::int64_t>(i) - 2 * c, b_);
        out.c.emplace(i, c);
        out.h.emplace(i, h);
        out.K.emplace(i, block.scale_by_natural(c) + rows_[h - 1].K.at(src));
    }

    auto best = out.K.begin();
    bool tie = false;
    for (auto it = std::next(out.K.begin()); it != out.K.end(); ++it) {
        const auto cmp = compare(it->second, best->second);
        if (cmp < 0) {
            best = it;
            tie = false;
        } else if (cmp == 0) {
            tie = true;
        }
    }
    if (tie)
        throw std::logic_error("K(" + std::to_string(n) + ") attained at two indices in base " +
                               std::to_string(b_.value()));
    out.argmin = best->first;
    out.Kmin = best->second;
    rows_.push_back(std::move(out));
}

bool KTable::reduced_split_holds(std::uint64_t n) const {
    const KTableRow& r = row(n);
    if (n < 2) return true;
    TowerInt smallest = r.kprime.begin()->second;
    for (const auto& [i, v] : r.kprime) smallest = std::min(smallest, v);
    const TowerInt& top = row((n + 1) / 2).Kmin;
    for (const auto& [l, v] : row(n / 2).K)
        if (top + v == smallest) return true;
    return false;
}

KTable extend_table(Base b, std::uint64_t n_max) { return KTable(b, n_max); }

FastPathValue fast_path(Base b, std::uint64_t n) {
    if (b.value() != 2 && b.value() != 3)
        throw std::invalid_argument("fast_path only applies to bases 2 and 3");
    if (n < 2) throw std::invalid_argument("fast_path needs n >= 2");
    const bool two = b.value() == 2;
    std::vector<TowerInt> K{TowerInt::zero(b), TowerInt::zero(b),
                            TowerInt::from_u64(two ? 5 : 4, b),
                            TowerInt::from_u64(two ? 129 : 28, b)};
    TowerInt B(b);
    for (std::uint64_t j = 2; j <= n; ++j) {
        B = (K[(j + 1) / 2] + K[j / 2]).add_u64(2).divide_exact(b.minus_one());
        if (j >= 4) K.push_back(TowerInt::power_of_base(B).add_u64(1) + K[j / 2]);
    }
    return {B, K[n]};
}

QuasiRep quasi_rep(const KTable& table, std::uint64_t n, std::uint32_t i) {
    QuasiRep rep;
    while (n > 1) {
        const KTableRow& r = table.row(n);
        const std::uint32_t c = r.c.at(i);
        rep.alphas.push_back(c);
        rep.ns.push_back(n);
        const std::uint64_t next = r.h.at(i);
        i = reduce_index(static_cast<std::int64_t>(i) - 2 * c, table.base());
        n = next;
    }
    rep.beta = i;
    return rep;
}

TowerInt evaluate(const KTable& table, const QuasiRep& rep) {
    TowerInt total = table.row(1).K.at(rep.beta);
    for (std::size_t j = 0; j < rep.alphas.size(); ++j) {
        const TowerInt block = TowerInt::power_of_base(*table.row(rep.ns[j]).B).add_u64(1);
        total = total + block.scale_by_natural(rep.alphas[j]);
    }
    return total;
}

std::string render(const QuasiRep& rep, Base /*b*/) {
    std::ostringstream out;
    for (std::size_t j = 0; j < rep.alphas.size(); ++j) {
        if (rep.alphas[j] != 1) out << rep.alphas[j] << '*';
        out << "cB(" << rep.ns[j] << ")+";
    }
    out << "K_" << rep.beta << "(1)";
    return out.str();
}

EquivalenceReport base_pair_equivalent(std::uint32_t m, std::uint64_t n_max) {
    if (m < 1) throw std::invalid_argument("base_pair_equivalent needs m >= 1");
    const Base even(2 * m);
    const Base odd(4 * m - 1);
    const KTable te(even, n_max);
    const KTable to(odd, n_max);
    EquivalenceReport report;
    auto mismatch = [&](std::uint64_t n, std::uint32_t i, const std::string& what) {
        std::ostringstream msg;
        msg << "bases " << even.value() << "/" << odd.value() << " n=" << n << " i=" << i << ": "
            << what;
        report.equivalent = false;
        report.first_mismatch = msg.str();
    };
    if (te.indices().size() != to.indices().size()) {
        mismatch(1, 0, "index sets differ in size");
        return report;
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        for (std::uint32_t i : to.indices()) {
            const std::uint32_t image = i % even.minus_one();
            const QuasiRep qo = quasi_rep(to, n, i);
            const QuasiRep qe = quasi_rep(te, n, image);
            if (qo.alphas != qe.alphas || qo.ns != qe.ns) {
                mismatch(n, i, render(qe, even) + " vs " + render(qo, odd));
                return report;
            }
            if (qo.beta % even.minus_one() != qe.beta ||
                te.row(1).K.at(qe.beta) != TowerInt::from_u64(to.row(1).K.at(qo.beta).small_value(), even)) {
                mismatch(n, i, "seed indices differ");
                return report;
            }
        }
    }
    return report;
}

std::vector<std::uint32_t> tau_sequence(const KTable& table, std::uint64_t n_max) {
    std::vector<std::uint32_t> out;
    out.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(table.row(n).tau(table.base()));
    return out;
}

std::uint64_t height_of_K(const KTable& table, std::uint64_t n) {
    return table.row(n).Kmin.height();
}

namespace {

// Smallest e >= 0 with n <= scale * 2^e.
std::uint64_t doublings_to_reach(std::uint64_t n, std::uint64_t scale) {
    std::uint64_t e = 0;
    while (scale < n) {
        scale *= 2;
        ++e;
    }
    return e;
}

}  // namespace

std::optional<std::uint64_t> conjectured_height(Base b, std::uint64_t n) {
    const std::uint32_t v = b.value();
    if (v == 3) {
        if (n < 3) return std::nullopt;
        return doublings_to_reach(n, 5) + 4;
    }
    if (n < 2) return std::nullopt;
    const std::uint64_t lg = doublings_to_reach(n, 1);
    if (v == 2) return lg + 3;
    return b.is_even() ? lg + 2 : lg + 1;
}

std::vector<TowerInt> toy_sequence_a(std::uint64_t n_max) {
    const Base two(2);
    std::vector<TowerInt> a{TowerInt::zero(two), TowerInt::zero(two)};
    for (std::uint64_t n = 2; n <= n_max; ++n)
        a.push_back(TowerInt::power_of_base(a[(n + 1) / 2] + a[n / 2]));
    a.erase(a.begin());
    return a;
}

std::uint64_t toy_height_pattern(std::uint64_t n) {
    if (n <= 9) throw std::invalid_argument("toy height pattern starts at n = 10");
    std::uint64_t i = 0;
    std::uint64_t upper = 9;
    while (upper < n) {
        upper *= 2;
        ++i;
    }
    return i + 5;
}

}  // namespace junctionlab
