#pragma once
// kaprekar.hpp - the K-table engine.
//
// For each n the table holds B(n), K_i(n) for every index i, the argmin set J(n) of the
// cross sums K_j(ceil(n/2)) + K_{-j-2}(floor(n/2)), the multipliers c_{i,n}, the source
// rows h_{i,n}, and K(n) = min_i K_i(n). Rows are built bottom-up from the n = 1 seeds.

#include "junctionlab/tower_int.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace junctionlab {

/// Residues mod (b-1) that K_i ranges over: all of them for even b, the even ones for odd b.
std::vector<std::uint32_t> index_set(Base b);

/// i mod (b-1), for any signed i.
std::uint32_t reduce_index(std::int64_t i, Base b);

struct KTableRow {
    std::uint64_t n = 1;
    std::optional<TowerInt> B;                   // absent for n = 1
    std::map<std::uint32_t, TowerInt> K;         // K_i(n)
    std::map<std::uint32_t, TowerInt> kprime;    // K'_i(n), n >= 2
    std::vector<std::uint32_t> J;                // n >= 2
    std::map<std::uint32_t, std::uint32_t> c;    // n >= 2
    std::map<std::uint32_t, std::uint64_t> h;    // n >= 2
    std::uint32_t argmin = 0;                    // index i with K_i(n) = K(n)
    TowerInt Kmin;

    explicit KTableRow(Base b) : Kmin(b) {}

    /// tau(n): the argmin index, halved for odd bases.
    [[nodiscard]] std::uint32_t tau(Base b) const { return b.is_even() ? argmin : argmin / 2; }
};

/// The n = 1 row: K_{2l}(1) = 2l, and K_{2l+1}(1) = b + 2l for even b.
KTableRow seed_row(Base b);

class KTable {
public:
    explicit KTable(Base b);
    KTable(Base b, std::uint64_t n_max);

    [[nodiscard]] Base base() const noexcept { return b_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return rows_.size(); }
    /// Row n, 1-based.
    [[nodiscard]] const KTableRow& row(std::uint64_t n) const;
    [[nodiscard]] const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }

    /// Appends row size()+1.
    void extend();
    void extend_to(std::uint64_t n_max);

    /// min(K_i(ceil) + K_{-i-2}(floor), K_i(floor) + K_{-i-2}(ceil)) from the stored rows.
    [[nodiscard]] TowerInt kprime(std::uint64_t n, std::uint32_t i) const;

    /// Whether min_i K'_i(n) = K(ceil(n/2)) + K_l(floor(n/2)) for some index l.
    [[nodiscard]] bool reduced_split_holds(std::uint64_t n) const;

private:
    Base b_;
    std::vector<std::uint32_t> indices_;
    std::vector<KTableRow> rows_;
};

/// Builds a table with rows 1..n_max.
KTable extend_table(Base b, std::uint64_t n_max);

/// K(n) and B(n) for b in {2, 3} via the single-index recurrences
/// B(n) = (K(ceil) + K(floor) + 2)/(b-1), K(n) = b^B(n) + 1 + K(floor).
struct FastPathValue {
    TowerInt B;
    TowerInt K;
};
FastPathValue fast_path(Base b, std::uint64_t n);

/// K_i(n) = alpha_1 (b^B(n_1)+1) + ... + alpha_t (b^B(n_t)+1) + K_beta(1).
struct QuasiRep {
    std::vector<std::uint32_t> alphas;
    std::vector<std::uint64_t> ns;
    std::uint32_t beta = 0;

    bool operator==(const QuasiRep&) const = default;
};

QuasiRep quasi_rep(const KTable& table, std::uint64_t n, std::uint32_t i);
/// Value of a quasi-positional representation against the table's B and seed values.
TowerInt evaluate(const KTable& table, const QuasiRep& rep);
std::string render(const QuasiRep& rep, Base b);

struct EquivalenceReport {
    bool equivalent = true;
    std::string first_mismatch;
};

/// Compares the quasi-positional representations in bases 2m and 4m-1 for all n <= n_max,
/// matching base-(4m-1) index i with base-2m index i mod (2m-1).
EquivalenceReport base_pair_equivalent(std::uint32_t m, std::uint64_t n_max);

std::vector<std::uint32_t> tau_sequence(const KTable& table, std::uint64_t n_max);

/// Tower height of K(n).
std::uint64_t height_of_K(const KTable& table, std::uint64_t n);

/// The conjectured tower height of K(n), where a formula is stated (b = 3 needs n >= 3,
/// all other bases n >= 2).
std::optional<std::uint64_t> conjectured_height(Base b, std::uint64_t n);

/// a(1) = 0, a(n) = 2^(a(ceil(n/2)) + a(floor(n/2))), for n = 1..n_max.
std::vector<TowerInt> toy_sequence_a(std::uint64_t n_max);

/// Height pattern stated for the toy sequence on 11 <= n <= 40:
/// 9*2^(i-1) < n <= 9*2^i gives height i+5.
std::uint64_t toy_height_pattern(std::uint64_t n);

}  // namespace junctionlab
