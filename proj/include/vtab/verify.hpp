#pragma once

#include "vtab/json_io.hpp"
#include "vtab/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vtab {

struct ShapeTally {
    Partition shape;
    std::uint64_t observed = 0;
    std::uint64_t f_lambda = 0;
    std::uint64_t m_k_lambda = 0;
    std::uint64_t expected() const { return f_lambda * m_k_lambda; }
};

struct Violation {
    std::string input;
    std::string detail;
};

struct SweepReport {
    static constexpr int schema = 1;
    std::string check;
    int n = 0;
    int k = 0;
    std::vector<ShapeTally> per_shape; // canonical order of partitions_of(n)
    std::uint64_t total = 0;           // instances examined
    std::uint64_t found = 0;           // instances on the "property holds" side
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations; // first max_recorded, in sweep order

    bool ok() const noexcept { return violation_count == 0; }
};

struct SweepOptions {
    // Largest number of instances a single sweep may visit.
    std::uint64_t budget = 10'000'000;
    unsigned workers = 0; // 0: hardware concurrency
    std::size_t max_recorded = 100;

    // Defaults with the budget taken from TABLEAUX_BUDGET when set.
    static SweepOptions from_environment();
};

// Runs DI on all of [n]^k and compares the shape tallies with f^lambda m_k^lambda.
SweepReport verify_identity(int n, int k, const SweepOptions& options = SweepOptions::from_environment());

enum class Check {
    OneRow,      // shape (n) iff the one-row test, counted by set partitions
    Hook,        // shape (n-k, 1^k) iff strictly decreasing below n
    TwoRow,      // shape (n-k, k) iff the lattice path decomposition exists
    Psi,         // psi, Algorithm A and Algorithm B agree on VT-index k
    MaxIndex,    // Algorithm B test iff VT-index k
    Bumping,     // bumping criterion iff some w in R_k^n bumps out t
    Suffix,      // suffix criterion iff some w in R_k^n ends in a
    Cossz,       // COSSZ round trip, shape tallies and first-row test
    DiRoundTrip, // di_inverse undoes di_forward
    Repark,      // reparking simulation agrees with its prediction
    Rsk,         // inverse RSK undoes RSK on S_n, first row = longest increasing
};

std::optional<Check> parse_check(std::string_view name);
const char* to_string(Check check) noexcept;
std::vector<Check> all_checks();

SweepReport verify_theorem(Check check, int n, int k, const SweepOptions& options = SweepOptions::from_environment());

Json to_json(const SweepReport& report);

} // namespace vtab
