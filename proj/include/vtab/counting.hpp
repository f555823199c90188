#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace vtab {

// Exact reference counts. All throw Overflow past 64 bits.
std::uint64_t binomial(int n, int k);
std::uint64_t stirling2(int n, int k);
std::uint64_t bell(int k);
// Set partitions of [k] with at most n blocks.
std::uint64_t bounded_bell(int k, int n);
std::uint64_t catalan(int m);
// (n-2k+1)/(n-k+1) * C(n,k): standard Young tableaux of shape (n-k, k).
std::uint64_t ballot(int n, int k);

// A rational number in lowest terms, denominator positive.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool is_integer() const noexcept { return den == 1; }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// (n - 2k + 1 + shift)/(n - k + 1) * C(n,k). shift = 0 is the ballot
// number; other shifts are kept for comparison against it.
Fraction ballot_fraction(int n, int k, int shift = 0);

enum class CountKind { Stirling2, Bell, Binomial, Ballot, Catalan };

std::optional<CountKind> parse_count_kind(std::string_view name);

// Dispatcher over the counts above; `b` is ignored for single-argument kinds.
std::uint64_t count_reference(CountKind kind, int a, int b = 0);

} // namespace vtab
