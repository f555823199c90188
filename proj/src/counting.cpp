#include "vtab/counting.hpp"

#include "vtab/error.hpp"

#include <numeric>
#include <vector>

namespace vtab {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "count exceeds 64 bits");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "count exceeds 64 bits");
    return r;
}

} // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = checked_add(row[j], row[j - 1]);
    return row[k];
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0)
        return 0;
    // S(i,j) = j S(i-1,j) + S(i-1,j-1)
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = k; j >= 1; --j)
            row[j] = checked_add(checked_mul(static_cast<std::uint64_t>(j), row[j]), row[j - 1]);
        row[0] = 0;
    }
    return row[k];
}

std::uint64_t bounded_bell(int k, int n) {
    std::uint64_t total = 0;
    for (int i = 0; i <= std::min(k, n); ++i)
        total = checked_add(total, stirling2(k, i));
    return total;
}

std::uint64_t bell(int k) { return bounded_bell(k, k); }

std::uint64_t catalan(int m) {
    if (m < 0)
        return 0;
    return binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

std::uint64_t ballot(int n, int k) {
    if (k < 0 || n < 2 * k)
        return 0;
    // C(n,k) - C(n,k-1) equals (n-2k+1)/(n-k+1) C(n,k) and avoids division.
    return binomial(n, k) - binomial(n, k - 1);
}

Fraction ballot_fraction(int n, int k, int shift) {
    const auto c = static_cast<std::int64_t>(binomial(n, k));
    std::int64_t num = (n - 2 * k + 1 + shift) * c;
    std::int64_t den = n - k + 1;
    if (den == 0)
        throw Error(ErrorCode::InvalidArgument, "n - k + 1 must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::optional<CountKind> parse_count_kind(std::string_view name) {
    if (name == "stirling2")
        return CountKind::Stirling2;
    if (name == "bell")
        return CountKind::Bell;
    if (name == "binomial")
        return CountKind::Binomial;
    if (name == "ballot")
        return CountKind::Ballot;
    if (name == "catalan")
        return CountKind::Catalan;
    return std::nullopt;
}

std::uint64_t count_reference(CountKind kind, int a, int b) {
    switch (kind) {
    case CountKind::Stirling2: return stirling2(a, b);
    case CountKind::Bell: return bell(a);
    case CountKind::Binomial: return binomial(a, b);
    case CountKind::Ballot: return ballot(a, b);
    case CountKind::Catalan: return catalan(a);
    }
    throw Error(ErrorCode::UnknownName, "count kind");
}

} // namespace vtab
