#include "vtab/bumping.hpp"

#include "vtab/error.hpp"
#include "vtab/rsk.hpp"

#include <algorithm>

namespace vtab {

namespace {

void require_distinct_in_range(const std::vector<int>& x, int n) {
    if (n < static_cast<int>(x.size()) + 1)
        throw Error(ErrorCode::Precondition, "need n >= k+1");
    std::vector<int> s = x;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error(ErrorCode::DuplicateEntry, "entries must be distinct");
    if (!s.empty() && (s.front() < 1 || s.back() > n))
        throw Error(ErrorCode::InvalidArgument, "entries must lie in [n]");
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// gap_count = j and the longest increasing subsequence of the two orders.
struct GapData {
    int gap_count = 0;
    int l = 0;       // is(x, m)
    int l_prime = 0; // is(m, x)
};

GapData gap_data(const std::vector<int>& x) {
    const auto m = interior_gaps(x);
    return {static_cast<int>(m.size()), longest_increasing(concat(x, m)), longest_increasing(concat(m, x))};
}

} // namespace

std::vector<int> interior_gaps(const std::vector<int>& x) {
    std::vector<int> gaps;
    if (x.empty())
        return gaps;
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    for (int v = *lo + 1; v < *hi; ++v)
        if (std::find(x.begin(), x.end(), v) == x.end())
            gaps.push_back(v);
    return gaps;
}

bool bumping_criterion(const std::vector<int>& t, int n) {
    require_distinct_in_range(t, n);
    if (t.empty())
        return true;
    const auto g = gap_data(t);
    return *std::min_element(t.begin(), t.end()) > g.l - g.gap_count;
}

bool suffix_criterion(const std::vector<int>& a, int n) {
    require_distinct_in_range(a, n);
    if (a.empty())
        return true;
    const auto g = gap_data(a);
    return n + 1 - *std::max_element(a.begin(), a.end()) > g.l_prime - g.gap_count;
}

ReparkingInstance::ReparkingInstance(int n, std::vector<int> positions) : n_(n), positions_(std::move(positions)) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "street needs at least one spot");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : positions_) {
        if (x < 1 || x > n)
            throw Error(ErrorCode::InvalidArgument, "car parked outside [n]");
        if (seen[x]++)
            throw Error(ErrorCode::DuplicateEntry, "two cars share spot " + std::to_string(x));
    }
}

ReparkOutcome repark(const ReparkingInstance& instance, Direction direction) {
    const int n = instance.n();
    const int k = instance.k();
    const auto& x = instance.positions();
    ReparkOutcome out;
    out.positions = x;
    if (k > 0) {
        const auto g = gap_data(x);
        if (direction == Direction::Right)
            out.predicted = n - *std::max_element(x.begin(), x.end()) >= g.l_prime - g.gap_count;
        else
            out.predicted = *std::min_element(x.begin(), x.end()) - 1 >= g.l - g.gap_count;
    } else {
        out.predicted = true;
    }

    std::vector<char> taken(static_cast<std::size_t>(n) + 2, 0);
    for (int p : x)
        taken[p] = 1;
    const int step = direction == Direction::Right ? 1 : -1;
    for (int c = 0; c < k; ++c) {
        const int car_index = direction == Direction::Right ? c : k - 1 - c;
        int spot = out.positions[car_index];
        taken[spot] = 0;
        do
            spot += step;
        while (spot >= 1 && spot <= n && taken[spot]);
        if (spot < 1 || spot > n) {
            out.failed_car = car_index + 1;
            return out;
        }
        taken[spot] = 1;
        out.positions[car_index] = spot;
    }
    out.success = true;
    return out;
}

} // namespace vtab
