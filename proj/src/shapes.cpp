#include "vtab/shapes.hpp"

#include "vtab/error.hpp"

#include <algorithm>

namespace vtab {

bool is_one_row(const IntegerSequence& i) {
    const int k = i.k();
    for (int r = 0; r < k; ++r) {
        const int m = i[r];
        if (m == i.n())
            continue;
        bool found = false;
        for (int s = r + 1; s < k && !found; ++s)
            found = i[s] == m + 1;
        if (!found)
            return false;
    }
    return true;
}

SetPartition one_row_to_set_partition(const IntegerSequence& i) {
    if (!is_one_row(i))
        throw Error(ErrorCode::Precondition, "sequence " + i.to_string() + " does not have one-row shape");
    return set_partition_blocks(i);
}

IntegerSequence set_partition_to_one_row(const SetPartition& p, int n) {
    if (p.num_blocks() > n)
        throw Error(ErrorCode::InvalidArgument, "set partition has more than n blocks");
    std::vector<int> entries(static_cast<std::size_t>(p.k()));
    const auto blocks = p.blocks_by_max_descending();
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int r : blocks[b])
            entries[static_cast<std::size_t>(r - 1)] = n - static_cast<int>(b);
    return IntegerSequence(n, std::move(entries));
}

bool is_hook_sequence(const IntegerSequence& i) {
    if (i.k() == 0)
        return true;
    if (i[0] >= i.n())
        return false;
    for (int j = 1; j < i.k(); ++j)
        if (i[j] >= i[j - 1])
            return false;
    return true;
}

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
    int x = 0;
    int y = 0;
    for (char c : steps_) {
        if (c == 'E')
            ++x;
        else if (c == 'N')
            ++y;
        else
            throw Error(ErrorCode::InvalidArgument, "lattice path steps must be E or N");
        if (y > x)
            throw Error(ErrorCode::InvalidArgument, "lattice path rises above y = x");
    }
}

LatticePath LatticePath::from_north_coordinates(const std::vector<int>& v, int width) {
    std::string s;
    int x = 0;
    for (int target : v) {
        if (target < x)
            throw Error(ErrorCode::InvalidArgument, "north coordinates must be weakly increasing");
        s.append(static_cast<std::size_t>(target - x), 'E');
        x = target;
        s.push_back('N');
    }
    if (width < x)
        throw Error(ErrorCode::InvalidArgument, "path wider than its endpoint");
    s.append(static_cast<std::size_t>(width - x), 'E');
    return LatticePath(std::move(s));
}

int LatticePath::east() const noexcept { return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'E')); }

int LatticePath::north() const noexcept { return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'N')); }

std::vector<int> LatticePath::north_coordinates() const {
    std::vector<int> v;
    int x = 0;
    for (char c : steps_) {
        if (c == 'E')
            ++x;
        else
            v.push_back(x);
    }
    return v;
}

IntegerSequence two_row_from_syt(const StandardTableau& p) {
    const auto& rows = p.rows();
    const int n = p.size();
    if (rows.size() > 2)
        throw Error(ErrorCode::ShapeMismatch, "tableau has more than two rows");
    if (rows.size() < 2)
        return IntegerSequence(std::max(n, 1), {});
    const auto& b = rows[1];
    std::vector<int> out;
    out.reserve(b.size());
    std::size_t start = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (j > 0 && b[j] != b[j - 1] + 1)
            start = j;
        out.push_back(b[start] - 1);
    }
    return IntegerSequence(n, std::move(out));
}

StandardTableau two_row_syt(int n, const std::vector<int>& b) {
    std::vector<char> second(static_cast<std::size_t>(n) + 1, 0);
    for (int x : b) {
        if (x < 1 || x > n)
            throw Error(ErrorCode::InvalidArgument, "second row entry outside [n]");
        second[x] = 1;
    }
    Rows rows(1);
    for (int x = 1; x <= n; ++x)
        if (!second[x])
            rows[0].push_back(x);
    if (!b.empty())
        rows.push_back(b);
    return StandardTableau(PartialTableau(std::move(rows)));
}

TwoRowDecomposition two_row_decompose(const IntegerSequence& i) {
    const int n = i.n();
    const int k = i.k();
    if (n < 2 * k)
        throw Error(ErrorCode::Precondition, "two-row shape needs n >= 2k");
    const auto not_two_row = [&] {
        return Error(ErrorCode::Precondition, "sequence " + i.to_string() + " does not have shape (n-k, k)");
    };
    TwoRowDecomposition d{{}, {}, {}, LatticePath("")};
    int before = 0; // r_1 + ... + r_{s-1}
    for (int j = 0; j < k; ++j) {
        if (j > 0 && i[j] < i[j - 1])
            throw not_two_row();
        if (j > 0 && i[j] != i[j - 1])
            before = j;
        d.eps.push_back(before);
        d.v.push_back(i[j] - before);
        d.b.push_back(j + 1 + d.v.back());
    }
    for (int j = 0; j < k; ++j) {
        if (d.v[j] < j + 1 || (j > 0 && d.v[j] < d.v[j - 1]) || d.b[j] > n)
            throw not_two_row();
    }
    d.path = LatticePath::from_north_coordinates(d.v, n - k);
    // The runs of b must regroup into exactly the values of i.
    if (two_row_from_syt(two_row_syt(n, d.b)) != i)
        throw not_two_row();
    return d;
}

} // namespace vtab
