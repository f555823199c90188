#include "vtab/rsk.hpp"

namespace vtab {

namespace detail {

int insert_raw(Rows& rows, int x, std::optional<int>* first_row_bump) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return static_cast<int>(r);
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r);
        }
        std::swap(*it, x);
        if (r == 0 && first_row_bump)
            *first_row_bump = x;
    }
}

int reverse_insert_raw(Rows& rows, int row) {
    int y = rows[row].back();
    rows[row].pop_back();
    if (rows[row].empty())
        rows.pop_back();
    for (int r = row - 1; r >= 0; --r) {
        auto& cur = rows[r];
        auto it = std::lower_bound(cur.begin(), cur.end(), y);
        // it != begin: the entry above y's box is smaller than y.
        --it;
        std::swap(*it, y);
    }
    return y;
}

void jdt_delete_raw(Rows& rows, Cell at) {
    int r = at.row;
    int c = at.col;
    while (true) {
        const bool has_below = r + 1 < static_cast<int>(rows.size()) && c < static_cast<int>(rows[r + 1].size());
        const bool has_right = c + 1 < static_cast<int>(rows[r].size());
        if (!has_below && !has_right)
            break;
        if (has_below && (!has_right || rows[r + 1][c] < rows[r][c + 1])) {
            std::swap(rows[r][c], rows[r + 1][c]);
            ++r;
        } else {
            std::swap(rows[r][c], rows[r][c + 1]);
            ++c;
        }
    }
    rows[r].pop_back();
    if (rows[r].empty())
        rows.pop_back();
}

void reverse_jdt_raw(Rows& rows, int x, int row) {
    if (row == static_cast<int>(rows.size()))
        rows.emplace_back();
    int r = row;
    int c = static_cast<int>(rows[r].size());
    rows[r].push_back(0);
    while (true) {
        const int up = r > 0 ? rows[r - 1][c] : 0;
        const int left = c > 0 ? rows[r][c - 1] : 0;
        const int m = std::max(up, left);
        if (m <= x)
            break;
        if (up > left) {
            rows[r][c] = up;
            --r;
        } else {
            rows[r][c] = left;
            --c;
        }
    }
    rows[r][c] = x;
}

} // namespace detail

InsertResult row_insert(const PartialTableau& t, int x) {
    if (x < 1)
        throw Error(ErrorCode::InvalidArgument, "entries must be positive");
    if (t.contains(x))
        throw Error(ErrorCode::DuplicateEntry, std::to_string(x) + " is already in the tableau");
    Rows rows = t.rows();
    std::optional<int> bump;
    const int r = detail::insert_raw(rows, x, &bump);
    return {PartialTableau(std::move(rows)), r, bump};
}

PartialTableau jdt_delete(const PartialTableau& t, int x) {
    auto cell = t.find(x);
    if (!cell)
        throw Error(ErrorCode::MissingEntry, std::to_string(x) + " is not in the tableau");
    Rows rows = t.rows();
    detail::jdt_delete_raw(rows, *cell);
    return PartialTableau(std::move(rows));
}

UninsertResult reverse_row_insert(const PartialTableau& t, int row) {
    const auto& rows = t.rows();
    if (row < 0 || row >= t.num_rows())
        throw Error(ErrorCode::InvalidArgument, "row out of range");
    if (row + 1 < t.num_rows() && rows[row + 1].size() == rows[row].size())
        throw Error(ErrorCode::InvalidArgument, "end of row is not a corner");
    Rows copy = rows;
    const int y = detail::reverse_insert_raw(copy, row);
    return {PartialTableau(std::move(copy)), y};
}

PartialTableau reverse_jdt(const PartialTableau& t, int x, int row) {
    if (x < 1)
        throw Error(ErrorCode::InvalidArgument, "entries must be positive");
    if (t.contains(x))
        throw Error(ErrorCode::DuplicateEntry, std::to_string(x) + " is already in the tableau");
    const auto& rows = t.rows();
    if (row < 0 || row > t.num_rows() || (row > 0 && rows[row - 1].size() <= (row < t.num_rows() ? rows[row].size() : 0)))
        throw Error(ErrorCode::InvalidArgument, "cannot add a box at the end of row " + std::to_string(row));
    Rows copy = rows;
    detail::reverse_jdt_raw(copy, x, row);
    return PartialTableau(std::move(copy));
}

PermutationRsk rsk(const Permutation& w) {
    TwoLineArray<int> a;
    a.bottom = w.as_vector();
    a.top.resize(a.bottom.size());
    for (std::size_t j = 0; j < a.top.size(); ++j)
        a.top[j] = static_cast<int>(j) + 1;
    auto res = rsk(a);
    return {StandardTableau(std::move(res.insertion)), StandardTableau(PartialTableau(std::move(res.recording)))};
}

Permutation inverse_rsk(const StandardTableau& p, const StandardTableau& q) {
    if (p.shape() != q.shape())
        throw Error(ErrorCode::ShapeMismatch, "P and Q must have the same shape");
    auto a = inverse_rsk<int>(p.tableau(), q.rows());
    return Permutation(std::move(a.bottom));
}

std::vector<int> increasing_depths(std::span<const int> seq) {
    // Patience sorting: the pile a card lands on is its g-value.
    std::vector<int> tops;
    std::vector<int> depth;
    depth.reserve(seq.size());
    for (int x : seq) {
        auto it = std::lower_bound(tops.begin(), tops.end(), x);
        depth.push_back(static_cast<int>(it - tops.begin()) + 1);
        if (it == tops.end())
            tops.push_back(x);
        else
            *it = x;
    }
    return depth;
}

int longest_increasing(std::span<const int> seq) {
    auto d = increasing_depths(seq);
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

} // namespace vtab
