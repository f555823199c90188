#pragma once

#include "vtab/error.hpp"
#include "vtab/sequence.hpp"
#include "vtab/tableau.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace vtab {

struct InsertResult {
    PartialTableau tableau;
    int row = 0;                   // row (0-based) that received the new box
    std::optional<int> bumped_out; // entry displaced from the first row, if any
};

// Row insertion of x into t. x must not already be an entry.
InsertResult row_insert(const PartialTableau& t, int x);

// Jeu de taquin deletion of the entry x.
PartialTableau jdt_delete(const PartialTableau& t, int x);

// Undo a row insertion whose new box ended at the end of `row`. Returns the
// tableau before insertion and the inserted value.
struct UninsertResult {
    PartialTableau tableau;
    int value = 0;
};
UninsertResult reverse_row_insert(const PartialTableau& t, int row);

// Undo a jdt deletion of x whose vacated box was at the end of `row`.
PartialTableau reverse_jdt(const PartialTableau& t, int x, int row);

namespace detail {

// In-place variants over raw rows; callers own validity.
int insert_raw(Rows& rows, int x, std::optional<int>* first_row_bump);
int reverse_insert_raw(Rows& rows, int row);
void jdt_delete_raw(Rows& rows, Cell at);
void reverse_jdt_raw(Rows& rows, int x, int row);

} // namespace detail

// Two-line array with an ordered top alphabet and distinct integer bottoms.
template <class Label>
struct TwoLineArray {
    std::vector<Label> top;
    std::vector<int> bottom;
};

template <class Label>
using Filling = std::vector<std::vector<Label>>;

template <class Label>
struct RskResult {
    PartialTableau insertion;
    Filling<Label> recording;
};

// Pairs must be in non-decreasing lexicographic order.
template <class Label, class Less = std::less<>>
void validate_two_line(const TwoLineArray<Label>& a, Less less = {}) {
    if (a.top.size() != a.bottom.size())
        throw Error(ErrorCode::InvalidArray, "top and bottom lengths differ");
    for (std::size_t j = 0; j + 1 < a.top.size(); ++j) {
        if (less(a.top[j + 1], a.top[j]))
            throw Error(ErrorCode::InvalidArray, "top line is not weakly increasing");
        if (!less(a.top[j], a.top[j + 1]) && a.bottom[j + 1] < a.bottom[j])
            throw Error(ErrorCode::InvalidArray, "bottom line decreases under equal top labels");
    }
    auto b = a.bottom;
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
        throw Error(ErrorCode::InvalidArray, "bottom entries must be distinct");
    if (!b.empty() && b.front() < 1)
        throw Error(ErrorCode::InvalidArray, "bottom entries must be positive");
}

// Knuth's RSK: insert the bottom line, record the top labels.
template <class Label, class Less = std::less<>>
RskResult<Label> rsk(const TwoLineArray<Label>& a, Less less = {}) {
    validate_two_line(a, less);
    Rows p;
    Filling<Label> q;
    for (std::size_t j = 0; j < a.bottom.size(); ++j) {
        const int r = detail::insert_raw(p, a.bottom[j], nullptr);
        if (r == static_cast<int>(q.size()))
            q.emplace_back();
        q[r].push_back(a.top[j]);
    }
    return {PartialTableau(std::move(p)), std::move(q)};
}

// Inverse of rsk. The last-recorded box is the one holding the largest
// label; among equal labels it is the rightmost.
template <class Label, class Less = std::less<>>
TwoLineArray<Label> inverse_rsk(const PartialTableau& p, Filling<Label> q, Less less = {}) {
    Rows rows = p.rows();
    if (rows.size() != q.size())
        throw Error(ErrorCode::ShapeMismatch, "insertion and recording tableaux differ in shape");
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].size() != q[r].size())
            throw Error(ErrorCode::ShapeMismatch, "insertion and recording tableaux differ in shape");

    TwoLineArray<Label> out;
    while (!q.empty()) {
        int best_r = -1;
        int best_c = -1;
        for (int r = 0; r < static_cast<int>(q.size()); ++r) {
            for (int c = 0; c < static_cast<int>(q[r].size()); ++c) {
                if (best_r < 0 || less(q[best_r][best_c], q[r][c]) ||
                    (!less(q[r][c], q[best_r][best_c]) && c > best_c)) {
                    best_r = r;
                    best_c = c;
                }
            }
        }
        const bool at_row_end = best_c + 1 == static_cast<int>(q[best_r].size());
        const bool below_shorter =
            best_r + 1 == static_cast<int>(q.size()) || static_cast<int>(q[best_r + 1].size()) <= best_c;
        if (!at_row_end || !below_shorter)
            throw Error(ErrorCode::NonRecoverable, "largest recording label is not at a corner");

        out.bottom.push_back(detail::reverse_insert_raw(rows, best_r));
        out.top.push_back(std::move(q[best_r].back()));
        q[best_r].pop_back();
        if (q[best_r].empty())
            q.pop_back();
    }
    std::reverse(out.top.begin(), out.top.end());
    std::reverse(out.bottom.begin(), out.bottom.end());
    try {
        validate_two_line(out, less);
    } catch (const Error& e) {
        throw Error(ErrorCode::NonRecoverable, e.what());
    }
    return out;
}

struct PermutationRsk {
    StandardTableau p;
    StandardTableau q;
};

// Robinson-Schensted on a permutation, top line 1..n.
PermutationRsk rsk(const Permutation& w);
Permutation inverse_rsk(const StandardTableau& p, const StandardTableau& q);

// Length of a longest increasing subsequence (entries distinct).
int longest_increasing(std::span<const int> seq);

// g-values: entry i is the length of a longest increasing subsequence
// ending at seq[i].
std::vector<int> increasing_depths(std::span<const int> seq);

} // namespace vtab
