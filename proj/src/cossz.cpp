#include "vtab/cossz.hpp"

#include "vtab/error.hpp"
#include "vtab/rsk.hpp"

#include <algorithm>
#include <sstream>

namespace vtab {

MultisetTableau::MultisetTableau(std::vector<std::vector<MultisetCell>> rows) : rows_(std::move(rows)) {
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty())
            throw Error(ErrorCode::InvalidTableau, "empty row");
        if (r > 0 && rows_[r].size() > rows_[r - 1].size())
            throw Error(ErrorCode::InvalidTableau, "row lengths must weakly decrease");
        for (auto& cell : rows_[r]) {
            std::sort(cell.begin(), cell.end());
            seen.insert(seen.end(), cell.begin(), cell.end());
        }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t j = 0; j < seen.size(); ++j)
        if (seen[j] != static_cast<int>(j) + 1)
            throw Error(ErrorCode::InvalidTableau, "nonempty cells must partition [k]");
    k_ = static_cast<int>(seen.size());

    const MaxOrder less;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && less(rows_[r][c], rows_[r][c - 1]))
                throw Error(ErrorCode::InvalidTableau, "row decreases");
            if (c > 0 && !rows_[r][c].empty() && !less(rows_[r][c - 1], rows_[r][c]))
                throw Error(ErrorCode::InvalidTableau, "row repeats a nonempty cell");
            if (r > 0 && !less(rows_[r - 1][c], rows_[r][c]))
                throw Error(ErrorCode::InvalidTableau, "column does not increase");
        }
    }
}

Partition MultisetTableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

std::string MultisetTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0)
            os << " / ";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0)
                os << ' ';
            os << '{';
            for (std::size_t j = 0; j < rows_[r][c].size(); ++j)
                os << (j ? "," : "") << rows_[r][c][j];
            os << '}';
        }
    }
    return os.str();
}

CosszImage cossz_forward(const IntegerSequence& i) {
    const int n = i.n();
    std::vector<MultisetCell> block(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < i.k(); ++j)
        block[i[j]].push_back(j + 1);

    TwoLineArray<MultisetCell> a;
    for (int r = 1; r <= n; ++r) {
        if (block[r].empty()) {
            a.top.emplace_back();
            a.bottom.push_back(r);
        }
    }
    std::vector<int> filled;
    for (int r = 1; r <= n; ++r)
        if (!block[r].empty())
            filled.push_back(r);
    std::sort(filled.begin(), filled.end(), [&](int x, int y) { return block[x].back() < block[y].back(); });
    for (int r : filled) {
        a.top.push_back(block[r]);
        a.bottom.push_back(r);
    }

    auto res = rsk(a, MaxOrder{});
    return {StandardTableau(std::move(res.insertion)), MultisetTableau(std::move(res.recording))};
}

IntegerSequence cossz_inverse(const StandardTableau& s, const MultisetTableau& t) {
    const int n = s.size();
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "S must be nonempty");
    if (s.shape() != t.shape())
        throw Error(ErrorCode::ShapeMismatch, "S and T differ in shape");
    const auto a = inverse_rsk(s.tableau(), t.rows(), MaxOrder{});
    std::vector<int> entries(static_cast<std::size_t>(t.k()), 0);
    for (std::size_t j = 0; j < a.top.size(); ++j)
        for (int pos : a.top[j])
            entries[static_cast<std::size_t>(pos - 1)] = a.bottom[j];
    IntegerSequence i(n, std::move(entries));
    const auto back = cossz_forward(i);
    if (back.s != s || back.t != t)
        throw Error(ErrorCode::NonRecoverable, "pair is not in the image of the forward map");
    return i;
}

bool cossz_maxshape(const IntegerSequence& i) {
    if (i.n() < i.k() + 1)
        throw Error(ErrorCode::Precondition, "need n >= k+1");
    return cossz_forward(i).s.shape().first() == i.n() - i.k();
}

} // namespace vtab
