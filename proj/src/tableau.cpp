#include "vtab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vtab {

PartialTableau::PartialTableau(Rows rows) : rows_(std::move(rows)) {
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty())
            throw Error(ErrorCode::InvalidTableau, "empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw Error(ErrorCode::InvalidTableau, "row lengths must be weakly decreasing");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                throw Error(ErrorCode::InvalidTableau, "entries must be positive");
            if (c > 0 && row[c] <= row[c - 1])
                throw Error(ErrorCode::InvalidTableau, "rows must increase");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw Error(ErrorCode::InvalidTableau, "columns must increase");
            seen.push_back(row[c]);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error(ErrorCode::InvalidTableau, "entries must be distinct");
}

PartialTableau PartialTableau::row_of(int n) {
    if (n <= 0)
        return {};
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 1);
    return PartialTableau(Rows{std::move(row)});
}

Partition PartialTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int PartialTableau::size() const noexcept {
    int s = 0;
    for (const auto& row : rows_)
        s += static_cast<int>(row.size());
    return s;
}

std::optional<Cell> PartialTableau::find(int x) const noexcept {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), x);
        if (it != rows_[r].end() && *it == x)
            return Cell{static_cast<int>(r), static_cast<int>(it - rows_[r].begin())};
    }
    return std::nullopt;
}

std::vector<int> PartialTableau::content() const {
    std::vector<int> out;
    for (const auto& row : rows_)
        out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool PartialTableau::is_standard() const {
    auto c = content();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::string PartialTableau::to_string() const {
    if (rows_.empty())
        return "(empty)\n";
    int width = 1;
    for (const auto& row : rows_)
        for (int x : row)
            width = std::max(width, static_cast<int>(std::to_string(x).size()));
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            auto s = std::to_string(row[c]);
            os << (c ? " " : "") << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

StandardTableau::StandardTableau(PartialTableau t) : t_(std::move(t)) {
    if (!t_.is_standard())
        throw Error(ErrorCode::InvalidTableau, "content of a standard tableau must be 1..n");
}

namespace {

void fill_syt(const Partition& shape, int next, int n, Rows& rows, std::vector<StandardTableau>& out) {
    if (next > n) {
        out.emplace_back(PartialTableau(rows));
        return;
    }
    const int filled = static_cast<int>(rows.size());
    for (int r = 0; r < shape.length() && r <= filled; ++r) {
        int len = r < filled ? static_cast<int>(rows[r].size()) : 0;
        if (len >= shape.part(r))
            continue;
        if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len)
            continue;
        if (r == static_cast<int>(rows.size()))
            rows.emplace_back();
        rows[r].push_back(next);
        fill_syt(shape, next + 1, n, rows, out);
        rows[r].pop_back();
        if (rows[r].empty())
            rows.pop_back();
    }
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

} // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape, const EnumerationLimits& limits) {
    if (shape.size() > limits.max_syt_size)
        throw Error(ErrorCode::BoundExceeded,
                    "shape of size " + std::to_string(shape.size()) + " exceeds SYT enumeration bound " +
                        std::to_string(limits.max_syt_size));
    std::vector<StandardTableau> out;
    Rows rows;
    fill_syt(shape, 1, shape.size(), rows, out);
    return out;
}

std::uint64_t count_syt(const Partition& shape) {
    const int n = shape.size();
    std::vector<std::uint64_t> num(static_cast<std::size_t>(n));
    std::iota(num.begin(), num.end(), std::uint64_t{1});

    const Partition conj = [&] {
        std::vector<int> c;
        for (int j = 0; j < shape.first(); ++j) {
            int len = 0;
            while (shape.part(static_cast<std::size_t>(len)) > j)
                ++len;
            c.push_back(len);
        }
        return Partition(std::move(c));
    }();

    // Cancel each hook against the numerator factors; the quotient is an
    // integer so every hook cancels completely.
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape.part(static_cast<std::size_t>(r)); ++c) {
            std::uint64_t hook = static_cast<std::uint64_t>(shape.part(r) - c - 1 + conj.part(c) - r - 1 + 1);
            for (auto& f : num) {
                if (hook == 1)
                    break;
                auto g = gcd_u64(hook, f);
                hook /= g;
                f /= g;
            }
        }
    }
    std::uint64_t result = 1;
    for (auto f : num)
        if (__builtin_mul_overflow(result, f, &result))
            throw Error(ErrorCode::Overflow, "f^lambda does not fit in 64 bits");
    return result;
}

StandardTableau strip_first_row(const StandardTableau& q) {
    const auto& rows = q.rows();
    if (rows.empty())
        return {};
    const int len = static_cast<int>(rows[0].size());
    for (int c = 0; c < len; ++c)
        if (rows[0][c] != c + 1)
            throw Error(ErrorCode::Precondition, "first row is not 1..lambda_1");
    Rows out(rows.begin() + 1, rows.end());
    for (auto& row : out)
        for (auto& x : row)
            x -= len;
    return StandardTableau(PartialTableau(std::move(out)));
}

StandardTableau prepend_first_row(const StandardTableau& qstar, int length) {
    if (length < qstar.shape().first())
        throw Error(ErrorCode::InvalidTableau, "new first row shorter than the second");
    Rows out;
    if (length > 0) {
        out.emplace_back(static_cast<std::size_t>(length));
        std::iota(out[0].begin(), out[0].end(), 1);
    }
    for (auto row : qstar.rows()) {
        for (auto& x : row)
            x += length;
        out.push_back(std::move(row));
    }
    return StandardTableau(PartialTableau(std::move(out)));
}

} // namespace vtab
