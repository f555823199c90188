#include "vtab/partition.hpp"

#include "vtab/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace vtab {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidPartition: return "invalid partition";
    case ErrorCode::InvalidTableau: return "invalid tableau";
    case ErrorCode::DuplicateEntry: return "duplicate entry";
    case ErrorCode::MissingEntry: return "missing entry";
    case ErrorCode::InvalidArray: return "invalid two-line array";
    case ErrorCode::ShapeMismatch: return "shape mismatch";
    case ErrorCode::NonRecoverable: return "non-recoverable recording order";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::Precondition: return "precondition violated";
    case ErrorCode::BoundExceeded: return "enumeration bound exceeded";
    case ErrorCode::BudgetExceeded: return "sweep budget exceeded";
    case ErrorCode::Overflow: return "integer overflow";
    case ErrorCode::UnknownName: return "unknown name";
    }
    return "error";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error(ErrorCode::InvalidPartition, "parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length())
        return false;
    for (std::size_t i = 0; i < other.parts_.size(); ++i)
        if (other.parts_[i] > parts_[i])
            return false;
    return true;
}

Partition Partition::star() const {
    if (parts_.empty())
        return {};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::vector<int> Partition::addable_rows() const {
    std::vector<int> rows;
    for (int r = 0; r <= length(); ++r)
        if (r == 0 || part(r - 1) > part(r))
            rows.push_back(r);
    return rows;
}

std::vector<int> Partition::removable_rows() const {
    std::vector<int> rows;
    for (int r = 0; r < length(); ++r)
        if (part(r) > part(r + 1))
            rows.push_back(r);
    return rows;
}

Partition Partition::with_box_added(int row) const {
    std::vector<int> p = parts_;
    if (row < 0 || row > length())
        throw Error(ErrorCode::InvalidArgument, "row out of range");
    if (row == length())
        p.push_back(1);
    else
        ++p[row];
    return Partition(std::move(p));
}

Partition Partition::with_box_removed(int row) const {
    std::vector<int> p = parts_;
    if (row < 0 || row >= length())
        throw Error(ErrorCode::InvalidArgument, "row out of range");
    if (--p[row] == 0)
        p.pop_back();
    return Partition(std::move(p));
}

Partition Partition::with_first_row(int length) const {
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    if (length > 0)
        p.push_back(length);
    else if (!parts_.empty())
        throw Error(ErrorCode::InvalidPartition, "empty first row above a nonempty diagram");
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

int skew_size(const Partition& outer, const Partition& inner) noexcept {
    if (!outer.contains(inner))
        return -1;
    return outer.size() - inner.size();
}

int differing_row(const Partition& larger, const Partition& smaller) noexcept {
    if (skew_size(larger, smaller) != 1)
        return -1;
    for (int r = 0; r < larger.length(); ++r)
        if (larger.part(r) != smaller.part(r))
            return r;
    return -1;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Partition hook_shape(int n, int k) {
    if (k < 0 || n - k < 1)
        throw Error(ErrorCode::InvalidArgument, "hook shape needs n >= k+1");
    std::vector<int> p{n - k};
    p.insert(p.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(p));
}

Partition two_row_shape(int n, int k) {
    if (k < 0 || n - k < k)
        throw Error(ErrorCode::InvalidArgument, "two-row shape needs n >= 2k");
    if (k == 0)
        return n == 0 ? Partition() : Partition({n});
    return Partition({n - k, k});
}

} // namespace vtab
