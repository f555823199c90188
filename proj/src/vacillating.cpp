#include "vtab/vacillating.hpp"

#include <algorithm>
#include <map>

namespace vtab {

namespace {

void check_length(int k, std::size_t steps) {
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
    if (steps != static_cast<std::size_t>(2 * k + 1))
        throw Error(ErrorCode::InvalidArgument, "a tableau of length 2k has 2k+1 steps");
}

} // namespace

VacillatingTableau::VacillatingTableau(int n, int k, std::vector<Partition> steps)
    : n_(n), k_(k), steps_(std::move(steps)) {
    if (n_ < 1)
        throw Error(ErrorCode::InvalidArgument, "n must be positive");
    check_length(k_, steps_.size());
    if (steps_[0] != Partition({n_}))
        throw Error(ErrorCode::InvalidArgument, "a vacillating tableau starts at (n)");
    for (int j = 0; j < k_; ++j) {
        if (skew_size(at(j), at_half(j)) != 1)
            throw Error(ErrorCode::InvalidArgument,
                        "step " + std::to_string(j) + " must remove exactly one box");
        if (skew_size(at(j + 1), at_half(j)) != 1)
            throw Error(ErrorCode::InvalidArgument,
                        "step " + std::to_string(j) + "+1/2 must add exactly one box");
    }
}

SimplifiedVacillatingTableau::SimplifiedVacillatingTableau(int k, std::vector<Partition> steps)
    : k_(k), steps_(std::move(steps)) {
    check_length(k_, steps_.size());
    if (!steps_[0].empty())
        throw Error(ErrorCode::InvalidArgument, "a simplified vacillating tableau starts empty");
    for (int j = 0; j < k_; ++j) {
        const int down = skew_size(at(j), at_half(j));
        const int up = skew_size(at(j + 1), at_half(j));
        if (down != 0 && down != 1)
            throw Error(ErrorCode::InvalidArgument, "half-step may remove at most one box");
        if (up != 0 && up != 1)
            throw Error(ErrorCode::InvalidArgument, "half-step may add at most one box");
    }
}

SimplifiedVacillatingTableau simplify(const VacillatingTableau& gamma) {
    std::vector<Partition> steps;
    steps.reserve(gamma.steps().size());
    for (const auto& s : gamma.steps())
        steps.push_back(s.star());
    return SimplifiedVacillatingTableau(gamma.k(), std::move(steps));
}

VacillatingTableau unsimplify(const SimplifiedVacillatingTableau& gstar, int n) {
    std::vector<Partition> steps;
    steps.reserve(gstar.steps().size());
    try {
        for (std::size_t idx = 0; idx < gstar.steps().size(); ++idx) {
            const auto& mu = gstar.steps()[idx];
            const int total = idx % 2 == 0 ? n : n - 1;
            const int first = total - mu.size();
            if (first < mu.first())
                throw Error(ErrorCode::Infeasible, "first row would be shorter than the second");
            steps.push_back(mu.with_first_row(first));
        }
        return VacillatingTableau(n, gstar.k(), std::move(steps));
    } catch (const Error& e) {
        throw Error(ErrorCode::Infeasible, std::string("no n-vacillating lift for n = ") + std::to_string(n) +
                                               ": " + e.what());
    }
}

namespace {

// Boxes of target not inside cur.
int missing_boxes(const Partition& target, const Partition& cur) {
    int missing = 0;
    for (int r = 0; r < target.length(); ++r)
        missing += std::max(0, target.part(r) - cur.part(r));
    return missing;
}

void vt_rec(int k, const Partition& target, std::vector<Partition>& path, std::vector<std::vector<Partition>>& out) {
    const int done = static_cast<int>(path.size() / 2);
    const Partition cur = path.back();
    if (missing_boxes(target, cur) > k - done)
        return;
    if (done == k) {
        if (cur == target)
            out.push_back(path);
        return;
    }
    for (int rr : cur.removable_rows()) {
        path.push_back(cur.with_box_removed(rr));
        const Partition half = path.back();
        for (int ar : half.addable_rows()) {
            path.push_back(half.with_box_added(ar));
            vt_rec(k, target, path, out);
            path.pop_back();
        }
        path.pop_back();
    }
}

} // namespace

std::vector<VacillatingTableau> enumerate_vt(int n, int k, const Partition& shape, const EnumerationLimits& limits) {
    if (n > limits.max_vt_n || k > limits.max_vt_k)
        throw Error(ErrorCode::BoundExceeded, "vacillating tableau enumeration bound exceeded");
    if (shape.size() != n)
        throw Error(ErrorCode::InvalidArgument, "shape must be a partition of n");
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
    std::vector<std::vector<Partition>> paths;
    std::vector<Partition> path{Partition({n})};
    vt_rec(k, shape, path, paths);
    std::vector<VacillatingTableau> out;
    out.reserve(paths.size());
    for (auto& p : paths)
        out.emplace_back(n, k, std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_vt(int n, int k, const Partition& shape) {
    if (shape.size() != n || n < 1 || k < 0)
        throw Error(ErrorCode::InvalidArgument, "shape must be a partition of n >= 1");
    std::map<Partition, std::uint64_t> layer{{Partition({n}), 1}};
    for (int j = 0; j < k; ++j) {
        std::map<Partition, std::uint64_t> half;
        for (const auto& [p, c] : layer)
            for (int r : p.removable_rows())
                half[p.with_box_removed(r)] += c;
        std::map<Partition, std::uint64_t> next;
        for (const auto& [p, c] : half)
            for (int r : p.addable_rows())
                next[p.with_box_added(r)] += c;
        layer = std::move(next);
    }
    auto it = layer.find(shape);
    return it == layer.end() ? 0 : it->second;
}

StandardTableau vt_to_syt_star(const VacillatingTableau& gamma) {
    const int n = gamma.n();
    const int k = gamma.k();
    if (gamma.shape().first() != n - k)
        throw Error(ErrorCode::Precondition, "shape must have first row n - k");
    const auto gstar = simplify(gamma);
    Rows rows;
    for (int j = 0; j < k; ++j) {
        if (gstar.at(j) != gstar.at_half(j))
            throw Error(ErrorCode::Precondition, "simplified tableau shrinks at a half-step");
        const int r = differing_row(gstar.at(j + 1), gstar.at_half(j));
        if (r < 0)
            throw Error(ErrorCode::Precondition, "simplified tableau must grow at every step");
        if (r == static_cast<int>(rows.size()))
            rows.emplace_back();
        rows[r].push_back(j + 1);
    }
    return StandardTableau(PartialTableau(std::move(rows)));
}

VacillatingTableau syt_star_to_vt(const StandardTableau& qstar, int n) {
    const int k = qstar.size();
    std::vector<Partition> steps{Partition{}};
    std::vector<int> row_len;
    for (int j = 1; j <= k; ++j) {
        const auto cell = *qstar.find(j);
        if (cell.row == static_cast<int>(row_len.size()))
            row_len.push_back(0);
        ++row_len[cell.row];
        steps.push_back(steps.back());
        steps.emplace_back(row_len);
    }
    return unsimplify(SimplifiedVacillatingTableau(k, std::move(steps)), n);
}

} // namespace vtab
