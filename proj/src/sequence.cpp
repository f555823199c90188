#include "vtab/sequence.hpp"

#include "vtab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vtab {

namespace {

std::string join(std::span<const int> xs) {
    std::string s = "(";
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j)
            s += ',';
        s += std::to_string(xs[j]);
    }
    return s + ")";
}

} // namespace

IntegerSequence::IntegerSequence(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1)
        throw Error(ErrorCode::InvalidArgument, "n must be positive");
    for (int x : entries_)
        if (x < 1 || x > n_)
            throw Error(ErrorCode::InvalidArgument,
                        "entry " + std::to_string(x) + " outside [1," + std::to_string(n_) + "]");
}

bool IntegerSequence::has_repeats() const {
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::string IntegerSequence::to_string() const { return join(entries_); }

void for_each_sequence(int n, int k, const std::function<void(const IntegerSequence&)>& f) {
    if (n < 1 || k < 0)
        throw Error(ErrorCode::InvalidArgument, "need n >= 1 and k >= 0");
    std::vector<int> cur(static_cast<std::size_t>(k), 1);
    while (true) {
        f(IntegerSequence(n, cur));
        int j = k - 1;
        while (j >= 0 && cur[j] == n)
            cur[j--] = 1;
        if (j < 0)
            return;
        ++cur[j];
    }
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int x : word_) {
        if (x < 1 || x > static_cast<int>(word_.size()) || seen[x])
            throw Error(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(word_.size()));
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < word_.size(); ++j) {
        if (j)
            s += ' ';
        s += std::to_string(word_[j]);
    }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

SetPartition::SetPartition(int k, std::vector<std::vector<int>> blocks) : k_(k), blocks_(std::move(blocks)) {
    std::vector<char> seen(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw Error(ErrorCode::InvalidArgument, "empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > k || seen[x])
                throw Error(ErrorCode::InvalidArgument, "blocks must partition [k]");
            seen[x] = 1;
            ++covered;
        }
    }
    if (covered != k)
        throw Error(ErrorCode::InvalidArgument, "blocks must cover [k]");
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<std::vector<int>> SetPartition::blocks_by_max_descending() const {
    auto out = blocks_;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.back() > b.back(); });
    return out;
}

SetPartition set_partition_blocks(const IntegerSequence& i) {
    std::map<int, std::vector<int>> by_value;
    for (int j = 0; j < i.k(); ++j)
        by_value[i[j]].push_back(j + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [value, positions] : by_value)
        blocks.push_back(std::move(positions));
    return SetPartition(i.k(), std::move(blocks));
}

std::vector<int> reverse_complement(std::span<const int> x, int n) {
    std::vector<int> out(x.rbegin(), x.rend());
    for (auto& v : out)
        v = n + 1 - v;
    return out;
}

} // namespace vtab
