#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vtab {

// An element of [n]^k.
class IntegerSequence {
public:
    IntegerSequence(int n, std::vector<int> entries);

    int n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const noexcept { return entries_; }
    const std::vector<int>& as_vector() const noexcept { return entries_; }
    int operator[](std::size_t j) const { return entries_.at(j); }

    bool has_repeats() const;
    std::string to_string() const;

    friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;
    friend auto operator<=>(const IntegerSequence&, const IntegerSequence&) = default;

private:
    int n_;
    std::vector<int> entries_;
};

// Calls f on every element of [n]^k in lexicographic order.
void for_each_sequence(int n, int k, const std::function<void(const IntegerSequence&)>& f);

// One-line notation for an element of S_n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    std::span<const int> word() const noexcept { return word_; }
    const std::vector<int>& as_vector() const noexcept { return word_; }
    int operator[](std::size_t j) const { return word_.at(j); }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// A set partition of [k]. Blocks are stored sorted, ordered by their
// smallest element.
class SetPartition {
public:
    SetPartition(int k, std::vector<std::vector<int>> blocks);

    int k() const noexcept { return k_; }
    int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    // Blocks ordered by their largest element, decreasing.
    std::vector<std::vector<int>> blocks_by_max_descending() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    int k_;
    std::vector<std::vector<int>> blocks_;
};

// Positions j, j' share a block iff i_j == i_j'. Positions are 1-based.
SetPartition set_partition_blocks(const IntegerSequence& i);

// x -> (n+1-x_k, ..., n+1-x_1).
std::vector<int> reverse_complement(std::span<const int> x, int n);

} // namespace vtab
