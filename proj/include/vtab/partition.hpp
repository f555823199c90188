#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vtab {

// An integer partition: weakly decreasing positive parts. The empty
// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& as_vector() const noexcept { return parts_; }

    // Part i (0-based); zero past the last row.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int first() const noexcept { return part(0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    // Diagram containment: part(i) >= other.part(i) for all i.
    bool contains(const Partition& other) const noexcept;

    // The partition with its first part removed.
    Partition star() const;

    // Rows where a box may be added / removed while staying a partition.
    std::vector<int> addable_rows() const;
    std::vector<int> removable_rows() const;

    Partition with_box_added(int row) const;
    Partition with_box_removed(int row) const;

    // (n - |star|, star...) style helper: prepend a first row.
    Partition with_first_row(int length) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// |outer / inner| when outer contains inner, -1 otherwise.
int skew_size(const Partition& outer, const Partition& inner) noexcept;

// The single row in which two partitions differing by exactly one box
// differ, or -1.
int differing_row(const Partition& larger, const Partition& smaller) noexcept;

// All partitions of n, in reverse lexicographic order: (n) first.
std::vector<Partition> partitions_of(int n);

// The hook (n-k, 1^k) and two-row (n-k, k) shapes.
Partition hook_shape(int n, int k);
Partition two_row_shape(int n, int k);

} // namespace vtab
