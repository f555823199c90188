#pragma once

#include "vtab/error.hpp"
#include "vtab/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vtab {

using Rows = std::vector<std::vector<int>>;

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// A filling of a Young diagram by distinct positive integers, strictly
// increasing along rows and down columns. Validated on construction.
class PartialTableau {
public:
    PartialTableau() = default;
    explicit PartialTableau(Rows rows);

    // The single-row tableau 1 2 ... n.
    static PartialTableau row_of(int n);

    const Rows& rows() const noexcept { return rows_; }
    Partition shape() const;
    int size() const noexcept;
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }

    std::optional<Cell> find(int x) const noexcept;
    bool contains(int x) const noexcept { return find(x).has_value(); }
    int at(Cell c) const { return rows_.at(c.row).at(c.col); }

    // Sorted entries.
    std::vector<int> content() const;

    // True when the content is exactly {1, ..., size()}.
    bool is_standard() const;

    std::string to_string() const;

    friend bool operator==(const PartialTableau&, const PartialTableau&) = default;

private:
    Rows rows_;
};

// A partial tableau whose content is exactly [n].
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(PartialTableau t);
    explicit StandardTableau(Rows rows) : StandardTableau(PartialTableau(std::move(rows))) {}

    const PartialTableau& tableau() const noexcept { return t_; }
    operator const PartialTableau&() const noexcept { return t_; }

    const Rows& rows() const noexcept { return t_.rows(); }
    Partition shape() const { return t_.shape(); }
    int size() const noexcept { return t_.size(); }
    std::optional<Cell> find(int x) const noexcept { return t_.find(x); }
    std::string to_string() const { return t_.to_string(); }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    PartialTableau t_;
};

// All standard Young tableaux of the given shape.
std::vector<StandardTableau> enumerate_syt(const Partition& shape, const EnumerationLimits& limits = {});

// f^shape by the hook-length formula. f of the empty shape is 1.
std::uint64_t count_syt(const Partition& shape);

// The SYT of shape lambda* obtained from q by deleting its first row and
// re-standardising; used when the first row of q is exactly 1..lambda_1.
StandardTableau strip_first_row(const StandardTableau& q);

// Inverse of strip_first_row: shift every entry by `length` and put the
// row 1..length on top.
StandardTableau prepend_first_row(const StandardTableau& qstar, int length);

} // namespace vtab
