#pragma once

#include "vtab/partition.hpp"
#include "vtab/sequence.hpp"
#include "vtab/tableau.hpp"

#include <string>
#include <vector>

namespace vtab {

// A cell is a sorted subset of [k]; the empty vector is the empty cell.
using MultisetCell = std::vector<int>;

// A before B iff max(A) < max(B), with the empty cell below every nonempty
// one. Empty cells tie with each other.
struct MaxOrder {
    bool operator()(const MultisetCell& a, const MultisetCell& b) const noexcept {
        if (b.empty())
            return false;
        return a.empty() || a.back() < b.back();
    }
};

// Filling by disjoint subsets of [k] (plus empty cells), weakly increasing
// along rows and strictly down columns under MaxOrder.
class MultisetTableau {
public:
    MultisetTableau() = default;
    explicit MultisetTableau(std::vector<std::vector<MultisetCell>> rows);

    const std::vector<std::vector<MultisetCell>>& rows() const noexcept { return rows_; }
    Partition shape() const;
    // Size of the content [k].
    int k() const noexcept { return k_; }

    std::string to_string() const;

    friend bool operator==(const MultisetTableau&, const MultisetTableau&) = default;

private:
    std::vector<std::vector<MultisetCell>> rows_;
    int k_ = 0;
};

struct CosszImage {
    StandardTableau s;
    MultisetTableau t;
};

// Groups positions by value into blocks M_r, pairs empty cells with the
// values r whose block is empty and each block with its r, then runs RSK.
CosszImage cossz_forward(const IntegerSequence& i);
IntegerSequence cossz_inverse(const StandardTableau& s, const MultisetTableau& t);

// The first row of S has length n - k.
bool cossz_maxshape(const IntegerSequence& i);

} // namespace vtab
