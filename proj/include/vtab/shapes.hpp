#pragma once

#include "vtab/partition.hpp"
#include "vtab/sequence.hpp"
#include "vtab/tableau.hpp"

#include <string>
#include <vector>

namespace vtab {

// ---- One-row shape (n) ---------------------------------------------------

// Every value m < n that occurs must occur again as m+1 at a later position.
bool is_one_row(const IntegerSequence& i);

// Position r lies in the (n-m+1)-th block (blocks by decreasing maximum)
// iff i_r = m.
SetPartition one_row_to_set_partition(const IntegerSequence& i);
IntegerSequence set_partition_to_one_row(const SetPartition& p, int n);

// ---- Hook shape (n-k, 1^k) -----------------------------------------------

// n > i_1 > i_2 > ... > i_k.
bool is_hook_sequence(const IntegerSequence& i);

// ---- Two-row shape (n-k, k) ----------------------------------------------

// A path of E and N steps from (0,0) to (n-k, k) that never rises above
// y = x.
class LatticePath {
public:
    explicit LatticePath(std::string steps);

    // N-steps at the x-coordinates v (weakly increasing, v_j >= j), then E
    // steps out to x = width.
    static LatticePath from_north_coordinates(const std::vector<int>& v, int width);

    const std::string& steps() const noexcept { return steps_; }
    int east() const noexcept;
    int north() const noexcept;
    // x-coordinate of each N step.
    std::vector<int> north_coordinates() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::string steps_;
};

// Split the second row into maximal runs of consecutive integers and
// replace each run a, a+1, ..., a+l-1 by l copies of a-1.
IntegerSequence two_row_from_syt(const StandardTableau& p);

struct TwoRowDecomposition {
    std::vector<int> v;   // x-coordinates of the N-steps
    std::vector<int> eps; // 0^{r1} r1^{r2} (r1+r2)^{r3} ...
    std::vector<int> b;   // second row of P: b_j = j + v_j
    LatticePath path;
};

// i = v + eps with eps built from the multiplicities of i's distinct values.
// Throws Precondition unless i has shape (n-k, k).
TwoRowDecomposition two_row_decompose(const IntegerSequence& i);

// The SYT of shape (n-k, k) whose second row is b.
StandardTableau two_row_syt(int n, const std::vector<int>& b);

} // namespace vtab
