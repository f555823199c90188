#pragma once

#include "vtab/partition.hpp"
#include "vtab/sequence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtab {

// w is in R_k^n when its first n-k letters increase and its longest
// increasing subsequence has length exactly n-k.
bool is_in_rnk(const Permutation& w, int k);
std::vector<Permutation> enumerate_rnk(int n, int k);
// Members of R_k^n whose insertion tableau has the given shape.
std::vector<Permutation> rk_of_shape(int n, int k, const Partition& shape);

// t_j = min{x > a_j : x not in {t_1..t_{j-1}, a_{j+1}..a_k}}: the entries
// the last k letters bump out of the first row.
std::vector<int> bumps_from_suffix(const std::vector<int>& a);

// i_j = max{c < t_j : c not in {t_1..t_{j-1}}}. Values may come out < 1
// for sequences that are not bumping sequences.
std::vector<int> sequence_from_bumps(const std::vector<int>& t);

struct AlgorithmAResult {
    std::vector<int> t;
    IntegerSequence i;
};

// From w in R_k^n to the sequence with VT-index k.
AlgorithmAResult algorithm_a(const Permutation& w, int k);

enum class AlgorithmBStatus {
    Success,
    BumpOverflow,  // some t_j > n
    SlotUnderflow, // some a_j <= 0
};

const char* to_string(AlgorithmBStatus status) noexcept;

struct AlgorithmBResult {
    AlgorithmBStatus status = AlgorithmBStatus::Success;
    std::vector<int> t;
    std::vector<int> a;      // filled from the back; empty on BumpOverflow
    int failed_index = -1;   // 0-based j of the first failing step
    std::optional<Permutation> w;

    bool ok() const noexcept { return status == AlgorithmBStatus::Success; }
};

// From a sequence back to a permutation. Failure is a result, not an error.
AlgorithmBResult algorithm_b(const IntegerSequence& i);

// psi by its definition: DI, read Q* off the vacillating tableau, lift it to
// Q, and invert RSK on (P, Q). Requires vt_index(i) = k.
Permutation psi(const IntegerSequence& i);
IntegerSequence psi_inverse(const Permutation& w, int k);

// Algorithm B succeeds and Algorithm A's last step on t recovers i.
bool has_max_vt_index(const IntegerSequence& i);

// ASCII drawing of the n x k shading grid (row n on top).
std::string render_grid_a(const Permutation& w, int k);
std::string render_grid_b(const IntegerSequence& i);

} // namespace vtab
