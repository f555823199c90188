#pragma once

#include "vtab/partition.hpp"
#include "vtab/sequence.hpp"
#include "vtab/tableau.hpp"
#include "vtab/vacillating.hpp"

#include <optional>
#include <vector>

namespace vtab {

// Image of a sequence under the delete-insert map, with its full trace.
struct DiImage {
    StandardTableau p;
    VacillatingTableau gamma;
    // T^(0), T^(1/2), T^(1), ..., T^(k): 2k+1 tableaux.
    std::vector<PartialTableau> trace;
    // Entry pushed out of the first row by the j-th insertion, if any.
    std::vector<std::optional<int>> first_row_bumps;
};

// Starting from the row 1..n, alternately jdt-delete i_j and row-insert it.
DiImage di_forward(const IntegerSequence& i);

// Runs the rounds backwards: undo the insertion at the box gamma removes,
// then undo the deletion at the box gamma re-adds.
IntegerSequence di_inverse(const StandardTableau& p, const VacillatingTableau& gamma);

// Final shape of di_forward(i) and the number of its boxes below row one.
Partition vt_shape(const IntegerSequence& i);
int vt_index(const IntegerSequence& i);

} // namespace vtab
