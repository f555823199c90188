#pragma once

#include "vtab/cossz.hpp"
#include "vtab/partition.hpp"
#include "vtab/sequence.hpp"
#include "vtab/tableau.hpp"
#include "vtab/vacillating.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace vtab {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Json to_json(const PartialTableau& t);
Json to_json(const StandardTableau& t);
Json to_json(const SetPartition& p);
Json to_json(const VacillatingTableau& gamma);
Json to_json(const MultisetTableau& t);
Json to_json(const IntegerSequence& i);
Json to_json(const Permutation& w);

// Decoders throw Error(InvalidArgument) on malformed input and pass on the
// validation errors of the target type.
Partition partition_from_json(const Json& j);
PartialTableau partial_tableau_from_json(const Json& j);
StandardTableau standard_tableau_from_json(const Json& j);
SetPartition set_partition_from_json(const Json& j, int k);
VacillatingTableau vacillating_from_json(const Json& j);
MultisetTableau multiset_tableau_from_json(const Json& j);

// "3 2 5", "3,2,5" or "[3,2,5]".
std::vector<int> parse_int_list(const std::string& text);

} // namespace vtab
