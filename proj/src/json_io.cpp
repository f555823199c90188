#include "vtab/json_io.hpp"

#include "vtab/error.hpp"

#include <sstream>

namespace vtab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array())
        bad(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            bad(std::string(what) + " must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

const Json& rows_field(const Json& j) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("rows"))
            bad("tableau object needs a \"rows\" field");
        rows = &j.at("rows");
    }
    if (!rows->is_array())
        bad("tableau rows must be an array");
    return *rows;
}

} // namespace

Json to_json(const Partition& p) { return p.as_vector(); }

Json to_json(const PartialTableau& t) { return Json{{"rows", t.rows()}}; }

Json to_json(const StandardTableau& t) { return to_json(t.tableau()); }

Json to_json(const SetPartition& p) { return p.blocks(); }

Json to_json(const VacillatingTableau& gamma) {
    Json steps = Json::array();
    for (const auto& s : gamma.steps())
        steps.push_back(to_json(s));
    return Json{{"n", gamma.n()}, {"k", gamma.k()}, {"steps", steps}};
}

Json to_json(const MultisetTableau& t) { return Json{{"rows", t.rows()}}; }

Json to_json(const IntegerSequence& i) { return i.as_vector(); }

Json to_json(const Permutation& w) { return w.as_vector(); }

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

PartialTableau partial_tableau_from_json(const Json& j) {
    Rows rows;
    for (const auto& r : rows_field(j))
        rows.push_back(int_array(r, "tableau row"));
    return PartialTableau(std::move(rows));
}

StandardTableau standard_tableau_from_json(const Json& j) { return StandardTableau(partial_tableau_from_json(j)); }

SetPartition set_partition_from_json(const Json& j, int k) {
    if (!j.is_array())
        bad("set partition must be an array of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j)
        blocks.push_back(int_array(b, "block"));
    return SetPartition(k, std::move(blocks));
}

VacillatingTableau vacillating_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("steps"))
        bad("vacillating tableau needs \"n\" and \"steps\"");
    if (!j.at("n").is_number_integer() || !j.at("steps").is_array())
        bad("vacillating tableau fields have the wrong type");
    std::vector<Partition> steps;
    for (const auto& s : j.at("steps"))
        steps.push_back(partition_from_json(s));
    const int k = static_cast<int>(steps.size() / 2);
    if (j.contains("k") && (!j.at("k").is_number_integer() || j.at("k").get<int>() != k))
        bad("\"k\" does not match the number of steps");
    return VacillatingTableau(j.at("n").get<int>(), k, std::move(steps));
}

MultisetTableau multiset_tableau_from_json(const Json& j) {
    std::vector<std::vector<MultisetCell>> rows;
    for (const auto& r : rows_field(j)) {
        if (!r.is_array())
            bad("multiset tableau row must be an array of cells");
        auto& row = rows.emplace_back();
        for (const auto& cell : r)
            row.push_back(int_array(cell, "multiset cell"));
    }
    return MultisetTableau(std::move(rows));
}

std::vector<int> parse_int_list(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            bad(std::string("cannot parse integer list: ") + e.what());
        }
        return int_array(j, "integer list");
    }
    std::string s = text;
    for (char& c : s)
        if (c == ',')
            c = ' ';
    std::istringstream in(s);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            bad("not an integer: " + tok);
        }
        if (used != tok.size())
            bad("not an integer: " + tok);
        out.push_back(v);
    }
    return out;
}

} // namespace vtab
