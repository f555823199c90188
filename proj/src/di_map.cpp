#include "vtab/di_map.hpp"

#include "vtab/rsk.hpp"

namespace vtab {

namespace {

// The shape-only part of the forward map, without building the trace.
Rows run_rounds(const IntegerSequence& i, std::vector<Partition>* shapes, std::vector<Rows>* trace,
                std::vector<std::optional<int>>* bumps) {
    Rows rows = PartialTableau::row_of(i.n()).rows();
    auto record = [&](const Rows& r) {
        if (shapes) {
            std::vector<int> parts;
            for (const auto& row : r)
                parts.push_back(static_cast<int>(row.size()));
            shapes->emplace_back(std::move(parts));
        }
        if (trace)
            trace->push_back(r);
    };
    record(rows);
    for (int x : i.entries()) {
        Cell at{};
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), x);
            if (it != rows[r].end() && *it == x) {
                at = Cell{static_cast<int>(r), static_cast<int>(it - rows[r].begin())};
                break;
            }
        }
        detail::jdt_delete_raw(rows, at);
        record(rows);
        std::optional<int> bump;
        detail::insert_raw(rows, x, &bump);
        record(rows);
        if (bumps)
            bumps->push_back(bump);
    }
    return rows;
}

} // namespace

DiImage di_forward(const IntegerSequence& i) {
    std::vector<Partition> shapes;
    std::vector<Rows> trace;
    std::vector<std::optional<int>> bumps;
    Rows last = run_rounds(i, &shapes, &trace, &bumps);
    std::vector<PartialTableau> tableaux;
    tableaux.reserve(trace.size());
    for (auto& r : trace)
        tableaux.emplace_back(std::move(r));
    return DiImage{StandardTableau(PartialTableau(std::move(last))), VacillatingTableau(i.n(), i.k(), std::move(shapes)),
                   std::move(tableaux), std::move(bumps)};
}

IntegerSequence di_inverse(const StandardTableau& p, const VacillatingTableau& gamma) {
    const int n = gamma.n();
    const int k = gamma.k();
    if (p.shape() != gamma.shape())
        throw Error(ErrorCode::ShapeMismatch, "P has shape " + p.shape().to_string() + " but the vacillating tableau ends at " +
                                                  gamma.shape().to_string());
    if (p.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "P must be a standard tableau on [n]");

    Rows rows = p.rows();
    std::vector<int> entries(static_cast<std::size_t>(k));
    for (int j = k; j >= 1; --j) {
        const int removed_row = differing_row(gamma.at(j), gamma.at_half(j - 1));
        const int added_row = differing_row(gamma.at(j - 1), gamma.at_half(j - 1));
        if (removed_row < 0 || added_row < 0)
            throw Error(ErrorCode::InvalidArgument, "inconsistent vacillating tableau");
        const int x = detail::reverse_insert_raw(rows, removed_row);
        detail::reverse_jdt_raw(rows, x, added_row);
        entries[static_cast<std::size_t>(j - 1)] = x;
    }
    IntegerSequence out(n, std::move(entries));
    // Reverse steps always produce some sequence; confirm it maps back.
    auto image = di_forward(out);
    if (image.p != p || image.gamma != gamma)
        throw Error(ErrorCode::InvalidArgument, "no sequence maps to this pair");
    return out;
}

Partition vt_shape(const IntegerSequence& i) {
    Rows last = run_rounds(i, nullptr, nullptr, nullptr);
    std::vector<int> parts;
    for (const auto& row : last)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int vt_index(const IntegerSequence& i) { return vt_shape(i).star().size(); }

} // namespace vtab
