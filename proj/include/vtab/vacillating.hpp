#pragma once

#include "vtab/error.hpp"
#include "vtab/partition.hpp"
#include "vtab/tableau.hpp"

#include <cstdint>
#include <vector>

namespace vtab {

// An n-vacillating tableau of length 2k. Steps are stored flat: index 2j
// holds lambda^(j) and index 2j+1 holds lambda^(j+1/2).
class VacillatingTableau {
public:
    VacillatingTableau(int n, int k, std::vector<Partition> steps);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const std::vector<Partition>& steps() const noexcept { return steps_; }

    // lambda^(j), 0 <= j <= k.
    const Partition& at(int j) const { return steps_.at(static_cast<std::size_t>(2 * j)); }
    // lambda^(j+1/2), 0 <= j < k.
    const Partition& at_half(int j) const { return steps_.at(static_cast<std::size_t>(2 * j + 1)); }
    const Partition& shape() const { return steps_.back(); }

    friend bool operator==(const VacillatingTableau&, const VacillatingTableau&) = default;
    friend auto operator<=>(const VacillatingTableau& a, const VacillatingTableau& b) { return a.steps_ <=> b.steps_; }

private:
    int n_;
    int k_;
    std::vector<Partition> steps_;
};

// Same layout; steps start at the empty partition and each half-step
// changes the diagram by at most one box.
class SimplifiedVacillatingTableau {
public:
    SimplifiedVacillatingTableau(int k, std::vector<Partition> steps);

    int k() const noexcept { return k_; }
    const std::vector<Partition>& steps() const noexcept { return steps_; }
    const Partition& at(int j) const { return steps_.at(static_cast<std::size_t>(2 * j)); }
    const Partition& at_half(int j) const { return steps_.at(static_cast<std::size_t>(2 * j + 1)); }
    const Partition& shape() const { return steps_.back(); }

    friend bool operator==(const SimplifiedVacillatingTableau&, const SimplifiedVacillatingTableau&) = default;

private:
    int k_;
    std::vector<Partition> steps_;
};

SimplifiedVacillatingTableau simplify(const VacillatingTableau& gamma);

// Restores first rows of lengths n - |mu^(j)| and n - 1 - |mu^(j+1/2)|.
// Throws Infeasible when that does not give a valid n-vacillating tableau.
VacillatingTableau unsimplify(const SimplifiedVacillatingTableau& gstar, int n);

// Every n-vacillating tableau of the given shape and length 2k, sorted.
std::vector<VacillatingTableau> enumerate_vt(int n, int k, const Partition& shape,
                                             const EnumerationLimits& limits = {});

// m_k^lambda by dynamic programming over the half-step shapes.
std::uint64_t count_vt(int n, int k, const Partition& shape);

// For shapes with lambda_1 = n - k: the SYT of shape lambda* with j in the
// box added at step j.
StandardTableau vt_to_syt_star(const VacillatingTableau& gamma);
VacillatingTableau syt_star_to_vt(const StandardTableau& qstar, int n);

} // namespace vtab
