// Acceptance gate: one PASS/FAIL line per criterion, exact integer equality
// throughout. Exit status is nonzero if any criterion fails.

#include "vtab/bumping.hpp"
#include "vtab/cossz.hpp"
#include "vtab/counting.hpp"
#include "vtab/di_map.hpp"
#include "vtab/error.hpp"
#include "vtab/max_index.hpp"
#include "vtab/rsk.hpp"
#include "vtab/shapes.hpp"
#include "vtab/tableau.hpp"
#include "vtab/vacillating.hpp"
#include "vtab/verify.hpp"

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace vtab;

namespace {

// Collects failure messages for one criterion.
struct Gate {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok)
            failures.push_back(what);
    }
};

std::vector<Partition> parts(std::initializer_list<std::vector<int>> ps) {
    std::vector<Partition> out;
    for (const auto& p : ps)
        out.emplace_back(p);
    return out;
}

void identity(Gate& g) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 4; ++k) {
            const auto r = verify_identity(n, k);
            std::uint64_t nk = 1;
            for (int j = 0; j < k; ++j)
                nk *= static_cast<std::uint64_t>(n);
            g.expect(r.ok() && r.total == nk, "identity n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
}

void worked_examples(Gate& g) {
    {
        const auto image = di_forward(IntegerSequence(6, {3, 2, 5}));
        g.expect(image.p.rows() == Rows{{1, 2, 5}, {3, 6}, {4}}, "delete-insert P for (3,2,5)");
        g.expect(image.gamma.steps() == parts({{6}, {5}, {5, 1}, {4, 1}, {4, 1, 1}, {3, 1, 1}, {3, 2, 1}}),
                 "delete-insert Gamma for (3,2,5)");
    }
    {
        const IntegerSequence i(8, {3, 2, 6, 2});
        const auto image = di_forward(i);
        const auto qstar = vt_to_syt_star(image.gamma);
        const auto q = prepend_first_row(qstar, 4);
        g.expect(image.p.rows() == Rows{{1, 2, 6, 8}, {3, 5}, {4, 7}}, "psi example P");
        g.expect(image.gamma.steps() ==
                     parts({{8}, {7}, {7, 1}, {6, 1}, {6, 1, 1}, {5, 1, 1}, {5, 2, 1}, {4, 2, 1}, {4, 2, 2}}),
                 "psi example Gamma");
        g.expect(qstar.rows() == Rows{{1, 3}, {2, 4}}, "psi example Q*");
        g.expect(q.rows() == Rows{{1, 2, 3, 4}, {5, 7}, {6, 8}}, "psi example Q");
        g.expect(psi(i) == Permutation({4, 5, 7, 8, 3, 1, 6, 2}), "psi((3,2,6,2)) = 45783162");
        const auto a = algorithm_a(Permutation({4, 5, 7, 8, 3, 1, 6, 2}), 4);
        g.expect(a.t == std::vector<int>{4, 3, 7, 5} && a.i == i, "Algorithm A on 45783162");
    }
    {
        const auto over = algorithm_b(IntegerSequence(4, {4, 4}));
        g.expect(over.status == AlgorithmBStatus::BumpOverflow && over.t == std::vector<int>{5, 6},
                 "Algorithm B on (4,4) overflows with t=(5,6)");
        const auto under = algorithm_b(IntegerSequence(4, {1, 1}));
        g.expect(under.status == AlgorithmBStatus::SlotUnderflow && under.t == std::vector<int>{2, 3} &&
                     under.a == std::vector<int>{0, 1},
                 "Algorithm B on (1,1) gives t=(2,3), a2=1, a1=0");
        const auto pass = algorithm_b(IntegerSequence(4, {1, 2}));
        g.expect(pass.ok() && pass.t == std::vector<int>{3, 4} && *pass.w == Permutation({3, 4, 1, 2}) &&
                     vt_index(IntegerSequence(4, {1, 2})) == 1 &&
                     psi_inverse(Permutation({3, 4, 1, 2}), 2) == IntegerSequence(4, {2, 2}) &&
                     !has_max_vt_index(IntegerSequence(4, {1, 2})),
                 "Algorithm B on (1,2) passes without VT-index 2");
    }
    {
        const StandardTableau p(Rows{{1, 2, 4, 7, 8, 9, 11, 15}, {3, 5, 6, 10, 12, 13, 14}});
        const IntegerSequence i(15, {2, 4, 4, 9, 11, 11, 11});
        g.expect(two_row_from_syt(p) == i, "second row segments give i");
        g.expect(di_forward(i).p == p, "delete-insert of i gives P");
        const auto d = two_row_decompose(i);
        g.expect(d.v == std::vector<int>{2, 3, 3, 6, 7, 7, 7}, "lattice path v");
        g.expect(d.eps == std::vector<int>{0, 1, 1, 3, 4, 4, 4}, "lattice path epsilon");
        g.expect(d.b == std::vector<int>{3, 5, 6, 10, 12, 13, 14}, "second row from v");
    }
    {
        const ReparkingInstance inst(11, {3, 2, 5, 8, 9});
        const auto right = repark(inst, Direction::Right);
        const auto left = repark(inst, Direction::Left);
        g.expect(right.success && right.positions == std::vector<int>{4, 3, 6, 10, 11}, "reparking right");
        g.expect(left.success && left.positions == std::vector<int>{2, 1, 4, 6, 7}, "reparking left");
    }
    {
        using Cells = std::vector<std::vector<MultisetCell>>;
        const auto a = cossz_forward(IntegerSequence(6, {3, 2, 6, 2}));
        g.expect(a.s.rows() == Rows{{1, 2, 5, 6}, {3}, {4}}, "COSSZ first example S");
        g.expect(a.t.rows() == Cells{{{}, {}, {}, {3}}, {{1}}, {{2, 4}}}, "COSSZ first example T");
        const auto b = cossz_forward(IntegerSequence(8, {3, 1, 6, 2}));
        g.expect(b.s.rows() == Rows{{1, 2, 6, 8}, {3, 5}, {4, 7}}, "COSSZ second example S");
        g.expect(b.t.rows() == Cells{{{}, {}, {}, {}}, {{1}, {3}}, {{2}, {4}}}, "COSSZ second example T");
        g.expect(cossz_maxshape(IntegerSequence(8, {3, 1, 6, 2})) &&
                     !cossz_maxshape(IntegerSequence(6, {3, 2, 6, 2})),
                 "COSSZ first-row test on both examples");
    }
}

void round_trips(Gate& g) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 4; ++k) {
            const auto di = verify_theorem(Check::DiRoundTrip, n, k);
            g.expect(di.ok(), "delete-insert round trip n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (k < n)
                g.expect(verify_theorem(Check::Psi, n, k).ok(),
                         "psi round trip n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (n <= 5)
                g.expect(verify_theorem(Check::Cossz, n, k).ok(),
                         "COSSZ round trip n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    const auto r = verify_theorem(Check::Rsk, 6, 0);
    g.expect(r.ok() && r.total == 720, "RSK round trip on S_6");
}

void characterizations(Gate& g) {
    const std::pair<Check, std::function<bool(int, int)>> checks[] = {
        {Check::OneRow, [](int, int) { return true; }},
        {Check::Hook, [](int n, int k) { return n >= k + 1; }},
        {Check::TwoRow, [](int n, int k) { return n >= 2 * k; }},
        {Check::MaxIndex, [](int n, int k) { return n >= k + 1; }},
        {Check::Bumping, [](int n, int k) { return n >= k + 1; }},
        {Check::Suffix, [](int n, int k) { return n >= k + 1; }},
        {Check::Cossz, [](int n, int k) { return n >= k + 1; }},
    };
    for (const auto& [check, applies] : checks)
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= 4; ++k)
                if (applies(n, k))
                    g.expect(verify_theorem(check, n, k).ok(), std::string(to_string(check)) + " n=" +
                                                                   std::to_string(n) + " k=" + std::to_string(k));
}

void counting(Gate& g) {
    {
        std::set<Permutation> r24;
        for (const auto& w : enumerate_rnk(4, 2))
            r24.insert(w);
        const std::set<Permutation> expected{Permutation({1, 4, 3, 2}), Permutation({2, 4, 1, 3}),
                                             Permutation({2, 4, 3, 1}), Permutation({3, 4, 1, 2}),
                                             Permutation({3, 4, 2, 1})};
        g.expect(r24 == expected, "R_2^4 = {1432, 2413, 2431, 3412, 3421}");
        std::set<IntegerSequence> square, hook;
        for_each_sequence(4, 2, [&](const IntegerSequence& i) {
            if (vt_shape(i) == Partition({2, 2}))
                square.insert(i);
            if (vt_shape(i) == Partition({2, 1, 1}))
                hook.insert(i);
        });
        g.expect(square == std::set<IntegerSequence>{IntegerSequence(4, {2, 2}), IntegerSequence(4, {1, 3})},
                 "sequences of shape (2,2)");
        g.expect(hook == std::set<IntegerSequence>{IntegerSequence(4, {3, 2}), IntegerSequence(4, {3, 1}),
                                                   IntegerSequence(4, {2, 1})},
                 "sequences of shape (2,1,1)");
    }
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 4; ++k) {
            std::uint64_t row = 0, hook = 0;
            for_each_sequence(n, k, [&](const IntegerSequence& i) {
                const auto s = vt_shape(i);
                row += s == Partition({n});
                if (n >= k + 1)
                    hook += s == hook_shape(n, k);
            });
            std::uint64_t stirling_sum = 0;
            for (int i = 0; i <= n; ++i)
                stirling_sum += stirling2(k, i);
            const auto tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            g.expect(row == stirling_sum, "one-row count" + tag);
            if (n >= k + 1)
                g.expect(hook == binomial(n - 1, k), "hook count" + tag);
        }
    for (int n = 2; n <= 10; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const auto shape = two_row_shape(n, k);
            std::uint64_t found = 0;
            for_each_sequence(n, k, [&](const IntegerSequence& i) { found += vt_shape(i) == shape; });
            g.expect(found == count_syt(shape), "two-row count n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (n == 2 * k)
                g.expect(count_syt(shape) == catalan(k), "square shape is Catalan m=" + std::to_string(k));
        }
    for (int n = 2; n <= 6; ++n)
        for (const auto& shape : partitions_of(n)) {
            const int k = n - shape.first();
            if (k >= n)
                continue;
            g.expect(rk_of_shape(n, k, shape).size() == count_syt(shape) * count_syt(shape.star()),
                     "|R_k(" + shape.to_string() + ")|");
        }
}

void reparking(Gate& g) {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= 4 && k <= n; ++k)
            g.expect(verify_theorem(Check::Repark, n, k).ok(),
                     "reparking n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void two_row_formula(Gate& g) {
    std::printf("note: two-row shape counts, n <= 10\n");
    std::printf("note:  n  k  exhaustive  f^(n-k,k)  (n-2k+1)/(n-k+1)C(n,k)  (n-2k-1)/(n-k+1)C(n,k)\n");
    int printed_mismatches = 0;
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const auto shape = two_row_shape(n, k);
            std::uint64_t found = 0;
            for_each_sequence(n, k, [&](const IntegerSequence& i) { found += vt_shape(i) == shape; });
            const auto f = count_syt(shape);
            const auto ballot_form = ballot_fraction(n, k);
            const auto shifted = ballot_fraction(n, k, -2);
            const bool shifted_agrees = shifted.is_integer() && shifted.num == static_cast<std::int64_t>(f);
            printed_mismatches += !shifted_agrees;
            std::printf("note: %2d %2d %11llu %10llu %24s %24s\n", n, k, static_cast<unsigned long long>(found),
                        static_cast<unsigned long long>(f),
                        (std::to_string(ballot_form.num) + (ballot_form.is_integer() ? "" : "/" + std::to_string(ballot_form.den))).c_str(),
                        (std::to_string(shifted.num) + (shifted.is_integer() ? "" : "/" + std::to_string(shifted.den))).c_str());
            g.expect(found == f, "exhaustive two-row count n=" + std::to_string(n) + " k=" + std::to_string(k));
            g.expect(ballot_form.is_integer() && ballot_form.num == static_cast<std::int64_t>(f),
                     "ballot form n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    std::printf("note: the (n-2k-1) form disagrees with f^(n-k,k) in %d of the cases above; "
                "f^(n-k,k) = (n-2k+1)/(n-k+1) C(n,k) is used as the count\n",
                printed_mismatches);
}

} // namespace

int main() {
    const std::pair<const char*, void (*)(Gate&)> criteria[] = {
        {"sum over shapes of f^lambda m_k^lambda equals n^k, n <= 6, k <= 4", identity},
        {"worked examples reproduced exactly", worked_examples},
        {"round trips: delete-insert, psi, RSK on S_6, COSSZ", round_trips},
        {"shape and criterion characterizations agree with brute force, n <= 6", characterizations},
        {"counting identities and the n=4, k=2 sets", counting},
        {"reparking simulation agrees with its prediction, n <= 9, k <= 4", reparking},
        {"two-row count is f^(n-k,k); note on the fraction forms, n <= 10", two_row_formula},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Gate g;
        try {
            run(g);
        } catch (const std::exception& e) {
            g.failures.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %d: %s\n", g.failures.empty() ? "PASS" : "FAIL", index, name);
        for (std::size_t j = 0; j < g.failures.size() && j < 10; ++j)
            std::printf("    %s\n", g.failures[j].c_str());
        failed += !g.failures.empty();
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
