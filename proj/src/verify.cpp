#include "vtab/verify.hpp"

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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace vtab {

SweepOptions SweepOptions::from_environment() {
    SweepOptions o;
    if (const char* env = std::getenv("TABLEAUX_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw Error(ErrorCode::InvalidArgument, std::string("TABLEAUX_BUDGET is not a number: ") + env);
        o.budget = v;
    }
    return o;
}

namespace {

struct Partial {
    std::map<Partition, std::uint64_t> shapes;
    std::uint64_t total = 0;
    std::uint64_t found = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;
    std::size_t cap = 100;

    void violate(std::string input, std::string detail) {
        ++violation_count;
        if (violations.size() < cap)
            violations.push_back({std::move(input), std::move(detail)});
    }
};

std::string describe(const IntegerSequence& i) { return "n=" + std::to_string(i.n()) + " i=" + i.to_string(); }

void require_budget(std::uint64_t instances, const SweepOptions& options) {
    if (instances > options.budget)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(instances) + " instances exceed the budget of " +
                                                   std::to_string(options.budget));
}

std::uint64_t power_capped(int n, int k) {
    std::uint64_t r = 1;
    for (int j = 0; j < k; ++j) {
        if (r > UINT64_MAX / static_cast<std::uint64_t>(n))
            return UINT64_MAX;
        r *= static_cast<std::uint64_t>(n);
    }
    return r;
}

void require_nk(int n, int k, bool need) {
    if (n < 1 || k < 0)
        throw Error(ErrorCode::InvalidArgument, "need n >= 1 and k >= 0");
    if (!need)
        throw Error(ErrorCode::Precondition,
                    "check does not apply to n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

using Body = std::function<void(const IntegerSequence&, Partial&)>;

// Visits [n]^k in lexicographic order, one chunk per first entry, and merges
// the chunks in that order.
Partial sweep(int n, int k, const SweepOptions& options, const Body& body) {
    require_budget(power_capped(n, k), options);
    const int chunks = k == 0 ? 1 : n;
    std::vector<Partial> parts(static_cast<std::size_t>(chunks));
    for (auto& p : parts)
        p.cap = options.max_recorded;

    const auto visit = [&](const IntegerSequence& i, Partial& out) {
        ++out.total;
        try {
            body(i, out);
        } catch (const std::exception& e) {
            out.violate(describe(i), std::string("exception: ") + e.what());
        }
    };
    const auto run_chunk = [&](int c) {
        Partial& out = parts[static_cast<std::size_t>(c)];
        if (k == 0) {
            visit(IntegerSequence(n, {}), out);
            return;
        }
        std::vector<int> cur(static_cast<std::size_t>(k), 1);
        cur[0] = c + 1;
        while (true) {
            visit(IntegerSequence(n, cur), out);
            int j = k - 1;
            while (j >= 1 && cur[j] == n)
                cur[j--] = 1;
            if (j < 1)
                break;
            ++cur[j];
        }
    };

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(chunks));
    if (workers <= 1) {
        for (int c = 0; c < chunks; ++c)
            run_chunk(c);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int c = next++; c < chunks; c = next++)
                    run_chunk(c);
            });
        for (auto& t : pool)
            t.join();
    }

    Partial merged;
    merged.cap = options.max_recorded;
    for (auto& p : parts) {
        for (const auto& [shape, count] : p.shapes)
            merged.shapes[shape] += count;
        merged.total += p.total;
        merged.found += p.found;
        merged.violation_count += p.violation_count;
        for (auto& v : p.violations)
            if (merged.violations.size() < merged.cap)
                merged.violations.push_back(std::move(v));
    }
    return merged;
}

SweepReport start_report(const char* check, int n, int k, Partial&& p) {
    SweepReport r;
    r.check = check;
    r.n = n;
    r.k = k;
    r.total = p.total;
    r.found = p.found;
    r.violation_count = p.violation_count;
    r.violations = std::move(p.violations);
    return r;
}

void add_violation(SweepReport& r, const SweepOptions& options, std::string input, std::string detail) {
    ++r.violation_count;
    if (r.violations.size() < options.max_recorded)
        r.violations.push_back({std::move(input), std::move(detail)});
}

// Per-shape tallies against f^lambda * m(lambda); shapes with nothing
// expected and nothing observed are left out.
void tally_shapes(SweepReport& r, const SweepOptions& options, const std::map<Partition, std::uint64_t>& observed,
                  const std::function<std::uint64_t(const Partition&)>& m) {
    const std::string where = "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k);
    for (const auto& shape : partitions_of(r.n)) {
        ShapeTally t;
        t.shape = shape;
        auto it = observed.find(shape);
        t.observed = it == observed.end() ? 0 : it->second;
        t.f_lambda = count_syt(shape);
        t.m_k_lambda = m(shape);
        if (t.observed == 0 && t.expected() == 0)
            continue;
        if (t.observed != t.expected())
            add_violation(r, options, where + " shape=" + shape.to_string(),
                          "observed " + std::to_string(t.observed) + ", expected " + std::to_string(t.expected()));
        r.per_shape.push_back(std::move(t));
    }
}

void expect_count(SweepReport& r, const SweepOptions& options, const std::string& what, std::uint64_t expected) {
    if (r.found != expected)
        add_violation(r, options, "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k),
                      what + ": found " + std::to_string(r.found) + ", expected " + std::to_string(expected));
}

void expect(Partial& out, const IntegerSequence& i, bool ok, const std::string& detail) {
    if (!ok)
        out.violate(describe(i), detail);
}

std::uint64_t vt_count(int n, int k, const Partition& shape) { return count_vt(n, k, shape); }

SweepReport check_one_row(int n, int k, const SweepOptions& options) {
    require_nk(n, k, true);
    const Partition row({n});
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        const bool predicted = is_one_row(i);
        const bool actual = vt_shape(i) == row;
        expect(out, i, predicted == actual, "one-row test " + std::to_string(predicted) + " but shape test " +
                                                std::to_string(actual));
        if (predicted) {
            ++out.found;
            out.shapes[row] += 1;
            expect(out, i, set_partition_to_one_row(one_row_to_set_partition(i), n) == i,
                   "set partition round trip failed");
        }
    });
    auto r = start_report("one-row", n, k, std::move(p));
    expect_count(r, options, "set partitions of [k] with at most n blocks", bounded_bell(k, n));
    return r;
}

SweepReport check_hook(int n, int k, const SweepOptions& options) {
    require_nk(n, k, n >= k + 1);
    const auto hook = hook_shape(n, k);
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        const bool predicted = is_hook_sequence(i);
        const bool actual = vt_shape(i) == hook;
        expect(out, i, predicted == actual, "hook test " + std::to_string(predicted) + " but shape test " +
                                                std::to_string(actual));
        if (predicted)
            ++out.found;
    });
    auto r = start_report("hook", n, k, std::move(p));
    expect_count(r, options, "C(n-1,k)", binomial(n - 1, k));
    return r;
}

SweepReport check_two_row(int n, int k, const SweepOptions& options) {
    require_nk(n, k, n >= 2 * k);
    const auto shape = two_row_shape(n, k);
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        std::optional<TwoRowDecomposition> d;
        try {
            d = two_row_decompose(i);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Precondition)
                throw;
        }
        const auto image = di_forward(i);
        const bool actual = image.p.shape() == shape;
        expect(out, i, d.has_value() == actual, "decomposition " + std::to_string(d.has_value()) +
                                                    " but shape test " + std::to_string(actual));
        if (d && actual) {
            ++out.found;
            const auto& rows = image.p.rows();
            const std::vector<int> second = rows.size() > 1 ? rows[1] : std::vector<int>{};
            expect(out, i, second == d->b, "second row of P differs from b");
            expect(out, i, two_row_from_syt(image.p) == i, "segment rule does not recover i from P");
        }
    });
    auto r = start_report("two-row", n, k, std::move(p));
    expect_count(r, options, "f^(n-k,k)", count_syt(shape));
    return r;
}

SweepReport check_max_index(int n, int k, const SweepOptions& options) {
    require_nk(n, k, n >= k + 1);
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        const bool predicted = has_max_vt_index(i);
        const bool actual = vt_index(i) == k;
        expect(out, i, predicted == actual, "max-index test " + std::to_string(predicted) + " but VT-index test " +
                                                std::to_string(actual));
        if (predicted)
            ++out.found;
    });
    auto r = start_report("max-index", n, k, std::move(p));
    expect_count(r, options, "|R_k^n|", enumerate_rnk(n, k).size());
    return r;
}

SweepReport check_psi(int n, int k, const SweepOptions& options) {
    require_nk(n, k, n >= k + 1);
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        if (vt_index(i) != k)
            return;
        ++out.found;
        const auto w = psi(i);
        expect(out, i, is_in_rnk(w, k), "psi(i) = " + w.to_string() + " is not in R_k^n");
        const auto b = algorithm_b(i);
        expect(out, i, b.ok() && b.w == w, "Algorithm B disagrees with psi");
        expect(out, i, algorithm_a(w, k).i == i, "Algorithm A does not recover i");
        expect(out, i, psi_inverse(w, k) == i, "psi_inverse does not recover i");
        const auto shape = rsk(w).p.shape();
        expect(out, i, shape == vt_shape(i), "RSK shape of psi(i) differs from the VT-shape");
        out.shapes[shape] += 1;
    });
    auto r = start_report("psi", n, k, std::move(p));
    tally_shapes(r, options, p.shapes, [&](const Partition& s) -> std::uint64_t {
        if (s.first() != n - k)
            return 0;
        const auto m = count_syt(s.star());
        if (m != count_vt(n, k, s))
            add_violation(r, options, "shape=" + s.to_string(), "m_k differs from f of the shape below row one");
        return m;
    });
    expect_count(r, options, "|R_k^n|", enumerate_rnk(n, k).size());
    return r;
}

std::vector<int> suffix_of(const Permutation& w, int k) {
    return std::vector<int>(w.word().end() - k, w.word().end());
}

SweepReport check_bumping(int n, int k, const SweepOptions& options) {
    require_nk(n, k, n >= k + 1);
    std::set<std::vector<int>> bumps;
    for (const auto& w : enumerate_rnk(n, k))
        bumps.insert(bumps_from_suffix(suffix_of(w, k)));
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        if (i.has_repeats())
            return;
        const auto& t = i.as_vector();
        const bool predicted = bumping_criterion(t, n);
        const bool actual = bumps.count(t) > 0;
        expect(out, i, predicted == actual, "criterion " + std::to_string(predicted) + " but brute force " +
                                                std::to_string(actual));
        expect(out, i, predicted == suffix_criterion(reverse_complement(t, n), n),
               "criterion differs from the suffix criterion on the reverse complement");
        if (predicted)
            ++out.found;
    });
    auto r = start_report("bumping", n, k, std::move(p));
    expect_count(r, options, "distinct bumping sequences", bumps.size());
    return r;
}

SweepReport check_suffix(int n, int k, const SweepOptions& options) {
    require_nk(n, k, n >= k + 1);
    std::set<std::vector<int>> suffixes;
    for (const auto& w : enumerate_rnk(n, k))
        suffixes.insert(suffix_of(w, k));
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        if (i.has_repeats())
            return;
        const auto& a = i.as_vector();
        const bool predicted = suffix_criterion(a, n);
        const bool actual = suffixes.count(a) > 0;
        expect(out, i, predicted == actual, "criterion " + std::to_string(predicted) + " but brute force " +
                                                std::to_string(actual));
        if (predicted)
            ++out.found;
    });
    auto r = start_report("suffix", n, k, std::move(p));
    expect_count(r, options, "distinct suffixes", suffixes.size());
    return r;
}

SweepReport check_cossz(int n, int k, const SweepOptions& options) {
    require_nk(n, k, true);
    const bool max_applies = n >= k + 1;
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        const auto image = cossz_forward(i);
        expect(out, i, cossz_inverse(image.s, image.t) == i, "inverse does not recover i");
        out.shapes[image.s.shape()] += 1;
        if (max_applies) {
            const bool predicted = cossz_maxshape(i);
            const bool actual = !i.has_repeats() && suffix_criterion(i.as_vector(), n);
            expect(out, i, predicted == actual, "first-row test " + std::to_string(predicted) +
                                                    " but suffix criterion " + std::to_string(actual));
            if (predicted)
                ++out.found;
        }
    });
    auto r = start_report("cossz", n, k, std::move(p));
    tally_shapes(r, options, p.shapes, [&](const Partition& s) { return vt_count(n, k, s); });
    if (max_applies) {
        std::set<std::vector<int>> suffixes;
        for (const auto& w : enumerate_rnk(n, k))
            suffixes.insert(suffix_of(w, k));
        expect_count(r, options, "distinct suffixes", suffixes.size());
    }
    return r;
}

SweepReport check_di_round_trip(int n, int k, const SweepOptions& options) {
    require_nk(n, k, true);
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        const auto image = di_forward(i);
        expect(out, i, di_inverse(image.p, image.gamma) == i, "di_inverse does not recover i");
        out.shapes[image.p.shape()] += 1;
    });
    auto r = start_report("di-round-trip", n, k, std::move(p));
    tally_shapes(r, options, p.shapes, [&](const Partition& s) { return vt_count(n, k, s); });
    return r;
}

SweepReport check_repark(int n, int k, const SweepOptions& options) {
    require_nk(n, k, k <= n);
    const bool criteria_apply = n >= k + 1;
    auto p = sweep(n, k, options, [&](const IntegerSequence& i, Partial& out) {
        if (i.has_repeats())
            return;
        const ReparkingInstance inst(n, i.as_vector());
        const auto right = repark(inst, Direction::Right);
        const auto left = repark(inst, Direction::Left);
        expect(out, i, right.success == right.predicted, "right: simulation " + std::to_string(right.success) +
                                                             " but prediction " + std::to_string(right.predicted));
        expect(out, i, left.success == left.predicted, "left: simulation " + std::to_string(left.success) +
                                                           " but prediction " + std::to_string(left.predicted));
        if (criteria_apply) {
            expect(out, i, right.success == suffix_criterion(i.as_vector(), n),
                   "right reparking differs from the suffix criterion");
            expect(out, i, left.success == bumping_criterion(i.as_vector(), n),
                   "left reparking differs from the bumping criterion");
        }
        if (right.success)
            ++out.found;
    });
    return start_report("repark", n, k, std::move(p));
}

SweepReport check_rsk(int n, int k, const SweepOptions& options) {
    require_nk(n, k, true);
    std::uint64_t fact = 1;
    for (int j = 2; j <= n; ++j)
        fact = fact > options.budget ? fact : fact * static_cast<std::uint64_t>(j);
    require_budget(fact, options);
    Partial out;
    out.cap = options.max_recorded;
    for (const auto& w : all_permutations(n)) {
        ++out.total;
        const std::string where = "w=" + w.to_string();
        try {
            const auto [p, q] = rsk(w);
            if (inverse_rsk(p, q) != w)
                out.violate(where, "inverse RSK does not recover w");
            if (p.shape().first() != longest_increasing(w.word()))
                out.violate(where, "first row differs from the longest increasing subsequence");
            out.shapes[p.shape()] += 1;
        } catch (const std::exception& e) {
            out.violate(where, std::string("exception: ") + e.what());
        }
    }
    out.found = out.total;
    auto shapes = out.shapes;
    auto r = start_report("rsk", n, k, std::move(out));
    tally_shapes(r, options, shapes, [](const Partition& s) { return count_syt(s); });
    return r;
}

constexpr std::pair<Check, const char*> kCheckNames[] = {
    {Check::OneRow, "one-row"},
    {Check::Hook, "hook"},
    {Check::TwoRow, "two-row"},
    {Check::Psi, "psi"},
    {Check::MaxIndex, "max-index"},
    {Check::Bumping, "bumping"},
    {Check::Suffix, "suffix"},
    {Check::Cossz, "cossz"},
    {Check::DiRoundTrip, "di-round-trip"},
    {Check::Repark, "repark"},
    {Check::Rsk, "rsk"},
};

} // namespace

SweepReport verify_identity(int n, int k, const SweepOptions& options) {
    require_nk(n, k, true);
    auto p = sweep(n, k, options, [](const IntegerSequence& i, Partial& out) { out.shapes[vt_shape(i)] += 1; });
    auto shapes = p.shapes;
    auto r = start_report("identity", n, k, std::move(p));
    r.found = r.total;
    tally_shapes(r, options, shapes, [&](const Partition& s) { return vt_count(n, k, s); });
    std::uint64_t sum = 0;
    for (const auto& t : r.per_shape)
        sum += t.expected();
    const auto nk = power_capped(n, k);
    if (r.total != nk || sum != nk)
        add_violation(r, options, "n=" + std::to_string(n) + " k=" + std::to_string(k),
                      "n^k = " + std::to_string(nk) + ", visited " + std::to_string(r.total) +
                          ", sum of f*m = " + std::to_string(sum));
    return r;
}

std::optional<Check> parse_check(std::string_view name) {
    for (const auto& [c, s] : kCheckNames)
        if (name == s)
            return c;
    return std::nullopt;
}

const char* to_string(Check check) noexcept {
    for (const auto& [c, s] : kCheckNames)
        if (c == check)
            return s;
    return "unknown";
}

std::vector<Check> all_checks() {
    std::vector<Check> out;
    for (const auto& [c, s] : kCheckNames)
        out.push_back(c);
    return out;
}

SweepReport verify_theorem(Check check, int n, int k, const SweepOptions& options) {
    switch (check) {
    case Check::OneRow: return check_one_row(n, k, options);
    case Check::Hook: return check_hook(n, k, options);
    case Check::TwoRow: return check_two_row(n, k, options);
    case Check::Psi: return check_psi(n, k, options);
    case Check::MaxIndex: return check_max_index(n, k, options);
    case Check::Bumping: return check_bumping(n, k, options);
    case Check::Suffix: return check_suffix(n, k, options);
    case Check::Cossz: return check_cossz(n, k, options);
    case Check::DiRoundTrip: return check_di_round_trip(n, k, options);
    case Check::Repark: return check_repark(n, k, options);
    case Check::Rsk: return check_rsk(n, k, options);
    }
    throw Error(ErrorCode::UnknownName, "check");
}

Json to_json(const SweepReport& report) {
    Json shapes = Json::array();
    for (const auto& t : report.per_shape)
        shapes.push_back({{"shape", to_json(t.shape)},
                          {"observed", t.observed},
                          {"f_lambda", t.f_lambda},
                          {"m_k_lambda", t.m_k_lambda},
                          {"expected", t.expected()}});
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"input", v.input}, {"detail", v.detail}});
    return Json{{"schema", SweepReport::schema},
                {"check", report.check},
                {"n", report.n},
                {"k", report.k},
                {"total", report.total},
                {"found", report.found},
                {"per_shape", shapes},
                {"violation_count", report.violation_count},
                {"violations", violations},
                {"ok", report.ok()}};
}

} // namespace vtab
