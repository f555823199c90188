#include "vtab/max_index.hpp"

#include "vtab/di_map.hpp"
#include "vtab/error.hpp"
#include "vtab/rsk.hpp"
#include "vtab/tableau.hpp"
#include "vtab/vacillating.hpp"

#include <algorithm>
#include <sstream>

namespace vtab {

namespace {

bool excluded(int x, const std::vector<int>& v, std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j)
        if (v[j] == x)
            return true;
    return false;
}

void require_permutation_split(const Permutation& w, int k) {
    if (k < 0 || w.size() < k + 1)
        throw Error(ErrorCode::Precondition, "need n >= k+1");
}

} // namespace

bool is_in_rnk(const Permutation& w, int k) {
    require_permutation_split(w, k);
    const int n = w.size();
    for (int j = 1; j < n - k; ++j)
        if (w[j] < w[j - 1])
            return false;
    return longest_increasing(w.word()) == n - k;
}

std::vector<Permutation> enumerate_rnk(int n, int k) {
    if (k < 0 || n < k + 1)
        throw Error(ErrorCode::Precondition, "need n >= k+1");
    // Choose the last k letters as an arrangement; the prefix is forced.
    std::vector<Permutation> out;
    std::vector<int> suffix;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    const auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(suffix.size()) == k) {
            std::vector<int> word;
            for (int x = 1; x <= n; ++x)
                if (!used[x])
                    word.push_back(x);
            word.insert(word.end(), suffix.begin(), suffix.end());
            Permutation w(std::move(word));
            if (longest_increasing(w.word()) == n - k)
                out.push_back(std::move(w));
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[x])
                continue;
            used[x] = 1;
            suffix.push_back(x);
            self(self);
            suffix.pop_back();
            used[x] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> rk_of_shape(int n, int k, const Partition& shape) {
    std::vector<Permutation> out;
    for (auto& w : enumerate_rnk(n, k))
        if (rsk(w).p.shape() == shape)
            out.push_back(std::move(w));
    return out;
}

std::vector<int> bumps_from_suffix(const std::vector<int>& a) {
    std::vector<int> t;
    t.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        int x = a[j] + 1;
        while (excluded(x, t, 0, j) || excluded(x, a, j + 1, a.size()))
            ++x;
        t.push_back(x);
    }
    return t;
}

std::vector<int> sequence_from_bumps(const std::vector<int>& t) {
    std::vector<int> i;
    i.reserve(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        int c = t[j] - 1;
        while (excluded(c, t, 0, j))
            --c;
        i.push_back(c);
    }
    return i;
}

AlgorithmAResult algorithm_a(const Permutation& w, int k) {
    if (!is_in_rnk(w, k))
        throw Error(ErrorCode::Precondition, "permutation " + w.to_string() + " is not in R_k^n");
    const int n = w.size();
    std::vector<int> a(w.word().end() - k, w.word().end());
    auto t = bumps_from_suffix(a);
    auto i = sequence_from_bumps(t);
    for (int x : i)
        if (x < 1 || x > n)
            throw Error(ErrorCode::Precondition, "recovered entry " + std::to_string(x) + " outside [n]");
    return {std::move(t), IntegerSequence(n, std::move(i))};
}

const char* to_string(AlgorithmBStatus status) noexcept {
    switch (status) {
    case AlgorithmBStatus::Success: return "success";
    case AlgorithmBStatus::BumpOverflow: return "bump-overflow";
    case AlgorithmBStatus::SlotUnderflow: return "slot-underflow";
    }
    return "unknown";
}

AlgorithmBResult algorithm_b(const IntegerSequence& i) {
    const int n = i.n();
    const int k = i.k();
    AlgorithmBResult res;
    res.t = bumps_from_suffix(i.as_vector());
    for (int j = 0; j < k; ++j) {
        if (res.t[j] > n) {
            res.status = AlgorithmBStatus::BumpOverflow;
            res.failed_index = j;
            return res;
        }
    }

    // a_j = max{c < t_j : c not in {t_1..t_{j-1}, a_{j+1}..a_k}}, j = k..1.
    std::vector<int> a(static_cast<std::size_t>(k), 0);
    for (int j = k - 1; j >= 0; --j) {
        int c = res.t[j] - 1;
        while (excluded(c, res.t, 0, static_cast<std::size_t>(j)) ||
               excluded(c, a, static_cast<std::size_t>(j) + 1, static_cast<std::size_t>(k)))
            --c;
        a[j] = c;
        if (c <= 0) {
            res.status = AlgorithmBStatus::SlotUnderflow;
            res.failed_index = j;
            res.a.assign(a.begin() + j, a.end());
            return res;
        }
    }
    res.a = a;

    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int x : a)
        used[x] = 1;
    std::vector<int> word;
    for (int x = 1; x <= n; ++x)
        if (!used[x])
            word.push_back(x);
    word.insert(word.end(), a.begin(), a.end());
    res.w = Permutation(std::move(word));
    return res;
}

Permutation psi(const IntegerSequence& i) {
    const int n = i.n();
    const int k = i.k();
    if (n < k + 1)
        throw Error(ErrorCode::Precondition, "need n >= k+1");
    auto image = di_forward(i);
    if (image.gamma.shape().first() != n - k)
        throw Error(ErrorCode::Precondition, "sequence " + i.to_string() + " does not have VT-index k");
    const auto qstar = vt_to_syt_star(image.gamma);
    const auto q = prepend_first_row(qstar, n - k);
    return inverse_rsk(image.p, q);
}

IntegerSequence psi_inverse(const Permutation& w, int k) {
    if (!is_in_rnk(w, k))
        throw Error(ErrorCode::Precondition, "permutation " + w.to_string() + " is not in R_k^n");
    const int n = w.size();
    auto [p, q] = rsk(w);
    const auto qstar = strip_first_row(q);
    const auto gamma = syt_star_to_vt(qstar, n);
    return di_inverse(p, gamma);
}

bool has_max_vt_index(const IntegerSequence& i) {
    if (i.n() < i.k() + 1)
        throw Error(ErrorCode::Precondition, "need n >= k+1");
    const auto b = algorithm_b(i);
    if (!b.ok())
        return false;
    return sequence_from_bumps(b.t) == i.as_vector();
}

namespace {

// Grid cells indexed [row 1..n][column 1..k].
class Grid {
public:
    Grid(int n, int k) : n_(n), k_(k), cells_(static_cast<std::size_t>(n + 1), std::string(static_cast<std::size_t>(k + 1), '.')) {}

    void set(int row, int col, char c) {
        if (row >= 1 && row <= n_ && col >= 1 && col <= k_)
            cells_[row][col] = c;
    }
    void fill_left(int row, int col, char c) {
        for (int j = 1; j <= col; ++j)
            set(row, j, c);
    }
    void fill_right(int row, int col, char c) {
        for (int j = col; j <= k_; ++j)
            set(row, j, c);
    }

    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        const int width = static_cast<int>(std::to_string(n_).size());
        for (int r = n_; r >= 1; --r) {
            auto label = std::to_string(r);
            std::string line = std::string(static_cast<std::size_t>(width) - label.size(), ' ') + label + " |";
            for (int c = 1; c <= k_; ++c) {
                line += ' ';
                line += cells_[r][c];
            }
            out.push_back(line);
        }
        return out;
    }

private:
    int n_;
    int k_;
    std::vector<std::string> cells_;
};

std::string side_by_side(const Grid& left, const Grid& right, const std::string& legend) {
    auto l = left.lines();
    auto r = right.lines();
    std::size_t width = 0;
    for (const auto& s : l)
        width = std::max(width, s.size());
    std::ostringstream os;
    for (std::size_t j = 0; j < l.size(); ++j)
        os << l[j] << std::string(width - l[j].size(), ' ') << "   ->   " << r[j] << '\n';
    os << legend << '\n';
    return os.str();
}

} // namespace

std::string render_grid_a(const Permutation& w, int k) {
    const auto res = algorithm_a(w, k);
    const int n = w.size();
    std::vector<int> a(w.word().end() - k, w.word().end());
    Grid before(n, k);
    Grid after(n, k);
    for (int j = 1; j <= k; ++j) {
        before.fill_left(a[j - 1], j, '/');
        before.fill_right(res.t[j - 1], j, '-');
        after.fill_right(res.t[j - 1], j, '-');
    }
    // Labels go on last so shading never hides them.
    for (int j = 1; j <= k; ++j) {
        before.set(a[j - 1], j, 'a');
        before.set(res.t[j - 1], j, 't');
        after.set(res.t[j - 1], j, 't');
        after.set(res.i[j - 1], j, '#');
    }
    return side_by_side(before, after, "a = last k letters, / diagonal, - horizontal, t = bump, # = output i");
}

std::string render_grid_b(const IntegerSequence& i) {
    const auto res = algorithm_b(i);
    const int n = i.n();
    const int k = i.k();
    Grid before(n, k);
    Grid after(n, k);
    for (int j = 1; j <= k; ++j) {
        before.fill_left(i[j - 1], j, '/');
        before.fill_right(res.t[j - 1], j, '-');
        after.fill_right(res.t[j - 1], j, '-');
    }
    for (int j = 1; j <= k; ++j) {
        before.set(i[j - 1], j, 'i');
        before.set(res.t[j - 1], j, 't');
        after.set(res.t[j - 1], j, 't');
    }
    const int first = k - static_cast<int>(res.a.size());
    for (std::size_t j = 0; j < res.a.size(); ++j)
        after.set(res.a[j], first + static_cast<int>(j) + 1, '#');
    return side_by_side(before, after,
                        std::string("i = input, / diagonal, - horizontal, t = bump, # = a; status: ") +
                            to_string(res.status));
}

} // namespace vtab
