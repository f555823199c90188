// Command-line front end. Every subcommand prints one JSON document.

#include "vtab/bumping.hpp"
#include "vtab/cossz.hpp"
#include "vtab/counting.hpp"
#include "vtab/di_map.hpp"
#include "vtab/error.hpp"
#include "vtab/json_io.hpp"
#include "vtab/max_index.hpp"
#include "vtab/rsk.hpp"
#include "vtab/shapes.hpp"
#include "vtab/vacillating.hpp"
#include "vtab/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace vtab;

namespace {

bool g_pretty = false;
int g_exit = 0;

void emit(const Json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << '\n'; }

// Inline JSON or a path to a JSON file.
Json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    std::string text = arg;
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
        std::ifstream in(arg);
        if (!in)
            throw Error(ErrorCode::InvalidArgument, "cannot open " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad JSON: ") + e.what());
    }
}

IntegerSequence sequence_arg(int n, const std::string& seq) { return IntegerSequence(n, parse_int_list(seq)); }

Permutation perm_arg(const std::string& perm, int n) {
    Permutation w(parse_int_list(perm));
    if (n > 0 && w.size() != n)
        throw Error(ErrorCode::InvalidArgument, "--n does not match the permutation length");
    return w;
}

Json optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

std::string word_string(const Permutation& w) {
    std::string s;
    for (int x : w.word())
        s += std::to_string(x);
    return w.size() < 10 ? s : w.to_string();
}

Json tableau_trace(const std::vector<PartialTableau>& trace) {
    Json out = Json::array();
    for (const auto& t : trace)
        out.push_back(to_json(t));
    return out;
}

void report(const SweepReport& r) {
    emit(to_json(r));
    if (!r.ok())
        g_exit = 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vacillating tableaux, the delete-insert map and related bijections"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", g_pretty, "Indent JSON output");

    int n = 0;
    int k = -1;
    int value = 0;
    std::string seq, perm, tableau, p_arg, gamma_arg, s_arg, t_arg, dir = "right", kind, name;
    bool trace = false;
    bool grid = false;
    int a = 0, b = 0;

    auto* rsk_cmd = app.add_subcommand("rsk", "RSK of a permutation");
    rsk_cmd->add_option("--perm", perm, "Permutation in one-line notation")->required();

    auto* jdt_cmd = app.add_subcommand("jdt", "Jeu de taquin deletion");
    jdt_cmd->add_option("--tableau", tableau, "Tableau JSON or file")->required();
    jdt_cmd->add_option("--delete", value, "Entry to delete")->required();

    auto* ins_cmd = app.add_subcommand("insert", "Row insertion");
    ins_cmd->add_option("--tableau", tableau, "Tableau JSON or file")->required();
    ins_cmd->add_option("--value", value, "Value to insert")->required();

    auto* di_cmd = app.add_subcommand("di", "Delete-insert map");
    di_cmd->add_option("--n", n)->required();
    di_cmd->add_option("--seq", seq)->required();
    di_cmd->add_flag("--trace", trace, "Include every intermediate tableau");

    auto* dinv_cmd = app.add_subcommand("di-inv", "Inverse delete-insert map");
    dinv_cmd->add_option("--p", p_arg, "SYT JSON or file")->required();
    dinv_cmd->add_option("--gamma", gamma_arg, "Vacillating tableau JSON or file")->required();

    auto* psi_cmd = app.add_subcommand("psi", "Sequence with VT-index k to permutation");
    psi_cmd->add_option("--n", n)->required();
    psi_cmd->add_option("--seq", seq)->required();

    auto* pinv_cmd = app.add_subcommand("psi-inv", "Permutation in R_k^n to sequence");
    pinv_cmd->add_option("--perm", perm)->required();
    pinv_cmd->add_option("--k", k)->required();
    pinv_cmd->add_option("--n", n);

    auto* algo_a = app.add_subcommand("algo-a", "Algorithm A");
    algo_a->add_option("--perm", perm)->required();
    algo_a->add_option("--k", k, "Defaults to n minus the longest increasing subsequence");
    algo_a->add_option("--n", n);
    algo_a->add_flag("--render-grid", grid);

    auto* algo_b = app.add_subcommand("algo-b", "Algorithm B");
    algo_b->add_option("--n", n)->required();
    algo_b->add_option("--seq", seq)->required();
    algo_b->add_flag("--render-grid", grid);

    auto* maxi = app.add_subcommand("max-index-test", "Whether the VT-index equals k");
    maxi->add_option("--n", n)->required();
    maxi->add_option("--seq", seq)->required();

    auto* bump = app.add_subcommand("bump-check", "Bumping sequence criterion");
    bump->add_option("--n", n)->required();
    bump->add_option("--t", seq)->required();

    auto* suffix = app.add_subcommand("suffix-check", "Permutation suffix criterion");
    suffix->add_option("--n", n)->required();
    suffix->add_option("--a", seq)->required();

    auto* rep = app.add_subcommand("repark", "Reparking simulation");
    rep->add_option("--n", n)->required();
    rep->add_option("--cars", seq)->required();
    rep->add_option("--dir", dir)->check(CLI::IsMember({"right", "left"}));

    auto* cz = app.add_subcommand("cossz", "COSSZ bijection");
    cz->add_option("--n", n)->required();
    cz->add_option("--seq", seq)->required();

    auto* czinv = app.add_subcommand("cossz-inv", "Inverse COSSZ bijection");
    czinv->add_option("--s", s_arg, "SYT JSON or file")->required();
    czinv->add_option("--t", t_arg, "Multiset tableau JSON or file")->required();

    auto* shape = app.add_subcommand("shape-test", "Shape characterizations");
    shape->add_option("--n", n)->required();
    shape->add_option("--seq", seq)->required();
    shape->add_option("--k", k);

    auto* orc = app.add_subcommand("one-row-count", "Count sequences of shape (n)");
    orc->add_option("--n", n)->required();
    orc->add_option("--k", k)->required();

    auto* cnt = app.add_subcommand("count", "Reference counts");
    cnt->add_option("--kind", kind, "stirling2, bell, binomial, ballot, catalan")->required();
    cnt->add_option("--a", a)->required();
    cnt->add_option("--b", b);

    auto* ver = app.add_subcommand("verify", "Exhaustive sweeps");
    ver->require_subcommand(1);
    ver->fallthrough();
    auto* ver_id = ver->add_subcommand("identity", "n^k = sum of f^lambda m_k^lambda");
    ver_id->add_option("--n", n)->required();
    ver_id->add_option("--k", k)->required();
    auto* ver_th = ver->add_subcommand("theorem", "One characterization or round trip");
    std::string names;
    for (auto c : all_checks())
        names += std::string(names.empty() ? "" : ", ") + to_string(c);
    ver_th->add_option("--name", name, names)->required();
    ver_th->add_option("--n", n)->required();
    ver_th->add_option("--k", k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*rsk_cmd) {
            const auto w = perm_arg(perm, 0);
            const auto [p, q] = rsk(w);
            emit({{"perm", to_json(w)}, {"p", to_json(p)}, {"q", to_json(q)}, {"shape", to_json(p.shape())}});
        } else if (*jdt_cmd) {
            emit({{"tableau", to_json(jdt_delete(partial_tableau_from_json(load_json(tableau)), value))}});
        } else if (*ins_cmd) {
            const auto r = row_insert(partial_tableau_from_json(load_json(tableau)), value);
            emit({{"tableau", to_json(r.tableau)}, {"row", r.row + 1}, {"bumped_out", optional_int(r.bumped_out)}});
        } else if (*di_cmd) {
            const auto i = sequence_arg(n, seq);
            const auto image = di_forward(i);
            Json out{{"p", to_json(image.p)},
                     {"gamma", to_json(image.gamma)},
                     {"shape", to_json(image.gamma.shape())},
                     {"vt_index", image.gamma.shape().size() - image.gamma.shape().first()}};
            Json bumps = Json::array();
            for (const auto& x : image.first_row_bumps)
                bumps.push_back(optional_int(x));
            out["first_row_bumps"] = bumps;
            if (trace)
                out["trace"] = tableau_trace(image.trace);
            emit(out);
        } else if (*dinv_cmd) {
            const auto p = standard_tableau_from_json(load_json(p_arg));
            const auto gamma = vacillating_from_json(load_json(gamma_arg));
            emit({{"seq", to_json(di_inverse(p, gamma))}});
        } else if (*psi_cmd) {
            const auto i = sequence_arg(n, seq);
            const auto w = psi(i);
            const auto image = di_forward(i);
            const auto qstar = vt_to_syt_star(image.gamma);
            const auto [p, q] = rsk(w);
            emit({{"perm", to_json(w)},
                  {"word", word_string(w)},
                  {"p", to_json(p)},
                  {"q", to_json(q)},
                  {"qstar", to_json(qstar)},
                  {"gamma", to_json(image.gamma)}});
        } else if (*pinv_cmd) {
            const auto w = perm_arg(perm, n);
            emit({{"seq", to_json(psi_inverse(w, k))}});
        } else if (*algo_a) {
            const auto w = perm_arg(perm, n);
            if (k < 0)
                k = w.size() - longest_increasing(w.word());
            const auto r = algorithm_a(w, k);
            Json out{{"k", k}, {"t", r.t}, {"seq", to_json(r.i)}};
            if (grid)
                out["grid"] = render_grid_a(w, k);
            emit(out);
        } else if (*algo_b) {
            const auto i = sequence_arg(n, seq);
            const auto r = algorithm_b(i);
            Json out{{"status", to_string(r.status)}, {"t", r.t}, {"a", r.a}};
            out["failed_index"] = r.ok() ? Json(nullptr) : Json(r.failed_index + 1);
            out["perm"] = r.w ? to_json(*r.w) : Json(nullptr);
            if (grid)
                out["grid"] = render_grid_b(i);
            emit(out);
        } else if (*maxi) {
            const auto i = sequence_arg(n, seq);
            emit({{"has_max_vt_index", has_max_vt_index(i)}, {"vt_index", vt_index(i)}, {"k", i.k()}});
        } else if (*bump) {
            const auto t = parse_int_list(seq);
            emit({{"t", t}, {"gaps", interior_gaps(t)}, {"bumping_sequence", bumping_criterion(t, n)}});
        } else if (*suffix) {
            const auto av = parse_int_list(seq);
            emit({{"a", av}, {"gaps", interior_gaps(av)}, {"suffix", suffix_criterion(av, n)}});
        } else if (*rep) {
            const ReparkingInstance inst(n, parse_int_list(seq));
            const auto r = repark(inst, dir == "left" ? Direction::Left : Direction::Right);
            emit({{"direction", dir},
                  {"success", r.success},
                  {"positions", r.positions},
                  {"failed_car", optional_int(r.failed_car)},
                  {"predicted", r.predicted}});
        } else if (*cz) {
            const auto i = sequence_arg(n, seq);
            const auto r = cossz_forward(i);
            Json out{{"s", to_json(r.s)}, {"t", to_json(r.t)}, {"shape", to_json(r.s.shape())}};
            out["max_shape"] = n >= i.k() + 1 ? Json(cossz_maxshape(i)) : Json(nullptr);
            emit(out);
        } else if (*czinv) {
            const auto s = standard_tableau_from_json(load_json(s_arg));
            const auto t = multiset_tableau_from_json(load_json(t_arg));
            emit({{"seq", to_json(cossz_inverse(s, t))}});
        } else if (*shape) {
            const auto i = sequence_arg(n, seq);
            if (k >= 0 && k != i.k())
                throw Error(ErrorCode::InvalidArgument, "--k does not match the sequence length");
            const auto sh = vt_shape(i);
            Json out{{"shape", to_json(sh)}, {"vt_index", sh.size() - sh.first()}};
            std::string cls = "other";
            if (is_one_row(i)) {
                cls = "one-row";
                out["set_partition"] = to_json(one_row_to_set_partition(i));
            } else if (n >= i.k() + 1 && is_hook_sequence(i)) {
                cls = "hook";
            } else if (n >= 2 * i.k()) {
                try {
                    const auto d = two_row_decompose(i);
                    cls = "two-row";
                    out["v"] = d.v;
                    out["eps"] = d.eps;
                    out["b"] = d.b;
                    out["path"] = d.path.steps();
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::Precondition)
                        throw;
                }
            }
            out["shape_class"] = cls;
            emit(out);
        } else if (*orc) {
            std::uint64_t found = 0;
            for_each_sequence(n, k, [&](const IntegerSequence& i) { found += is_one_row(i) ? 1 : 0; });
            emit({{"n", n}, {"k", k}, {"count", found}, {"set_partitions", bounded_bell(k, n)}});
        } else if (*cnt) {
            const auto kk = parse_count_kind(kind);
            if (!kk)
                throw Error(ErrorCode::UnknownName, "count kind " + kind);
            emit({{"kind", kind}, {"value", count_reference(*kk, a, b)}});
        } else if (*ver_id) {
            report(verify_identity(n, k));
        } else if (*ver_th) {
            const auto c = parse_check(name);
            if (!c)
                throw Error(ErrorCode::UnknownName, "check " + name + " (known: " + names + ")");
            report(verify_theorem(*c, n, k));
        }
    } catch (const Error& e) {
        emit({{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}});
        return 2;
    }
    return g_exit;
}
