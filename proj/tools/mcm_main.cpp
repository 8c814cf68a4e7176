// mcm: command-line front end for the multi-cover metric library.
//
// Subcommands: bounds, spheres, mk-code, analyze, decode-sim, factor-bound.
// Exit codes: 0 success, 1 computation infeasible, 2 invalid arguments.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcm/bounds.hpp"
#include "mcm/construct.hpp"
#include "mcm/decode.hpp"
#include "mcm/errors.hpp"
#include "mcm/json_io.hpp"
#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/spherecount.hpp"

namespace {

using namespace mcm;

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;
}

std::string interval_str(const Big& lo, const Big& hi) {
    if (lo == hi) return big_to_string(lo);
    return "[" + big_to_string(lo) + ", " + big_to_string(hi) + "]";
}

void print_row(const std::string& name, const std::string& value,
               const std::string& note = "") {
    std::cout << std::left << std::setw(18) << name << " " << value;
    if (!note.empty()) std::cout << "   (" << note << ")";
    std::cout << "\n";
}

// ---------------------------------------------------------------- bounds ---

struct BoundsOpts {
    std::uint64_t q = 0;
    std::size_t l = 0;
    std::vector<std::uint32_t> m, n;
    std::size_t d = 0;
    std::string bound = "all";
    bool json = false;
};

int run_bounds(const BoundsOpts& o) {
    if (!is_prime_power(o.q)) throw std::invalid_argument("q must be a prime power");
    if (o.l != 0 && o.l != o.m.size())
        throw std::invalid_argument("l does not match the m list");
    const Shape shape = Shape::make(o.m, o.n);
    if (o.d < 1 || o.d > shape.total_cols())
        throw std::invalid_argument("d outside [1, N]");

    const auto want = [&](const std::string& name) {
        return o.bound == "all" || o.bound == name;
    };
    Json jbounds = Json::object();
    bool requested_infeasible = false;

    const auto emit = [&](const std::string& name, bool applicable, const Big& value,
                          const std::string& reason, const std::string& note = "") {
        if (!o.json) {
            if (applicable)
                print_row(name, big_to_string(value), note);
            else
                print_row(name, "-", reason);
        }
        Json j{{"applicable", applicable}};
        if (applicable) j["value"] = big_to_string(value);
        if (!reason.empty()) j["reason"] = reason;
        if (!note.empty()) j["note"] = note;
        jbounds[name] = std::move(j);
    };

    if (want("singleton")) emit("singleton", true, singleton_bound(shape, o.q, o.d), "");

    if (want("hamming") || want("plotkin") || want("elias")) {
        const bool equal_rows =
            std::all_of(o.m.begin(), o.m.end(), [&](auto v) { return v == o.m[0]; });
        if (equal_rows) {
            const EqualRowsBounds er = equal_rows_bounds(o.m[0], o.n, o.q, o.d);
            for (const BoundReport* b : {&er.hamming, &er.plotkin, &er.elias})
                if (want(b->name)) emit(b->name, b->applicable, b->value, b->reason, b->note);
        } else {
            for (const char* name : {"hamming", "plotkin", "elias"})
                if (want(name)) emit(name, false, 0, "not applicable: unequal row counts");
        }
    }

    if (want("sphere")) {
        try {
            const SpherePackingResult sp = sphere_packing_bound(shape, o.q, o.d);
            emit("sphere", true, sp.value, "",
                 sp.exact_ball ? "" : "lower ball estimate");
        } catch (const InfeasibleError& e) {
            emit("sphere", false, 0, std::string("infeasible: ") + e.what());
            requested_infeasible = requested_infeasible || o.bound == "sphere";
        }
    }

    if (want("projective")) {
        try {
            emit("projective", true, projective_sphere_packing(shape, o.q, o.d), "");
        } catch (const std::invalid_argument& e) {
            emit("projective", false, 0, e.what());
        }
    }

    if (want("ell")) {
        const bool square_equal =
            std::all_of(o.m.begin(), o.m.end(), [&](auto v) { return v == o.n[0]; }) &&
            std::all_of(o.n.begin(), o.n.end(), [&](auto v) { return v == o.n[0]; });
        if (!square_equal) {
            emit("ell_eq4", false, 0, "not applicable: blocks not square and equal");
        } else {
            try {
                const EllBounds eb = ell_bounds(o.q, o.n[0], o.d);
                const std::string note =
                    eb.in_tight_regime ? "tight regime" : "outside tight regime";
                emit("ell_eq4", true, eb.eq4, "", note);
                emit("ell_eq5", true, eb.eq5, "", note);
                emit("ell_mds_derived", true, eb.eq_mds_derived, "", note);
            } catch (const std::invalid_argument& e) {
                emit("ell_eq4", false, 0, e.what());
            }
        }
    }

    if (want("gv")) {
        try {
            emit("gv_dim", true, gv_dimension(shape, o.q, o.d), "");
        } catch (const InfeasibleError& e) {
            emit("gv_dim", false, 0, std::string("infeasible: ") + e.what());
            requested_infeasible = requested_infeasible || o.bound == "gv";
        }
    }

    if (o.json) {
        const Json doc{{"q", o.q},
                       {"d", o.d},
                       {"shape", shape_to_json(shape)},
                       {"bounds", std::move(jbounds)}};
        std::cout << canonical_dump(doc, 2) << "\n";
    }
    return requested_infeasible ? 1 : 0;
}

// --------------------------------------------------------------- spheres ---

struct SpheresOpts {
    std::uint64_t q = 0;
    std::uint32_t m = 0, n = 0, rmax = 0;
    bool json = false;
};

int run_spheres(const SpheresOpts& o) {
    if (!is_prime_power(o.q)) throw std::invalid_argument("q must be a prime power");
    const Shape shape = Shape::make({o.m}, {o.n});
    if (o.rmax > std::min(o.m, o.n)) throw std::invalid_argument("rmax out of range");

    Json rows = Json::array();
    const bool brute_ok = (std::uint64_t)o.m * o.n <= 22;
    for (std::uint32_t r = 0; r <= o.rmax; ++r) {
        Big slo, shi;
        if (r == 0) {
            slo = shi = 1;
        } else if (brute_ok) {
            slo = shi = sphere_bruteforce(o.q, o.m, o.n, r);
        } else {
            const SphereInterval iv = sphere_bounds(o.q, o.m, o.n, r);
            slo = iv.lower;
            shi = iv.upper;
        }
        BallSize ball;
        try {
            ball = ball_size(shape, o.q, r, BallMode::exact);
        } catch (const InfeasibleError&) {
            ball = ball_size(shape, o.q, r, BallMode::bounds);
        }
        if (!o.json) {
            std::ostringstream left, right;
            left << "S_" << r << " " << interval_str(slo, shi);
            right << "B_" << r << " " << interval_str(ball.lower, ball.upper);
            std::cout << std::left << std::setw(28) << left.str() << right.str() << "\n";
        }
        Json row{{"r", r},
                 {"sphere", Json{{"lower", big_to_string(slo)},
                                 {"upper", big_to_string(shi)},
                                 {"exact", slo == shi}}},
                 {"ball", Json{{"lower", big_to_string(ball.lower)},
                               {"upper", big_to_string(ball.upper)},
                               {"exact", ball.exact}}}};
        rows.push_back(std::move(row));
    }
    if (o.json) {
        const Json doc{{"q", o.q}, {"m", o.m}, {"n", o.n}, {"rows", std::move(rows)}};
        std::cout << canonical_dump(doc, 2) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- mk-code ---

struct MkCodeOpts {
    std::string family;
    std::uint64_t q = 0;
    std::uint32_t s = 1, t = 1, k = 1, u = 1, l = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
    bool json = false;
};

int run_mk_code(const MkCodeOpts& o) {
    const Field base = field_from_order(o.q);
    std::optional<LinearCode> code;
    std::string warning;

    if (o.family == "lrs") {
        const LrsCode lc = lrs_generator(LrsParams::make(base, o.s, o.t, o.k));
        warning = lc.warning;
        code = lrs_matrix_code(lc);
    } else if (o.family == "nested") {
        if (o.t != o.u * o.l)
            throw std::invalid_argument("t must equal u * l for nested codes");
        const LrsCode lc = lrs_generator(LrsParams::make(base, o.s, o.t, o.k));
        warning = lc.warning;
        const LinearCode component = lrs_matrix_code(lc);
        const NestParams np{o.u, o.s, o.s, o.l};
        code = nested_code(np, component);
    } else if (o.family == "random") {
        if (!o.seed_given)
            throw std::invalid_argument("--seed required for random codes");
        const Shape shape = Shape::make(std::vector<std::uint32_t>(o.t, o.s),
                                        std::vector<std::uint32_t>(o.t, o.s));
        Rng rng(o.seed);
        std::vector<std::vector<Elem>> rows(o.k, std::vector<Elem>(shape.ambient_dim()));
        for (auto& row : rows)
            for (Elem& e : row) e = static_cast<Elem>(rng.below(base.q()));
        code = LinearCode::make(shape, base, rows);
    } else {
        throw std::invalid_argument("unknown family: " + o.family);
    }

    save_code_file(o.out, *code);
    if (o.json) {
        Json doc{{"family", o.family},
                 {"q", o.q},
                 {"dim", code->dim()},
                 {"shape", shape_to_json(code->shape())},
                 {"file", o.out}};
        if (!warning.empty()) doc["warning"] = warning;
        std::cout << canonical_dump(doc, 2) << "\n";
    } else {
        print_row("family", o.family);
        print_row("q", std::to_string(o.q));
        print_row("dim", std::to_string(code->dim()));
        print_row("file", o.out);
        if (!warning.empty()) std::cout << "warning: " << warning << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- analyze ---

struct AnalyzeOpts {
    std::string code_path;
    bool json = false;
};

int run_analyze(const AnalyzeOpts& o) {
    const LinearCode C = load_code_file(o.code_path);
    Json doc{{"file", o.code_path},
             {"q", C.field().q()},
             {"shape", shape_to_json(C.shape())},
             {"dim", C.dim()},
             {"size", big_to_string(C.size())}};

    if (!o.json) {
        print_row("q", std::to_string(C.field().q()));
        print_row("blocks", std::to_string(C.shape().blocks()));
        print_row("dim", std::to_string(C.dim()));
        print_row("size", big_to_string(C.size()));
    }

    const std::pair<const char*, Metric> metrics[] = {{"d_MC", Metric::mc},
                                                      {"d_SR", Metric::sr},
                                                      {"d_Hcol", Metric::ham_col},
                                                      {"d_Hrow", Metric::ham_row}};
    for (const auto& [name, metric] : metrics) {
        std::string text = "n/a (zero code)";
        if (C.dim() > 0) {
            try {
                const std::size_t d = min_distance(C, metric);
                text = std::to_string(d);
                doc[name] = d;
            } catch (const InfeasibleError&) {
                if (metric == Metric::mc) {
                    const std::size_t d = min_distance_via_covers(C);
                    text = std::to_string(d);
                    doc[name] = d;
                } else {
                    text = "infeasible";
                    doc[name] = "infeasible";
                }
            }
        }
        if (!o.json) print_row(name, text);
    }

    const auto flag_row = [&](const char* name, auto&& fn) {
        std::string text;
        try {
            const bool v = fn();
            text = v ? "true" : "false";
            doc[name] = v;
        } catch (const InfeasibleError& e) {
            text = std::string("infeasible: ") + e.what();
            doc[name] = "infeasible";
        } catch (const std::invalid_argument& e) {
            text = std::string("not applicable: ") + e.what();
            doc[name] = "not applicable";
        }
        if (!o.json) print_row(name, text);
    };
    flag_row("MMCD", [&] { return is_mmcd(C); });
    flag_row("dually_MMCD", [&] { return is_dually_mmcd(C); });
    flag_row("MDS_by_rows", [&] { return is_mds_by_rows(C); });
    flag_row("MDS_by_columns", [&] { return is_mds_by_columns(C); });

    // Cover classification at the two critical sizes, when the cover-sweep
    // hypotheses (equal row counts, m | dim) hold and the sweep is small.
    const Shape& s = C.shape();
    const bool equal_rows = [&] {
        for (std::size_t i = 0; i < s.blocks(); ++i)
            if (s.m(i) != s.m(0)) return false;
        return true;
    }();
    if (equal_rows && C.dim() > 0 && C.dim() % s.m(0) == 0 && s.line_count() <= 24) {
        const std::size_t k = C.dim() / s.m(0);
        const std::size_t crit_info = k;
        const std::size_t crit_comp = s.total_cols() - k;
        for (auto [label, size, comp] :
             {std::tuple{"info_covers", crit_info, false},
              std::tuple{"comp_info_covers", crit_comp, true}}) {
            std::size_t good = 0, total = 0;
            for_each_cover_of_size(s, size, [&](const MultiCover& X) {
                ++total;
                const CoverClassification cc = classify_cover(C, X);
                good += comp ? cc.is_comp_info : cc.is_info;
                return true;
            });
            const std::string text = std::to_string(good) + "/" + std::to_string(total) +
                                     " at size " + std::to_string(size);
            if (!o.json) print_row(label, text);
            doc[label] = Json{{"size", size}, {"count", good}, {"total", total}};
        }
    }

    if (o.json) std::cout << canonical_dump(doc, 2) << "\n";
    return 0;
}

// ------------------------------------------------------------ decode-sim ---

struct DecodeSimOpts {
    std::string code_path;
    std::size_t t = 0, rho = 0, trials = 0;
    std::uint64_t seed = 0;
    bool json = false;
};

int run_decode_sim(const DecodeSimOpts& o) {
    const LinearCode C = load_code_file(o.code_path);
    const ChannelStats st = channel_simulate(C, o.t, o.rho, o.trials, o.seed);

    std::optional<std::size_t> d;
    if (C.dim() > 0) {
        try {
            d = min_distance(C, Metric::mc);
        } catch (const InfeasibleError&) {
            d = min_distance_via_covers(C);
        }
    }
    const bool guaranteed = d && 2 * o.t + o.rho < *d;
    const long long mean_usec =
        std::llround(st.mean_decode_seconds * 1e6);

    if (o.json) {
        Json doc{{"file", o.code_path},
                 {"t", o.t},
                 {"rho", o.rho},
                 {"trials", st.trials},
                 {"successes", st.successes},
                 {"failures", st.failures},
                 {"ambiguities", st.ambiguities},
                 {"mean_decode_usec", mean_usec},
                 {"guaranteed_regime", guaranteed}};
        if (d) doc["d_MC"] = *d;
        std::cout << canonical_dump(doc, 2) << "\n";
    } else {
        print_row("trials", std::to_string(st.trials));
        print_row("successes", std::to_string(st.successes));
        print_row("failures", std::to_string(st.failures));
        print_row("ambiguities", std::to_string(st.ambiguities));
        print_row("mean_decode_usec", std::to_string(mean_usec));
        if (d) print_row("d_MC", std::to_string(*d));
        print_row("guaranteed_regime", guaranteed ? "true" : "false");
    }
    return guaranteed && st.successes != st.trials ? 1 : 0;
}

// ----------------------------------------------------------- factor-bound ---

struct FactorBoundOpts {
    std::uint64_t q0 = 0;
    std::uint32_t r = 1, s = 1, u = 1, l = 1;
    std::uint64_t delta = 0, b = 1;
    bool json = false;
};

int run_factor_bound(const FactorBoundOpts& o) {
    const SrbchResult res = srbch_dimension_bound(o.q0, o.r, o.s, o.u, o.l, o.delta, o.b);
    if (o.json) {
        Json doc{{"q0", o.q0}, {"r", o.r},         {"s", o.s},
                 {"u", o.u},   {"l", o.l},         {"delta", o.delta},
                 {"b", o.b},   {"applicable", res.applicable}};
        if (res.applicable) {
            doc["eq7"] = big_to_string(res.eq7);
            doc["eq8"] = big_to_string(res.eq8);
            Json cosets = Json::array();
            for (const auto& c : res.cosets) cosets.push_back(c);
            doc["cosets"] = std::move(cosets);
        } else {
            doc["reason"] = res.reason;
        }
        std::cout << canonical_dump(doc, 2) << "\n";
    } else {
        print_row("applicable", res.applicable ? "true" : "false",
                  res.applicable ? "" : res.reason);
        if (res.applicable) {
            print_row("eq7", big_to_string(res.eq7));
            print_row("eq8", big_to_string(res.eq8));
            print_row("cosets", std::to_string(res.cosets.size()));
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-cover metric toolkit"};
    app.require_subcommand(1);

    BoundsOpts bo;
    CLI::App* bounds = app.add_subcommand("bounds", "cardinality bound table");
    bounds->add_option("--q", bo.q, "field size")->required();
    bounds->add_option("--l", bo.l, "number of blocks");
    bounds->add_option("--m", bo.m, "row counts")->required()->delimiter(',');
    bounds->add_option("--n", bo.n, "column counts")->required()->delimiter(',');
    bounds->add_option("--d", bo.d, "minimum distance")->required();
    bounds->add_option("--bound", bo.bound, "which bound")
        ->check(CLI::IsMember({"all", "singleton", "hamming", "plotkin", "elias",
                               "sphere", "projective", "ell", "gv"}));
    bounds->add_flag("--json", bo.json, "JSON output");

    SpheresOpts so;
    CLI::App* spheres = app.add_subcommand("spheres", "sphere/ball size table");
    spheres->add_option("--q", so.q, "field size")->required();
    spheres->add_option("--m", so.m, "rows")->required();
    spheres->add_option("--n", so.n, "columns")->required();
    spheres->add_option("--rmax", so.rmax, "largest radius")->required();
    spheres->add_flag("--json", so.json, "JSON output");

    MkCodeOpts mo;
    CLI::App* mk = app.add_subcommand("mk-code", "construct a code file");
    mk->add_option("--family", mo.family, "lrs|nested|random")->required();
    mk->add_option("--q", mo.q, "field size")->required();
    mk->add_option("--s", mo.s, "extension degree / block size");
    mk->add_option("--t", mo.t, "number of blocks");
    mk->add_option("--k", mo.k, "dimension parameter");
    mk->add_option("--u", mo.u, "interleaving order");
    mk->add_option("--l", mo.l, "nested block count");
    CLI::Option* seed_opt = mk->add_option("--seed", mo.seed, "RNG seed");
    mk->add_option("--out", mo.out, "output file")->required();
    mk->add_flag("--json", mo.json, "JSON output");

    AnalyzeOpts ao;
    CLI::App* analyze = app.add_subcommand("analyze", "report code parameters");
    analyze->add_option("--code", ao.code_path, "code file")->required();
    analyze->add_flag("--json", ao.json, "JSON output");

    DecodeSimOpts doo;
    CLI::App* sim = app.add_subcommand("decode-sim", "error/erasure channel simulation");
    sim->add_option("--code", doo.code_path, "code file")->required();
    sim->add_option("--t", doo.t, "error weight")->required();
    sim->add_option("--rho", doo.rho, "erasure count")->required();
    sim->add_option("--trials", doo.trials, "number of trials")->required();
    sim->add_option("--seed", doo.seed, "RNG seed")->required();
    sim->add_flag("--json", doo.json, "JSON output");

    FactorBoundOpts fo;
    CLI::App* fb = app.add_subcommand("factor-bound", "BCH-style dimension bounds");
    fb->add_option("--q0", fo.q0, "base field size")->required();
    fb->add_option("--r", fo.r, "exponent: q = q0^r");
    fb->add_option("--s", fo.s, "extension degree");
    fb->add_option("--u", fo.u, "interleaving order");
    fb->add_option("--l", fo.l, "nested block count");
    fb->add_option("--delta", fo.delta, "designed distance")->required();
    fb->add_option("--b", fo.b, "root offset");
    fb->add_flag("--json", fo.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) return run_bounds(bo);
        if (spheres->parsed()) return run_spheres(so);
        if (mk->parsed()) {
            mo.seed_given = seed_opt->count() > 0;
            return run_mk_code(mo);
        }
        if (analyze->parsed()) return run_analyze(ao);
        if (sim->parsed()) return run_decode_sim(doo);
        if (fb->parsed()) return run_factor_bound(fo);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
