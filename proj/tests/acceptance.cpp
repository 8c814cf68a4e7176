// Standalone acceptance gate: ten checks, one PASS/FAIL line each (with wall
// time), process exit code = number of failed checks.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mcm/bounds.hpp"
#include "mcm/construct.hpp"
#include "mcm/decode.hpp"
#include "mcm/errors.hpp"
#include "mcm/ffield.hpp"
#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"
#include "mcm/spherecount.hpp"

using namespace mcm;

namespace {

using Fails = std::vector<std::string>;

void expect(Fails& f, bool ok, const std::string& msg) {
    if (!ok) f.push_back(msg);
}

LinearCode worked_example() {
    return LinearCode::make(Shape::make({3}, {3}), Field::make(2, 1),
                            {
                                {1, 1, 1, 1, 0, 0, 1, 0, 0},
                                {0, 1, 0, 1, 1, 1, 0, 1, 0},
                                {0, 0, 1, 0, 0, 1, 1, 1, 1},
                            });
}

LinearCode lrs_code(std::uint32_t q, std::uint32_t s, std::uint32_t t, std::uint32_t k) {
    return lrs_matrix_code(lrs_generator(LrsParams::make(Field::make(q, 1), s, t, k)));
}

// ---------------------------------------------------------------------------

void crit1_worked_example(Fails& f) {
    LinearCode C = worked_example();
    expect(f, C.dim() == 3, "dim != 3");
    expect(f, min_distance(C, Metric::ham_col) == 3, "column-Hamming distance != 3");
    expect(f, min_distance(C, Metric::ham_row) == 3, "row-Hamming distance != 3");
    expect(f, min_distance(C, Metric::mc) == 2, "cover distance != 2");
    LinearCode D = dual(C);
    expect(f, D.dim() == 6, "dual dim != 6");
    expect(f, min_distance(D, Metric::mc) == 2, "dual cover distance != 2");
    expect(f, !is_mmcd(C), "code unexpectedly extremal");
    expect(f, is_mmcd(D), "dual not extremal");
    expect(f, !is_dually_mmcd(C), "code unexpectedly dually extremal");
}

void crit2_weight_oracle(Fails& f) {
    Field f2 = Field::make(2, 1);
    Field f3 = Field::make(3, 1);

    std::size_t checked = 0;
    for_each_tuple(Shape::make({3}, {3}), f2, [&](const MatrixTuple& T) {
        if (mc_weight(T) != mc_weight_bruteforce(T))
            f.push_back("3x3/F2 mismatch at tuple #" + std::to_string(checked));
        ++checked;
        return f.empty();
    });
    expect(f, checked == 512 || !f.empty(), "3x3/F2 enumeration incomplete");

    checked = 0;
    for_each_tuple(Shape::make({2, 2}, {2, 2}), f3, [&](const MatrixTuple& T) {
        if (mc_weight(T) != mc_weight_bruteforce(T))
            f.push_back("(2x2)^2/F3 mismatch at tuple #" + std::to_string(checked));
        ++checked;
        return f.empty();
    });
    expect(f, checked == 6561 || !f.empty(), "(2x2)^2/F3 enumeration incomplete");

    const std::vector<Shape> shapes = {
        Shape::make({4}, {4}),
        Shape::make({4, 4}, {4, 4}),
        Shape::make({4, 4, 4}, {4, 4, 4}),
        Shape::make({4, 3, 2}, {3, 3, 1}),
    };
    for (std::uint32_t q : {2u, 3u, 4u}) {
        Field F = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
        for (std::size_t si = 0; si < shapes.size(); ++si) {
            Rng rng(1000 + 10 * q + si);
            for (int trial = 0; trial < 500; ++trial) {
                MatrixTuple T = random_tuple(shapes[si], F, rng);
                if (mc_weight(T) != mc_weight_bruteforce(T)) {
                    f.push_back("random mismatch q=" + std::to_string(q) + " shape#" +
                                std::to_string(si) + " trial " + std::to_string(trial));
                    return;
                }
            }
        }
    }
}

void crit3_sphere_counts(Fails& f) {
    for (std::uint64_t q : {2u, 3u}) {
        for (std::uint32_t m = 1; m <= 4; ++m) {
            for (std::uint32_t n = 1; n <= m; ++n) {
                const std::string at = " at q=" + std::to_string(q) + " m=" +
                                       std::to_string(m) + " n=" + std::to_string(n);
                if (s1_exact(q, m, n) != sphere_bruteforce(q, m, n, 1))
                    f.push_back("s1 closed form != brute force" + at);
                for (std::uint32_t r = 1; r <= n; ++r) {
                    const SphereInterval iv = sphere_bounds(q, m, n, r);
                    const Big S = sphere_bruteforce(q, m, n, r);
                    if (!(iv.lower <= S && S <= iv.upper))
                        f.push_back("sandwich misses S_" + std::to_string(r) + at);
                    if (r == 1 && !iv.exact())
                        f.push_back("radius-1 interval not a point" + at);
                }
            }
        }
    }
}

void crit4_recursion_convention(Fails& f) {
    expect(f, full_sphere_recursion(2, 2, 2) == 7, "recursion at (2, 2x2) != 7");
    expect(f, sphere_bruteforce(2, 2, 2, 2) == 7, "brute force at (2, 2x2) != 7");
    for (std::uint64_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 4; ++m)
            for (std::uint32_t n = 1; n <= m; ++n) {
                const Big v = full_sphere_recursion(q, m, n);
                Big lo = 1, hi = 1;
                for (std::uint32_t i = 0; i < m * n; ++i) {
                    lo *= q - 1;
                    hi *= q;
                }
                if (!(lo <= v && v <= hi))
                    f.push_back("recursion outside sandwich at q=" + std::to_string(q) + " " +
                                std::to_string(m) + "x" + std::to_string(n));
            }

    // Discrepancy probe: full cover weight without any zero line, so the
    // radius-n sphere strictly exceeds the no-zero-line union the recursive
    // argument identifies it with.
    MatrixTuple probe = MatrixTuple::zero(Shape::make({3}, {3}));
    probe.blocks[0].at(0, 0) = 1;
    probe.blocks[0].at(0, 1) = 1;
    probe.blocks[0].at(1, 2) = 1;
    probe.blocks[0].at(2, 2) = 1;
    for (std::size_t r = 0; r < 3; ++r) {
        bool zrow = true, zcol = true;
        for (std::size_t c = 0; c < 3; ++c) {
            zrow = zrow && probe.blocks[0].at(r, c) == 0;
            zcol = zcol && probe.blocks[0].at(c, r) == 0;
        }
        expect(f, !zrow, "probe has a zero row");
        expect(f, !zcol, "probe has a zero column");
    }
    expect(f, mc_weight(probe) == 2, "probe cover weight != 2");
    expect(f, full_sphere_recursion(2, 3, 2) == 43, "recursion at (2, 3x2) != 43");
    expect(f, sphere_bruteforce(2, 3, 2, 2) == 46, "S_2(3x2, q=2) != 46");
}

void crit5_mmcd_pipeline(Fails& f) {
    const Big budget = Big(1) << 22;
    for (std::uint32_t q : {3u, 5u}) {
        for (std::uint32_t s = 1; s <= 2; ++s) {
            for (std::uint32_t k = 1; k <= 2 * s; ++k) {
                const std::string at = " at q=" + std::to_string(q) + " s=" +
                                       std::to_string(s) + " k=" + std::to_string(k);
                const std::size_t want = 2 * s - k + 1;
                LinearCode comp = lrs_code(q, s, 2, k);
                if (comp.dim() != static_cast<std::size_t>(s) * k) {
                    f.push_back("component dimension wrong" + at);
                    continue;
                }
                if (min_distance(comp, Metric::sr) != want)
                    f.push_back("component sum-rank distance != " + std::to_string(want) + at);
                if (min_distance(comp, Metric::mc) != want)
                    f.push_back("component cover distance != " + std::to_string(want) + at);
                if (!is_mmcd(comp)) f.push_back("component not extremal" + at);

                for (std::uint32_t u : {1u, 2u}) {
                    NestParams p;
                    p.u = u;
                    p.r = s;
                    p.s = s;
                    p.ell = 2 / u;
                    LinearCode nested = nested_code(p, comp);
                    const std::string nat = at + " u=" + std::to_string(u);
                    if (nested.dim() != static_cast<std::size_t>(u) * s * k) {
                        f.push_back("nested dimension wrong" + nat);
                        continue;
                    }
                    Big size = 1;
                    for (std::size_t i = 0; i < nested.dim(); ++i) size *= q;
                    const std::size_t d = size <= budget
                                              ? min_distance(nested, Metric::mc)
                                              : min_distance_via_covers(nested);
                    if (d != want)
                        f.push_back("nested cover distance != " + std::to_string(want) + nat);
                    if (!is_mmcd(nested)) f.push_back("nested not extremal" + nat);
                    if (!dual_mmcd_via_covers(nested))
                        f.push_back("nested dual fails the cover sweep" + nat);
                }
            }
        }
    }
}

void crit6_puncture_shorten(Fails& f) {
    LinearCode C = lrs_code(3, 2, 2, 3);
    const Shape& s = C.shape();
    expect(f, C.dim() == 6, "fixture dim != 6");
    expect(f, min_distance(C, Metric::mc) == 2, "fixture distance != 2");
    expect(f, is_mmcd(C), "fixture not extremal");

    // One erased column in the block carrying the distance slack: the
    // dimension survives, the distance drops by one, extremality persists.
    MultiCover Y0 = MultiCover::none(s);
    Y0.cols[0] = {0};
    PunctureResult punct = puncture(C, Y0);
    expect(f, punct.code.dim() == 6, "punctured dim != 6");
    expect(f, min_distance(punct.code, Metric::mc) == 1, "punctured distance != 1");
    expect(f, is_mmcd(punct.code), "punctured code not extremal");

    // One shortened row in the trailing block: dim drops by that block's
    // column count, distance unchanged.
    MultiCover X1 = MultiCover::none(s);
    X1.rows[1] = {0};
    PunctureResult rows = shorten(C, X1);
    expect(f, rows.code.dim() == 4, "row-shortened dim != 4");
    expect(f, min_distance(rows.code, Metric::mc) == 2, "row-shortened distance != 2");
    expect(f, is_mmcd(rows.code), "row-shortened code not extremal");

    // One shortened column in either block: dim drops by the row count.
    for (std::size_t k : {std::size_t{0}, std::size_t{1}}) {
        MultiCover Yk = MultiCover::none(s);
        Yk.cols[k] = {0};
        PunctureResult cols = shorten(C, Yk);
        const std::string at = " (block " + std::to_string(k) + ")";
        expect(f, cols.code.dim() == 4, "column-shortened dim != 4" + at);
        expect(f, min_distance(cols.code, Metric::mc) == 2,
               "column-shortened distance != 2" + at);
        expect(f, is_mmcd(cols.code), "column-shortened code not extremal" + at);
    }
}

void crit7_decoding_guarantee(Fails& f) {
    Field f5 = Field::make(5, 1);
    LinearCode comp = lrs_code(5, 2, 2, 1);
    NestParams p;
    p.u = 1;
    p.r = 2;
    p.s = 2;
    p.ell = 2;
    LinearCode C = nested_code(p, comp);
    expect(f, min_distance(C, Metric::mc) == 4, "fixture distance != 4");
    const Shape& s = C.shape();

    for (std::size_t t = 0; t <= 1; ++t)
        for (std::size_t rho = 0; 2 * t + rho < 4; ++rho) {
            ChannelStats st = channel_simulate(C, t, rho, 200, 20250);
            if (st.successes != st.trials)
                f.push_back("channel failures at t=" + std::to_string(t) +
                            " rho=" + std::to_string(rho) + ": " +
                            std::to_string(st.trials - st.successes) + "/200");
        }

    // Exhaustive single-line errors against every codeword.
    std::vector<MatrixTuple> codewords;
    enumerate_codewords(C, 1u << 20, [&](const MatrixTuple& cw) {
        codewords.push_back(cw);
        return true;
    });
    expect(f, codewords.size() == 25, "codeword count != 25");

    std::vector<MatrixTuple> errors;
    for (std::size_t b = 0; b < s.blocks(); ++b) {
        for (std::uint32_t r = 0; r < s.m(b); ++r)
            for (Elem v0 = 0; v0 < 5; ++v0)
                for (Elem v1 = 0; v1 < 5; ++v1) {
                    if (v0 == 0 && v1 == 0) continue;
                    MatrixTuple e = MatrixTuple::zero(s);
                    e.blocks[b].at(r, 0) = v0;
                    e.blocks[b].at(r, 1) = v1;
                    errors.push_back(e);
                }
        for (std::uint32_t c = 0; c < s.n(b); ++c)
            for (Elem w0 = 1; w0 < 5; ++w0)
                for (Elem w1 = 1; w1 < 5; ++w1) {
                    MatrixTuple e = MatrixTuple::zero(s);
                    e.blocks[b].at(0, c) = w0;
                    e.blocks[b].at(1, c) = w1;
                    errors.push_back(e);
                }
    }
    expect(f, errors.size() == 160, "weight-1 error enumeration != 160");

    MultiCover none = MultiCover::none(s);
    for (const MatrixTuple& e : errors) {
        if (mc_weight(e) != 1) {
            f.push_back("enumerated error does not have weight 1");
            break;
        }
        for (const MatrixTuple& cw : codewords) {
            DecodeTask task;
            task.code = &C;
            task.erasures = none;
            task.t = 1;
            task.received = tuple_add(f5, cw, e);
            task.known_distance = 4;
            const DecodeOutcome o = bd_decode(task);
            if (o.status != DecodeStatus::decoded || !(o.codeword == cw)) {
                f.push_back("weight-1 sweep decode failure");
                return;
            }
        }
    }

    // Converse at 2t + rho = 4: an explicit indistinguishable channel pair.
    auto w = failure_witness(C, 2, 0);
    if (!w.has_value()) {
        f.push_back("no failure witness at t=2, rho=0");
        return;
    }
    expect(f, C.contains(w->c) && C.contains(w->d) && !(w->c == w->d),
           "witness codewords invalid");
    expect(f, w->x.size() == 0, "witness cover size != 0");
    expect(f, mc_weight(w->e) <= 2 && mc_weight(w->f) <= 2, "witness error weights > 2");
    MatrixTuple lhs = tuple_add(f5, project_out(w->x, w->c), w->e);
    MatrixTuple rhs = tuple_add(f5, project_out(w->x, w->d), w->f);
    expect(f, lhs == rhs, "witness channel outputs differ");
}

void crit8_ell_bounds(Fails& f) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> grid;
    for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u})
        for (std::uint32_t n : {2u, 3u, 4u}) grid.emplace_back(q, n);
    grid.emplace_back(3, 3);
    grid.emplace_back(3, 4);
    grid.emplace_back(2, 4);
    grid.emplace_back(2, 5);

    for (auto [q, n] : grid) {
        for (std::size_t d = 3; d <= 2 * static_cast<std::size_t>(n); ++d) {
            const EllBounds eb = ell_bounds(q, n, d);
            Big qn = 1;
            for (std::uint32_t i = 0; i < n; ++i) qn *= q;
            const Big cap = (qn + static_cast<int>(d) - 2) / n;
            if (!(eb.eq4 <= eb.eq5 && eb.eq5 <= cap))
                f.push_back("bound chain broken at q=" + std::to_string(q) + " n=" +
                            std::to_string(n) + " d=" + std::to_string(d));
            if (!eb.in_tight_regime)
                f.push_back("grid point unexpectedly outside the stated regime q=" +
                            std::to_string(q) + " n=" + std::to_string(n));
        }
    }

    for (std::uint64_t q : {2u, 3u, 5u, 9u})
        for (std::size_t d : {3u, 4u, 5u}) {
            const EllBounds eb = ell_bounds(q, 1, d);
            if (eb.eq4 != Big(q) + static_cast<int>(d) - 2)
                f.push_back("n=1 closed form broken at q=" + std::to_string(q) +
                            " d=" + std::to_string(d));
        }
}

void crit9_bch_dominance(Fails& f) {
    std::size_t applicable = 0;
    for (std::uint64_t q0 : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (std::uint32_t r : {1u, 2u, 3u})
            for (std::uint32_t s : {1u, 2u, 3u})
                for (std::uint32_t u = 1; u <= 5; ++u)
                    for (std::uint32_t ell = 1; ell <= 5; ++ell) {
                        if (u * ell > 15) continue;
                        const std::uint64_t n = static_cast<std::uint64_t>(u) * s;
                        for (std::uint64_t delta = 1; delta <= ell * n; ++delta) {
                            const SrbchResult res =
                                srbch_dimension_bound(q0, r, s, u, ell, delta, 1);
                            if (!res.applicable) continue;
                            ++applicable;
                            if (res.eq7 < res.eq8)
                                f.push_back("eq7 < eq8 at q0=" + std::to_string(q0) + " r=" +
                                            std::to_string(r) + " s=" + std::to_string(s) +
                                            " u=" + std::to_string(u) + " l=" +
                                            std::to_string(ell) + " delta=" +
                                            std::to_string(delta));
                        }
                    }
    expect(f, applicable > 100,
           "only " + std::to_string(applicable) + " admissible parameter sets");
}

void crit10_duality(Fails& f) {
    const std::vector<Shape> shapes = {
        Shape::make({2}, {2}),
        Shape::make({2, 2}, {2, 2}),
        Shape::make({3, 2}, {2, 2}),
        Shape::make({2, 2, 1}, {1, 1, 1}),
    };
    for (std::size_t si = 0; si < shapes.size(); ++si) {
        const Shape& s = shapes[si];
        Field F = si % 2 ? Field::make(3, 1) : Field::make(2, 1);
        Rng rng(7000 + si);
        std::size_t done = 0, attempts = 0;
        while (done < 50 && attempts < 500) {
            ++attempts;
            LinearCode C = LinearCode::make(s, F, [&] {
                std::vector<std::vector<Elem>> rows(1 + rng.below(s.ambient_dim()));
                for (auto& row : rows) {
                    row.resize(s.ambient_dim());
                    for (Elem& x : row) x = static_cast<Elem>(rng.below(F.q()));
                }
                return rows;
            }());
            MultiCover X = random_cover(s, rng.below(s.line_count()), rng);
            try {
                if (!duality_relations_check(C, X)) {
                    f.push_back("duality relation failed on shape #" + std::to_string(si));
                    return;
                }
            } catch (const std::invalid_argument&) {
                continue; // cover deleted every block; draw again
            }
            if (!(dual(dual(C)) == C)) {
                f.push_back("double dual differs on shape #" + std::to_string(si));
                return;
            }
            ++done;
        }
        if (done < 50)
            f.push_back("only " + std::to_string(done) + " usable pairs on shape #" +
                        std::to_string(si));
    }

    // Dualizing commutes with interleaving.
    Field f3 = Field::make(3, 1);
    for (std::uint32_t u : {2u, 3u}) {
        NestParams p;
        p.u = u;
        p.r = 1;
        p.s = 1;
        p.ell = 1;
        Shape cs = component_shape(p);
        Rng rng(7700 + u);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::vector<Elem>> rows(1 + rng.below(cs.ambient_dim()));
            for (auto& row : rows) {
                row.resize(cs.ambient_dim());
                for (Elem& x : row) x = static_cast<Elem>(rng.below(3));
            }
            LinearCode comp = LinearCode::make(cs, f3, rows);
            if (!(dual(nested_code(p, comp)) == nested_code(p, dual(comp)))) {
                f.push_back("dual does not commute with interleaving at u=" +
                            std::to_string(u));
                return;
            }
        }
    }
}

struct Criterion {
    const char* label;
    double budget_seconds;
    void (*run)(Fails&);
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"worked 3x3 example reproduction", 1.0, crit1_worked_example},
        {"cover-weight oracle agreement", 60.0, crit2_weight_oracle},
        {"sphere counts vs brute force", 120.0, crit3_sphere_counts},
        {"full-sphere recursion convention", 10.0, crit4_recursion_convention},
        {"LRS/interleaved extremal pipeline", 300.0, crit5_mmcd_pipeline},
        {"puncture/shorten transitions", 60.0, crit6_puncture_shorten},
        {"decoding guarantee both ways", 120.0, crit7_decoding_guarantee},
        {"block-count bound chain", 5.0, crit8_ell_bounds},
        {"cyclotomic bound dominance", 10.0, crit9_bch_dominance},
        {"duality identities", 60.0, crit10_duality},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Fails f;
        const auto start = std::chrono::steady_clock::now();
        criteria[i].run(f);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criteria[i].budget_seconds)
            f.push_back("over time budget: " + std::to_string(elapsed) + " s > " +
                        std::to_string(criteria[i].budget_seconds) + " s");
        const bool pass = f.empty();
        std::printf("criterion %2zu %-36s %s %8.3f s\n", i + 1, criteria[i].label,
                    pass ? "PASS" : "FAIL", elapsed);
        for (std::size_t k = 0; k < f.size() && k < 3; ++k)
            std::printf("              - %s\n", f[k].c_str());
        if (!pass) ++failures;
    }
    return failures;
}
