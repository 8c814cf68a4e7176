#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "mcm/construct.hpp"
#include "mcm/decode.hpp"
#include "mcm/errors.hpp"
#include "mcm/ffield.hpp"
#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"

using namespace mcm;

namespace {

LinearCode worked_example() {
    Shape s = Shape::make({3}, {3});
    Field f2 = Field::make(2, 1);
    return LinearCode::make(s, f2,
                            {
                                {1, 1, 1, 1, 0, 0, 1, 0, 0},
                                {0, 1, 0, 1, 1, 1, 0, 1, 0},
                                {0, 0, 1, 0, 0, 1, 1, 1, 1},
                            });
}

// dim 2 code on two 2x2 blocks over F_5 with d_MC = d_SR = 4.
LinearCode wide_distance_code() {
    Field f5 = Field::make(5, 1);
    return lrs_matrix_code(lrs_generator(LrsParams::make(f5, 2, 2, 1)));
}

DecodeTask task_of(const LinearCode& C, const MultiCover& X, std::size_t t,
                   const MatrixTuple& received, std::size_t known_d) {
    DecodeTask task;
    task.code = &C;
    task.erasures = X;
    task.t = t;
    task.received = received;
    task.known_distance = known_d;
    return task;
}

} // namespace

TEST_CASE("erasure decoding on the 3x3 example") {
    LinearCode C = worked_example();
    const Shape& s = C.shape();

    // Row 0 plus column 0 leaves a free codeword direction: two candidates.
    MultiCover X = MultiCover::none(s);
    X.rows[0] = {0};
    X.cols[0] = {0};
    DecodeOutcome o = erasure_decode(C, X, MatrixTuple::zero(projected_shape(s, X)));
    CHECK(o.status == DecodeStatus::ambiguous);
    CHECK(o.candidates_count == 2);
    CHECK(o.detail == "ambiguous: cover not complementary-information");
    CHECK(C.contains(o.codeword));

    // A single erased row is below the distance, so inversion is unique; the
    // image accounts for exactly |C| of the projected words, the rest fail.
    MultiCover R = MultiCover::none(s);
    R.rows[0] = {0};
    Shape proj = projected_shape(s, R);
    std::size_t decoded = 0, failed = 0;
    for_each_tuple(proj, C.field(), [&](const MatrixTuple& rec) {
        DecodeOutcome out = erasure_decode(C, R, rec);
        if (out.status == DecodeStatus::decoded) {
            ++decoded;
            CHECK(project_out(R, out.codeword) == rec);
            CHECK(out.candidates_count == 1);
        } else {
            ++failed;
            CHECK(out.status == DecodeStatus::failure);
            CHECK(out.detail == "inconsistent: received not in punctured code");
        }
        return true;
    });
    CHECK(decoded == 8);
    CHECK(failed == 56);

    CHECK_THROWS_WITH_AS((void)erasure_decode(C, R, MatrixTuple::zero(s)), "shape mismatch",
                         std::invalid_argument);
}

TEST_CASE("erasure ambiguity matches cover classification") {
    Rng rng(345);
    Field f2 = Field::make(2, 1);
    Shape s = Shape::make({2, 2}, {2, 1});
    for (int trial = 0; trial < 10; ++trial) {
        LinearCode C = testutil::random_code(s, f2, 1 + rng.below(4), rng);
        if (C.dim() == 0) continue;
        for (std::size_t size = 0; size <= 3; ++size) {
            for_each_cover_of_size(s, size, [&](const MultiCover& X) {
                std::vector<Elem> msg(C.dim());
                for (Elem& m : msg) m = static_cast<Elem>(rng.below(2));
                MatrixTuple cw = C.codeword(msg);
                DecodeOutcome o = erasure_decode(C, X, project_out(X, cw));
                bool comp = classify_cover(C, X).is_comp_info;
                CHECK(o.status == (comp ? DecodeStatus::decoded : DecodeStatus::ambiguous));
                if (comp) CHECK(o.codeword == cw);
                // Total candidates equals the support-intersection count.
                Big expect = 1;
                for (std::size_t i = 0; i < support_intersection_dim(C, X); ++i) expect *= 2;
                CHECK(o.candidates_count == expect);
                return true;
            });
        }
    }
}

TEST_CASE("bounded-distance decoding within the guarantee") {
    LinearCode C = wide_distance_code();
    REQUIRE(min_distance(C, Metric::mc) == 4);
    const Field& F = C.field();
    const Shape& s = C.shape();
    Rng rng(777);

    for (std::size_t t = 0; t <= 1; ++t) {
        for (std::size_t rho = 0; 2 * t + rho < 4; ++rho) {
            for (int trial = 0; trial < 30; ++trial) {
                std::vector<Elem> msg = {static_cast<Elem>(rng.below(5)),
                                         static_cast<Elem>(rng.below(5))};
                MatrixTuple cw = C.codeword(msg);
                MultiCover X = random_cover(s, rho, rng);
                Shape proj = projected_shape(s, X);
                MatrixTuple err = random_error(proj, F, t, rng);
                MatrixTuple received = tuple_add(F, project_out(X, cw), err);

                DecodeOutcome o = bd_decode(task_of(C, X, t, received, 4));
                CHECK(o.status == DecodeStatus::decoded);
                CHECK(o.codeword == cw);
                CHECK(!o.no_guarantee);
                CHECK(o.candidates_count == 1);
            }
        }
    }

    // Outside the guarantee the flag flips even when decoding happens to work.
    MultiCover none = MultiCover::none(s);
    DecodeOutcome loose =
        bd_decode(task_of(C, none, 2, MatrixTuple::zero(s), 4));
    CHECK(loose.no_guarantee);
    CHECK(loose.status == DecodeStatus::decoded); // zero is the unique match here
    CHECK(loose.codeword.is_zero());

    DecodeTask empty;
    CHECK_THROWS_WITH_AS((void)bd_decode(empty), "decode task has no code",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)bd_decode(task_of(C, none, 0, MatrixTuple::zero(Shape::make({2}, {2})), 4)),
        "shape mismatch", std::invalid_argument);

    LinearCode big = LinearCode::full_space(Shape::make({5, 5}, {5, 5}), Field::make(2, 1));
    MultiCover bigx = MultiCover::none(big.shape());
    CHECK_THROWS_WITH_AS(
        (void)bd_decode(task_of(big, bigx, 0, MatrixTuple::zero(big.shape()), 1)),
        "enumeration budget exceeded", InfeasibleError);
}

TEST_CASE("bounded-distance and erasure decoders agree at t = 0") {
    Rng rng(9090);
    Field f3 = Field::make(3, 1);
    Shape s = Shape::make({2, 2}, {2, 2});
    for (int trial = 0; trial < 40; ++trial) {
        LinearCode C = testutil::random_code(s, f3, 1 + rng.below(3), rng);
        if (C.dim() == 0) continue;
        MultiCover X = random_cover(s, rng.below(4), rng);
        std::vector<Elem> msg(C.dim());
        for (Elem& m : msg) m = static_cast<Elem>(rng.below(3));
        MatrixTuple received = project_out(X, C.codeword(msg));

        DecodeOutcome er = erasure_decode(C, X, received);
        DecodeOutcome bd = bd_decode(task_of(C, X, 0, received, 1));
        CHECK(er.status == bd.status);
        CHECK(er.candidates_count == bd.candidates_count);
        if (er.status == DecodeStatus::decoded) CHECK(er.codeword == bd.codeword);
    }
}

TEST_CASE("channel simulation") {
    LinearCode C = wide_distance_code();

    // Inside the guarantee region every trial must round-trip.
    for (auto [t, rho] : std::vector<std::pair<std::size_t, std::size_t>>{
             {0, 0}, {0, 3}, {1, 0}, {1, 1}}) {
        ChannelStats st = channel_simulate(C, t, rho, 40, 4242);
        CHECK(st.trials == 40);
        CHECK(st.successes == 40);
        CHECK(st.failures == 0);
        CHECK(st.ambiguities == 0);
        CHECK(st.mean_decode_seconds >= 0.0);
    }

    // Determinism in the seed.
    ChannelStats a = channel_simulate(C, 1, 1, 25, 99);
    ChannelStats b = channel_simulate(C, 1, 1, 25, 99);
    CHECK(a.successes == b.successes);
    CHECK(a.failures == b.failures);
    CHECK(a.ambiguities == b.ambiguities);

    // At 2t + rho = d the witness below shows failures are possible, but the
    // channel may still often succeed; just check the tally is consistent.
    ChannelStats edge = channel_simulate(C, 2, 0, 25, 7);
    CHECK(edge.successes + edge.failures + edge.ambiguities == edge.trials);
}

TEST_CASE("failure witnesses at and beyond the radius") {
    LinearCode C = wide_distance_code();
    const Field& F = C.field();

    CHECK(!failure_witness(C, 1, 1).has_value()); // 2t + rho = 3 < 4
    CHECK(!failure_witness(C, 0, 3).has_value());

    for (auto [t, rho] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 0}, {1, 2}, {2, 1}, {0, 4}}) {
        auto w = failure_witness(C, t, rho);
        REQUIRE(w.has_value());
        CHECK(C.contains(w->c));
        CHECK(C.contains(w->d));
        CHECK(!(w->c == w->d));
        CHECK(w->x.size() == rho);
        CHECK(mc_weight(w->e) <= t);
        CHECK(mc_weight(w->f) <= t);
        MatrixTuple lhs = tuple_add(F, project_out(w->x, w->c), w->e);
        MatrixTuple rhs = tuple_add(F, project_out(w->x, w->d), w->f);
        CHECK(lhs == rhs);

        // The witness is a live confusion: handing its channel output to the
        // decoder cannot produce a unique answer.
        DecodeOutcome o = bd_decode(task_of(C, w->x, t, lhs, 4));
        CHECK(o.status == DecodeStatus::ambiguous);
        CHECK(o.candidates_count >= 2);
        CHECK(o.no_guarantee);
    }

    CHECK(!failure_witness(LinearCode::zero_code(C.shape(), F), 3, 0).has_value());
    CHECK_THROWS_WITH_AS((void)failure_witness(C, 0, 9), "cover size exceeds line count",
                         std::invalid_argument);
}

TEST_CASE("interleaved decoding") {
    Field f5 = Field::make(5, 1);
    LinearCode comp = lrs_matrix_code(lrs_generator(LrsParams::make(f5, 1, 2, 1)));
    REQUIRE(comp.dim() == 1);
    REQUIRE(min_distance(comp, Metric::mc) == 2);

    NestParams p;
    p.u = 2;
    p.r = 1;
    p.s = 1;
    p.ell = 1;
    LinearCode nested = nested_code(p, comp);
    const Shape ns = nested_shape(p);
    Rng rng(606);

    // Within the component guarantee the interleaved decoder recovers the
    // woven word and matches plain bounded-distance decoding on the nested
    // code (which has the same minimum distance here).
    for (std::size_t rho = 0; rho <= 1; ++rho) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<MatrixTuple> words;
            for (std::uint32_t w = 0; w < p.u; ++w) {
                Elem m = static_cast<Elem>(rng.below(5));
                words.push_back(comp.codeword({m}));
            }
            MatrixTuple cw = nest_phi(p, words);
            MultiCover X = random_cover(ns, rho, rng);
            MatrixTuple received = project_out(X, cw);

            DecodeOutcome lo = lifted_decode(p, comp, X, 0, received);
            CHECK(lo.status == DecodeStatus::decoded);
            CHECK(lo.codeword == cw);
            CHECK(!lo.no_guarantee);

            DecodeOutcome bo = bd_decode(task_of(nested, X, 0, received, 2));
            CHECK(bo.status == lo.status);
            CHECK(bo.codeword == lo.codeword);
        }
    }

    // One bad component fails the whole word and names the culprit.
    MatrixTuple bad = MatrixTuple::zero(ns);
    bad.blocks[0].at(0, 0) = 1;
    bad.blocks[0].at(1, 1) = 2; // word 0 becomes (1, 2), not a repetition pair
    DecodeOutcome fail = lifted_decode(p, comp, MultiCover::none(ns), 0, bad);
    CHECK(fail.status == DecodeStatus::failure);
    CHECK(fail.detail == "component 0: no codeword within radius");

    // Per-component ambiguity counts multiply.
    DecodeOutcome amb = lifted_decode(p, comp, MultiCover::none(ns), 2, MatrixTuple::zero(ns));
    CHECK(amb.status == DecodeStatus::ambiguous);
    CHECK(amb.candidates_count == 25);
    CHECK(amb.no_guarantee);
    DecodeOutcome direct = bd_decode(task_of(nested, MultiCover::none(ns), 2,
                                             MatrixTuple::zero(ns), 2));
    CHECK(direct.candidates_count == 25);

    CHECK_THROWS_WITH_AS(
        (void)lifted_decode(p, nested, MultiCover::none(ns), 0, MatrixTuple::zero(ns)),
        "shape mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)lifted_decode(p, comp, MultiCover::none(ns), 0,
                            MatrixTuple::zero(component_shape(p))),
        "shape mismatch", std::invalid_argument);
}

TEST_CASE("sum-rank adapter and decoder") {
    LinearCode C = wide_distance_code();
    const Field& F = C.field();
    const Shape& s = C.shape();
    REQUIRE(min_distance(C, Metric::sr) == 4);
    Rng rng(818);

    // The selector pair reproduces the line-deletion projection exactly.
    for (int trial = 0; trial < 30; ++trial) {
        MultiCover X = random_cover(s, rng.below(s.line_count() + 1), rng);
        SumrankAdapter ad = sumrank_adapter(s, X);
        for (std::size_t i = 0; i < s.blocks(); ++i) {
            CHECK(ad.A[i].rows == s.m(i) - X.rows[i].size());
            CHECK(ad.A[i].cols == s.m(i));
            CHECK(ad.B[i].rows == s.n(i));
            CHECK(ad.B[i].cols == s.n(i) - X.cols[i].size());
        }
        MatrixTuple T = random_tuple(s, F, rng);
        CHECK(adapter_project(F, ad, T) == project_out(X, T));
    }

    // Low-rank errors below the sum-rank radius decode even when their cover
    // weight is larger; the cover-metric decoder agrees wherever its own
    // radius also applies.
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Elem> msg = {static_cast<Elem>(rng.below(5)),
                                 static_cast<Elem>(rng.below(5))};
        MatrixTuple cw = C.codeword(msg);
        std::size_t rho = rng.below(2);
        MultiCover X = random_cover(s, rho, rng);
        Shape proj = projected_shape(s, X);

        // Rank-one error in the first block: every entry equal, sum-rank 1.
        MatrixTuple err = MatrixTuple::zero(proj);
        Elem v = static_cast<Elem>(1 + rng.below(4));
        for (std::size_t r = 0; r < err.blocks[0].rows; ++r)
            for (std::size_t c = 0; c < err.blocks[0].cols; ++c) err.blocks[0].at(r, c) = v;
        std::size_t t_sr = tuple_weight(F, err, Metric::sr);
        CHECK(t_sr <= 1);

        MatrixTuple received = tuple_add(F, project_out(X, cw), err);
        DecodeOutcome o = sumrank_bd_decode(C, X, 1, received);
        CHECK(o.status == DecodeStatus::decoded);
        CHECK(o.codeword == cw);
        CHECK(!o.no_guarantee);

        std::size_t t_mc = mc_weight(err);
        if (2 * t_mc + rho < 4) {
            DecodeOutcome m = bd_decode(task_of(C, X, t_mc, received, 4));
            CHECK(m.status == DecodeStatus::decoded);
            CHECK(m.codeword == cw);
        }
    }

    DecodeOutcome guard = sumrank_bd_decode(C, MultiCover::none(s), 2, MatrixTuple::zero(s));
    CHECK(guard.no_guarantee);
    CHECK_THROWS_WITH_AS(
        (void)sumrank_bd_decode(C, MultiCover::none(s), 0, MatrixTuple::zero(Shape::make({2}, {2}))),
        "shape mismatch", std::invalid_argument);
}
