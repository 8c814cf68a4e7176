#include "mcm/decode.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mcm/errors.hpp"
#include "mcm/linalg.hpp"

namespace mcm {

namespace {

constexpr std::uint64_t kDecodeBudget = std::uint64_t{1} << 20;

std::vector<std::uint32_t> uncovered_indices(std::uint32_t dim,
                                             const std::vector<std::uint32_t>& covered) {
    std::vector<char> mark(dim, 0);
    for (std::uint32_t c : covered) {
        if (c >= dim || mark[c]) throw std::invalid_argument("shape mismatch");
        mark[c] = 1;
    }
    std::vector<std::uint32_t> out;
    out.reserve(dim - covered.size());
    for (std::uint32_t i = 0; i < dim; ++i)
        if (!mark[i]) out.push_back(i);
    return out;
}

// Inverse of project_out up to the covered entries, which are zero-filled.
MatrixTuple unproject(const Shape& full, const MultiCover& X, const MatrixTuple& projected) {
    if (X.rows.size() != full.blocks() || X.cols.size() != full.blocks() ||
        projected.blocks.size() != full.blocks())
        throw std::invalid_argument("shape mismatch");
    MatrixTuple out = MatrixTuple::zero(full);
    for (std::size_t i = 0; i < full.blocks(); ++i) {
        const auto ur = uncovered_indices(full.m(i), X.rows[i]);
        const auto uc = uncovered_indices(full.n(i), X.cols[i]);
        const Mat& src = projected.blocks[i];
        if (src.rows != ur.size() || src.cols != uc.size())
            throw std::invalid_argument("shape mismatch");
        for (std::size_t r = 0; r < ur.size(); ++r)
            for (std::size_t c = 0; c < uc.size(); ++c)
                out.blocks[i].at(ur[r], uc[c]) = src.at(r, c);
    }
    return out;
}

std::optional<std::size_t> try_min_distance(const LinearCode& C, Metric metric) {
    if (C.dim() == 0) return std::nullopt;
    try {
        return min_distance(C, metric);
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

} // namespace

DecodeOutcome bd_decode(const DecodeTask& task) {
    if (!task.code) throw std::invalid_argument("decode task has no code");
    const LinearCode& C = *task.code;
    const Field& F = C.field();
    if (!(task.received.shape == projected_shape(C.shape(), task.erasures)))
        throw std::invalid_argument("shape mismatch");

    DecodeOutcome out;
    if (task.known_distance)
        out.no_guarantee = 2 * task.t + task.erasures.size() >= *task.known_distance;

    std::size_t found = 0;
    enumerate_codewords(C, kDecodeBudget, [&](const MatrixTuple& cw) {
        const MatrixTuple resid =
            tuple_sub(F, task.received, project_out(task.erasures, cw));
        if (mc_weight(resid) <= task.t) {
            if (++found == 1) out.codeword = cw;
        }
        return true;
    });
    out.candidates_count = found;
    if (found == 0) {
        out.status = DecodeStatus::failure;
        out.detail = "no codeword within radius";
    } else if (found == 1) {
        out.status = DecodeStatus::decoded;
    } else {
        out.status = DecodeStatus::ambiguous;
        out.detail = "multiple codewords within radius";
    }
    return out;
}

DecodeOutcome erasure_decode(const LinearCode& C, const MultiCover& X,
                             const MatrixTuple& received) {
    const Field& F = C.field();
    const Shape proj = projected_shape(C.shape(), X);
    if (!(received.shape == proj)) throw std::invalid_argument("shape mismatch");

    Mat gp(C.dim(), proj.ambient_dim());
    for (std::size_t r = 0; r < C.dim(); ++r) {
        const std::vector<Elem> row = flatten(project_out(X, C.row_tuple(r)));
        for (std::size_t c = 0; c < row.size(); ++c) gp.at(r, c) = row[c];
    }

    DecodeOutcome out;
    const LinSolve sol = solve_left(F, gp, flatten(received));
    if (!sol.consistent) {
        out.status = DecodeStatus::failure;
        out.detail = "inconsistent: received not in punctured code";
        return out;
    }
    out.codeword = C.codeword(sol.x);
    if (sol.freedom > 0) {
        out.status = DecodeStatus::ambiguous;
        out.detail = "ambiguous: cover not complementary-information";
        Big count = 1;
        for (std::size_t i = 0; i < sol.freedom; ++i) count *= F.q();
        out.candidates_count = count;
    } else {
        out.status = DecodeStatus::decoded;
        out.candidates_count = 1;
    }
    return out;
}

DecodeOutcome lifted_decode(const NestParams& p, const LinearCode& component,
                            const MultiCover& X, std::size_t t,
                            const MatrixTuple& received) {
    if (!(component.shape() == component_shape(p)))
        throw std::invalid_argument("shape mismatch");
    const Shape nest = nested_shape(p);
    if (!(received.shape == projected_shape(nest, X)))
        throw std::invalid_argument("shape mismatch");

    const std::vector<MatrixTuple> comp_received = unnest(p, unproject(nest, X, received));
    const std::vector<MultiCover> lifted = lift_cover(p, X);
    const std::optional<std::size_t> comp_d = try_min_distance(component, Metric::mc);

    DecodeOutcome out;
    if (comp_d) out.no_guarantee = 2 * t + X.size() >= *comp_d;

    std::vector<MatrixTuple> words;
    Big count = 1;
    bool any_ambiguous = false;
    for (std::uint32_t w = 0; w < p.u; ++w) {
        DecodeTask task;
        task.code = &component;
        task.erasures = lifted[w];
        task.t = t;
        task.received = project_out(lifted[w], comp_received[w]);
        task.known_distance = comp_d;
        const DecodeOutcome o = bd_decode(task);
        if (o.status == DecodeStatus::failure) {
            out.status = DecodeStatus::failure;
            out.detail = "component " + std::to_string(w) + ": " + o.detail;
            return out;
        }
        any_ambiguous |= o.status == DecodeStatus::ambiguous;
        count *= o.candidates_count;
        words.push_back(o.codeword);
    }
    out.codeword = nest_phi(p, words);
    out.candidates_count = count;
    out.status = any_ambiguous ? DecodeStatus::ambiguous : DecodeStatus::decoded;
    if (any_ambiguous) out.detail = "multiple codewords within radius";
    return out;
}

SumrankAdapter sumrank_adapter(const Shape& s, const MultiCover& X) {
    if (X.rows.size() != s.blocks() || X.cols.size() != s.blocks())
        throw std::invalid_argument("shape mismatch");
    SumrankAdapter ad;
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        const auto ur = uncovered_indices(s.m(i), X.rows[i]);
        const auto uc = uncovered_indices(s.n(i), X.cols[i]);
        Mat A(ur.size(), s.m(i));
        for (std::size_t r = 0; r < ur.size(); ++r) A.at(r, ur[r]) = 1;
        Mat B(s.n(i), uc.size());
        for (std::size_t c = 0; c < uc.size(); ++c) B.at(uc[c], c) = 1;
        ad.A.push_back(std::move(A));
        ad.B.push_back(std::move(B));
    }
    return ad;
}

MatrixTuple adapter_project(const Field& F, const SumrankAdapter& ad, const MatrixTuple& C) {
    if (ad.A.size() != C.blocks.size() || ad.B.size() != C.blocks.size())
        throw std::invalid_argument("shape mismatch");
    std::vector<std::uint32_t> ms, ns;
    std::vector<Mat> blocks;
    for (std::size_t i = 0; i < C.blocks.size(); ++i) {
        Mat r = mat_mul(F, mat_mul(F, ad.A[i], C.blocks[i]), ad.B[i]);
        ms.push_back(static_cast<std::uint32_t>(r.rows));
        ns.push_back(static_cast<std::uint32_t>(r.cols));
        blocks.push_back(std::move(r));
    }
    MatrixTuple out;
    out.shape = Shape::unchecked(std::move(ms), std::move(ns));
    out.blocks = std::move(blocks);
    return out;
}

DecodeOutcome sumrank_bd_decode(const LinearCode& C, const MultiCover& X, std::size_t t,
                                const MatrixTuple& received) {
    const Field& F = C.field();
    if (!(received.shape == projected_shape(C.shape(), X)))
        throw std::invalid_argument("shape mismatch");
    const SumrankAdapter ad = sumrank_adapter(C.shape(), X);
    const std::optional<std::size_t> dsr = try_min_distance(C, Metric::sr);

    DecodeOutcome out;
    if (dsr) out.no_guarantee = 2 * t + X.size() >= *dsr;

    std::size_t found = 0;
    enumerate_codewords(C, kDecodeBudget, [&](const MatrixTuple& cw) {
        const MatrixTuple resid = tuple_sub(F, received, adapter_project(F, ad, cw));
        if (tuple_weight(F, resid, Metric::sr) <= t) {
            if (++found == 1) out.codeword = cw;
        }
        return true;
    });
    out.candidates_count = found;
    if (found == 0) {
        out.status = DecodeStatus::failure;
        out.detail = "no codeword within radius";
    } else if (found == 1) {
        out.status = DecodeStatus::decoded;
    } else {
        out.status = DecodeStatus::ambiguous;
        out.detail = "multiple codewords within radius";
    }
    return out;
}

ChannelStats channel_simulate(const LinearCode& C, std::size_t t, std::size_t rho,
                              std::size_t trials, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    const Field& F = C.field();
    ChannelStats st;
    st.trials = trials;
    double total = 0.0;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng(seed, trial);
        std::vector<Elem> msg(C.dim());
        for (Elem& m : msg) m = static_cast<Elem>(rng.below(F.q()));
        const MatrixTuple cw = C.codeword(msg);

        MultiCover X = MultiCover::none(C.shape());
        Shape proj = C.shape();
        for (std::size_t attempt = 0;; ++attempt) {
            X = random_cover(C.shape(), rho, rng);
            proj = projected_shape(C.shape(), X);
            if (t <= proj.max_weight()) break;
            if (attempt >= 10000)
                throw InfeasibleError("error weight unreachable after erasures");
        }
        const MatrixTuple err = random_error(proj, F, t, rng);

        DecodeTask task;
        task.code = &C;
        task.erasures = X;
        task.t = t;
        task.received = tuple_add(F, project_out(X, cw), err);

        const auto t0 = clock::now();
        const DecodeOutcome o = bd_decode(task);
        total += std::chrono::duration<double>(clock::now() - t0).count();

        if (o.status == DecodeStatus::decoded && o.codeword == cw)
            ++st.successes;
        else if (o.status == DecodeStatus::ambiguous)
            ++st.ambiguities;
        else
            ++st.failures;
    }
    st.mean_decode_seconds = trials ? total / static_cast<double>(trials) : 0.0;
    return st;
}

std::optional<FailureWitness> failure_witness(const LinearCode& C, std::size_t t,
                                              std::size_t rho) {
    const Shape& s = C.shape();
    const Field& F = C.field();
    if (rho > s.line_count()) throw std::invalid_argument("cover size exceeds line count");
    if (C.dim() == 0) return std::nullopt;

    MatrixTuple low;
    std::size_t low_w = SIZE_MAX;
    bool skip_zero = true;
    enumerate_codewords(C, kDecodeBudget, [&](const MatrixTuple& cw) {
        if (skip_zero) {
            skip_zero = false;
            return true;
        }
        const std::size_t w = mc_weight(cw);
        if (w < low_w) {
            low_w = w;
            low = cw;
        }
        return low_w > 1;
    });
    if (2 * t + rho < low_w) return std::nullopt;

    // Global line ids (block rows then cols) of a minimum cover of `low`.
    const MultiCover M = min_cover(low);
    std::vector<std::size_t> mlines;
    std::size_t base = 0;
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        for (std::uint32_t r : M.rows[i]) mlines.push_back(base + r);
        for (std::uint32_t c : M.cols[i]) mlines.push_back(base + s.m(i) + c);
        base += s.m(i) + s.n(i);
    }
    std::vector<char> in_m(s.line_count(), 0);
    for (std::size_t id : mlines) in_m[id] = 1;

    // Erase as much of the cover as rho allows, then pad with unrelated lines.
    const std::size_t from_m = std::min(rho, mlines.size());
    std::vector<std::size_t> xlines(mlines.begin(), mlines.begin() + from_m);
    for (std::size_t id = 0; xlines.size() < rho; ++id) {
        if (id >= s.line_count()) throw std::logic_error("witness pad exhausted");
        if (!in_m[id]) xlines.push_back(id);
    }
    std::sort(xlines.begin(), xlines.end());
    const MultiCover X = cover_from_lines(s, xlines);

    // Remaining cover lines (<= 2t of them) split into the two error halves.
    std::vector<std::size_t> rest(mlines.begin() + from_m, mlines.end());
    if (rest.size() > 2 * t) throw std::logic_error("witness split failed");
    const std::size_t half = std::min(t, rest.size());

    // Per-block projected indices of the half-1 lines.
    const std::size_t blocks = s.blocks();
    std::vector<std::vector<char>> row_in_e1(blocks), col_in_e1(blocks);
    std::vector<std::vector<std::uint32_t>> urows(blocks), ucols(blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
        urows[i] = uncovered_indices(s.m(i), X.rows[i]);
        ucols[i] = uncovered_indices(s.n(i), X.cols[i]);
        row_in_e1[i].assign(urows[i].size(), 0);
        col_in_e1[i].assign(ucols[i].size(), 0);
    }
    for (std::size_t k = 0; k < half; ++k) {
        std::size_t id = rest[k], off = 0;
        for (std::size_t i = 0; i < blocks; ++i) {
            const std::size_t span = s.m(i) + s.n(i);
            if (id < off + span) {
                const std::size_t local = id - off;
                if (local < s.m(i)) {
                    const auto it =
                        std::find(urows[i].begin(), urows[i].end(), (std::uint32_t)local);
                    row_in_e1[i][it - urows[i].begin()] = 1;
                } else {
                    const auto it = std::find(ucols[i].begin(), ucols[i].end(),
                                              (std::uint32_t)(local - s.m(i)));
                    col_in_e1[i][it - ucols[i].begin()] = 1;
                }
                break;
            }
            off += span;
        }
    }

    const MatrixTuple proj = project_out(X, low);
    MatrixTuple e1 = MatrixTuple::zero(proj.shape);
    for (std::size_t i = 0; i < blocks; ++i)
        for (std::size_t r = 0; r < proj.blocks[i].rows; ++r)
            for (std::size_t c = 0; c < proj.blocks[i].cols; ++c)
                if (row_in_e1[i][r] || col_in_e1[i][c])
                    e1.blocks[i].at(r, c) = proj.blocks[i].at(r, c);
    const MatrixTuple e2 = tuple_sub(F, proj, e1);

    FailureWitness w;
    w.c = MatrixTuple::zero(s);
    w.d = low;
    w.x = X;
    w.e = e1;                                            //  pi_X(c) + e
    w.f = tuple_sub(F, MatrixTuple::zero(proj.shape), e2); // = pi_X(d) + f
    return w;
}

} // namespace mcm
