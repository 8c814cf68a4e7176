#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcm/construct.hpp"
#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"

namespace mcm {

enum class DecodeStatus { decoded, failure, ambiguous };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::failure;
    MatrixTuple codeword;     // full-shape codeword when decoded
    Big candidates_count = 0; // matches found (>= 2 when ambiguous)
    bool no_guarantee = false;
    std::string detail;
};

struct DecodeTask {
    const LinearCode* code = nullptr;
    MultiCover erasures;  // X
    std::size_t t = 0;    // error budget
    MatrixTuple received; // lives in the X-projected shape
    std::optional<std::size_t> known_distance; // enables the guarantee flag
};

// Exhaustive bounded-distance decoding: the codewords C with
// mc_weight(received - pi_X(C)) <= t decide the outcome (unique -> decoded,
// several -> ambiguous, none -> failure).  Budget q^k <= 2^20.
DecodeOutcome bd_decode(const DecodeTask& task);

// Erasure-only decoding = inverting pi_X on the code by a linear solve.
// Ambiguous exactly when X is not a complementary information multi-cover.
DecodeOutcome erasure_decode(const LinearCode& C, const MultiCover& X,
                             const MatrixTuple& received);

// Decodes the interleaved code by splitting the received word into its u
// component words (with per-word lifted covers) and decoding each with the
// component code; any component failure fails, ambiguity counts multiply.
DecodeOutcome lifted_decode(const NestParams& p, const LinearCode& component,
                            const MultiCover& X, std::size_t t,
                            const MatrixTuple& received);

struct SumrankAdapter {
    std::vector<Mat> A; // (m_i - |X_i|) x m_i row selectors
    std::vector<Mat> B; // n_i x (n_i - |Y_i|) column selectors
};

// Block-diagonal projection pair with A_i C_i B_i = pi_X(C)_i.
SumrankAdapter sumrank_adapter(const Shape& s, const MultiCover& X);
MatrixTuple adapter_project(const Field& F, const SumrankAdapter& ad, const MatrixTuple& C);

// Bounded-distance decoding against the sum-rank weight of the residual;
// corrects every (t, rows-erased, cols-erased) with 2t + rho_R + rho_C <
// d_SR(code).
DecodeOutcome sumrank_bd_decode(const LinearCode& C, const MultiCover& X, std::size_t t,
                                const MatrixTuple& received);

struct ChannelStats {
    std::size_t trials = 0, successes = 0, failures = 0, ambiguities = 0;
    double mean_decode_seconds = 0.0;
};

// Monte-Carlo error-and-erasure channel: per trial a random codeword, a
// random size-rho cover, and a random exact-weight-t error in the projected
// space; deterministic given the seed (per-trial derived streams).
ChannelStats channel_simulate(const LinearCode& C, std::size_t t, std::size_t rho,
                              std::size_t trials, std::uint64_t seed);

struct FailureWitness {
    MatrixTuple c, d; // distinct codewords
    MultiCover x;     // erasure cover of size rho
    MatrixTuple e, f; // weight <= t errors with pi_X(c)+e = pi_X(d)+f
};

// Constructive converse of the decoding guarantee: exists whenever
// 2t + rho >= d_MC(code) (built from a minimum-weight codeword's cover).
std::optional<FailureWitness> failure_witness(const LinearCode& C, std::size_t t,
                                              std::size_t rho);

} // namespace mcm
