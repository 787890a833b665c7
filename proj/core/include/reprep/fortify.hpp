#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reprep/game.hpp"

namespace reprep {

struct RegularityReport {
    bool regular = false;
    int d = -1;                    // meaningful iff regular
    std::int64_t parallel_count = 0; // sum over pairs of (multiplicity - 1)
    Rat bound;                     // the admitted parallel-edge budget
    bool pass = false;             // regular && parallel_count <= bound
};

/// Regularity (all X and Y degrees equal, with multiplicity) plus the
/// parallel-edge budget eps*|E|.
RegularityReport check_regular_parallel(const Game& game, const Rat& eps);

struct MixingReport {
    bool pass = false;
    bool exhaustive = true;   // sampled mode can only refute
    Rat worst_deviation;      // relative to the target density d/|Y|
    std::vector<int> worst_s; // witness rectangle, sorted
    std::vector<int> worst_t;
    std::int64_t rectangles_considered = 0;
};

enum class CheckMode { Exact, Sampled };

/// Worst relative deviation of |E cap (S x T)| / (|S||T|) from d/|Y| over
/// rectangles with |S| >= delta|X| and |T| >= delta|Y|; passes iff it stays
/// within eta. Exhaustive mode enumerates every S and optimizes T by sorted
/// row sums, which reaches the exact extremes; requires 2^|X| + 2^|Y| within
/// the subset cap. Sampled mode draws seeded random rectangles and is
/// refute-only.
MixingReport mixing_check(const Game& game, const Rat& delta, const Rat& eta,
                          CheckMode mode = CheckMode::Exact,
                          std::uint64_t seed = 0, int samples = 1024,
                          const Caps& caps = {});

struct FortifyWitness {
    std::vector<int> S; // sorted, parent indices
    std::vector<int> T;
    Rat rect_value;
    Strategy rect_strategy; // on the reindexed rectangle game
};

struct FortifyReport {
    bool pass = false;
    bool exhaustive = true;
    Rat base_value;
    std::optional<FortifyWitness> witness;
    std::int64_t rectangles_checked = 0;
};

/// Fortification: every rectangle with both sides of relative size >= delta
/// (and at least one edge) must have value <= val(G) + eps. Edgeless
/// rectangles are skipped. The first failing rectangle in ascending bitmask
/// order becomes the witness. Sampled mode is refute-only.
FortifyReport fortification_check(const Game& game, const Rat& delta,
                                  const Rat& eps,
                                  CheckMode mode = CheckMode::Exact,
                                  std::uint64_t seed = 0, int samples = 256,
                                  const Caps& caps = {});

/// Re-verifies a fortification witness independently: rebuilds the rectangle,
/// checks that the certifying strategy attains rect_value and that
/// value_exact agrees.
bool reverify_fortify_witness(const Game& game, const FortifyWitness& w,
                              const Caps& caps = {});

struct HypothesisReport {
    Rat delta;  // threshold the checks ran at
    Rat eps;
    RegularityReport regularity;
    MixingReport mixing;
    Rat value;
    Rat value_bound; // 1 - 20*eps
    bool value_pass = false;
    std::optional<FortifyReport> fortification;
    bool log_clamp_engaged = false; // ceil(log2 Phi)^2 clamped up to 1

    bool all_pass() const {
        return regularity.pass && mixing.pass && value_pass &&
               (!fortification || fortification->pass);
    }
};

/// delta* = 1 / (16 * Phi * max(1, ceil(log2 Phi)^2)). Phi >= 1.
Rat fortification_delta(const Rat& phi);

/// Bundles the four condition checks at (delta*, eps) where delta* is derived
/// from the blowup bound Phi. eps must lie in (0, 1/23) exactly.
HypothesisReport theorem_hypotheses(const Game& game, const Rat& phi,
                                    const Rat& eps, const Caps& caps = {});

/// Smallest subset size m with m >= threshold * total (exact rationals).
int min_subset_size(const Rat& threshold, int total);

} // namespace reprep
