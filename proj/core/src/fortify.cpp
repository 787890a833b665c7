#include "reprep/fortify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "reprep/rng.hpp"

namespace reprep {

RegularityReport check_regular_parallel(const Game& game, const Rat& eps) {
    game.validate();
    RegularityReport rep;
    rep.bound = eps * Rat(std::int64_t(game.size()));

    std::vector<int> dx(game.num_x, 0), dy(game.num_y, 0);
    std::map<std::pair<int, int>, std::int64_t> mult;
    for (const auto& e : game.edges) {
        ++dx[e.first];
        ++dy[e.second];
        ++mult[e];
    }
    bool regular = true;
    int d = dx.empty() ? 0 : dx[0];
    for (int v : dx) regular = regular && v == d;
    for (int v : dy) regular = regular && v == d;
    rep.regular = regular;
    rep.d = regular ? d : -1;

    for (const auto& [edge, m] : mult)
        if (m > 1) rep.parallel_count += m - 1;

    rep.pass = rep.regular && Rat(rep.parallel_count) <= rep.bound;
    return rep;
}

int min_subset_size(const Rat& threshold, int total) {
    Rat bound = threshold * Rat(total);
    std::int64_t m = bound.ceil();
    if (m < 1) m = 1;
    return int(m);
}

namespace {

// Relative deviation of (count / (|S| * m)) from d / |Y|:
// | count * |Y| - d * |S| * m | / (d * |S| * m).
Rat relative_deviation(std::int64_t count, std::int64_t s_size, std::int64_t m,
                       std::int64_t d, std::int64_t num_y) {
    Rat target_num = Rat(d) * Rat(s_size) * Rat(m);
    return ((Rat(count) * Rat(num_y) - target_num) / target_num).abs();
}

std::vector<int> bits_of_mask(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

} // namespace

MixingReport mixing_check(const Game& game, const Rat& delta, const Rat& eta,
                          CheckMode mode, std::uint64_t seed, int samples,
                          const Caps& caps) {
    game.validate();
    RegularityReport reg = check_regular_parallel(game, Rat(1));
    if (!reg.regular)
        throw Error(Errc::NotRegular, "mixing check requires a regular game");
    const std::int64_t d = reg.d;

    MixingReport rep;
    rep.worst_deviation = Rat(0);

    const int min_s = min_subset_size(delta, game.num_x);
    const int min_t = min_subset_size(delta, game.num_y);
    if (min_s > game.num_x || min_t > game.num_y) {
        rep.pass = true; // no qualifying rectangle
        rep.exhaustive = mode == CheckMode::Exact;
        return rep;
    }

    // multiplicity rows: row[x][y]
    std::vector<std::vector<std::int64_t>> row(
        game.num_x, std::vector<std::int64_t>(game.num_y, 0));
    for (const auto& e : game.edges) ++row[e.first][e.second];

    auto consider = [&](const std::vector<int>& S, const std::vector<int>& T,
                        std::int64_t count) {
        Rat dev = relative_deviation(count, std::int64_t(S.size()),
                                     std::int64_t(T.size()), d, game.num_y);
        ++rep.rectangles_considered;
        if (dev > rep.worst_deviation) {
            rep.worst_deviation = dev;
            rep.worst_s = S;
            rep.worst_t = T;
        }
    };

    if (mode == CheckMode::Exact) {
        if (game.num_x >= 63 || game.num_y >= 63 ||
            (std::uint64_t(1) << game.num_x) + (std::uint64_t(1) << game.num_y) >
                caps.subset_space)
            throw Error(Errc::SearchSpaceTooLarge,
                        "2^|X| + 2^|Y| exceeds subset cap");

        std::vector<std::int64_t> colsum(game.num_y);
        std::vector<int> order(game.num_y);
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << game.num_x);
             ++mask) {
            std::vector<int> S = bits_of_mask(mask);
            if (int(S.size()) < min_s) continue;
            std::fill(colsum.begin(), colsum.end(), 0);
            for (int x : S)
                for (int y = 0; y < game.num_y; ++y) colsum[y] += row[x][y];
            std::iota(order.begin(), order.end(), 0);
            // descending column sums; ties toward smaller index
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return colsum[a] > colsum[b];
            });
            // prefix scans: the densest T of size m is the top-m columns, the
            // sparsest the bottom-m; the deviation is V-shaped in the count,
            // so the extremes dominate every other T of the same size.
            std::int64_t run = 0;
            std::vector<std::int64_t> top_prefix(game.num_y + 1, 0);
            for (int i = 0; i < game.num_y; ++i) {
                run += colsum[order[i]];
                top_prefix[i + 1] = run;
            }
            for (int m = min_t; m <= game.num_y; ++m) {
                std::int64_t hi = top_prefix[m];
                std::int64_t lo = top_prefix[game.num_y] -
                                  top_prefix[game.num_y - m];
                std::vector<int> t_hi(order.begin(), order.begin() + m);
                std::sort(t_hi.begin(), t_hi.end());
                consider(S, t_hi, hi);
                std::vector<int> t_lo(order.end() - m, order.end());
                std::sort(t_lo.begin(), t_lo.end());
                consider(S, t_lo, lo);
            }
        }
        rep.exhaustive = true;
    } else {
        Rng rng(seed);
        for (int i = 0; i < samples; ++i) {
            int s_size = min_s + int(rng.bounded(std::uint64_t(game.num_x - min_s + 1)));
            int t_size = min_t + int(rng.bounded(std::uint64_t(game.num_y - min_t + 1)));
            std::vector<int> xs = identity_permutation(game.num_x);
            std::vector<int> ys = identity_permutation(game.num_y);
            rng.shuffle(xs);
            rng.shuffle(ys);
            std::vector<int> S(xs.begin(), xs.begin() + s_size);
            std::vector<int> T(ys.begin(), ys.begin() + t_size);
            std::sort(S.begin(), S.end());
            std::sort(T.begin(), T.end());
            std::int64_t count = 0;
            for (int x : S)
                for (int y : T) count += row[x][y];
            consider(S, T, count);
        }
        rep.exhaustive = false;
    }

    rep.pass = rep.worst_deviation <= eta;
    return rep;
}

namespace {

std::vector<std::uint64_t> qualifying_masks(int n, int min_size) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask)
        if (int(__builtin_popcountll(mask)) >= min_size) out.push_back(mask);
    return out;
}

} // namespace

FortifyReport fortification_check(const Game& game, const Rat& delta,
                                  const Rat& eps, CheckMode mode,
                                  std::uint64_t seed, int samples,
                                  const Caps& caps) {
    game.validate();
    FortifyReport rep;
    rep.base_value = value_exact(game, caps).value;
    Rat threshold = rep.base_value + eps;

    const int min_s = min_subset_size(delta, game.num_x);
    const int min_t = min_subset_size(delta, game.num_y);
    if (min_s > game.num_x || min_t > game.num_y) {
        rep.pass = true;
        rep.exhaustive = mode == CheckMode::Exact;
        return rep;
    }

    auto check_rect = [&](const std::vector<int>& S, const std::vector<int>& T) {
        RectSubgame sub;
        try {
            sub = rect_subgame(game, S, T);
        } catch (const Error& e) {
            if (e.code() == Errc::EmptyRectangle) return true; // skipped
            throw;
        }
        ++rep.rectangles_checked;
        ValueResult v = value_exact(sub.game, caps);
        if (v.value <= threshold) return true;
        FortifyWitness w;
        w.S = sub.orig_x;
        w.T = sub.orig_y;
        w.rect_value = v.value;
        w.rect_strategy = v.witness;
        rep.witness = std::move(w);
        return false;
    };

    if (mode == CheckMode::Exact) {
        if (game.num_x >= 63 || game.num_y >= 63)
            throw Error(Errc::SearchSpaceTooLarge, "vertex sets too large");
        auto s_masks = qualifying_masks(game.num_x, min_s);
        auto t_masks = qualifying_masks(game.num_y, min_t);
        if (std::uint64_t(s_masks.size()) * t_masks.size() > caps.rectangle_pairs)
            throw Error(Errc::SearchSpaceTooLarge,
                        "qualifying rectangle count exceeds cap");
        rep.exhaustive = true;
        for (std::uint64_t sm : s_masks) {
            std::vector<int> S = bits_of_mask(sm);
            for (std::uint64_t tm : t_masks) {
                if (!check_rect(S, bits_of_mask(tm))) {
                    rep.pass = false;
                    return rep;
                }
            }
        }
        rep.pass = true;
        return rep;
    }

    rep.exhaustive = false;
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        int s_size = min_s + int(rng.bounded(std::uint64_t(game.num_x - min_s + 1)));
        int t_size = min_t + int(rng.bounded(std::uint64_t(game.num_y - min_t + 1)));
        std::vector<int> xs = identity_permutation(game.num_x);
        std::vector<int> ys = identity_permutation(game.num_y);
        rng.shuffle(xs);
        rng.shuffle(ys);
        std::vector<int> S(xs.begin(), xs.begin() + s_size);
        std::vector<int> T(ys.begin(), ys.begin() + t_size);
        std::sort(S.begin(), S.end());
        std::sort(T.begin(), T.end());
        if (!check_rect(S, T)) {
            rep.pass = false;
            return rep;
        }
    }
    rep.pass = true; // refute-only: "not refuted by the sample"
    return rep;
}

bool reverify_fortify_witness(const Game& game, const FortifyWitness& w,
                              const Caps& caps) {
    RectSubgame sub = rect_subgame(game, w.S, w.T);
    if (strategy_value(sub.game, w.rect_strategy) != w.rect_value) return false;
    return value_exact(sub.game, caps).value == w.rect_value;
}

Rat fortification_delta(const Rat& phi) {
    if (phi < Rat(1))
        throw Error(Errc::InvalidSpec, "blowup bound must be >= 1");
    return Rat(1) / (Rat(16) * phi * log2_squared_clamped(phi));
}

HypothesisReport theorem_hypotheses(const Game& game, const Rat& phi,
                                    const Rat& eps, const Caps& caps) {
    if (!(eps > Rat(0) && eps < Rat(1, 23)))
        throw Error(Errc::EpsOutOfRange, "eps must lie in (0, 1/23)");

    HypothesisReport rep;
    rep.eps = eps;
    rep.delta = fortification_delta(phi);
    rep.log_clamp_engaged = ceil_log2(phi) <= 1;

    rep.regularity = check_regular_parallel(game, eps);

    bool exhaustive_fits =
        game.num_x < 63 && game.num_y < 63 &&
        (std::uint64_t(1) << game.num_x) + (std::uint64_t(1) << game.num_y) <=
            caps.subset_space;
    rep.mixing = mixing_check(game, rep.delta, eps,
                              exhaustive_fits ? CheckMode::Exact : CheckMode::Sampled,
                              derive_seed(0xF0F0, 1), 1024, caps);

    rep.value = value_exact(game, caps).value;
    rep.value_bound = Rat(1) - Rat(20) * eps;
    rep.value_pass = rep.value <= rep.value_bound;

    rep.fortification = fortification_check(
        game, rep.delta, eps,
        CheckMode::Exact, derive_seed(0xF0F0, 2), 256, caps);
    return rep;
}

} // namespace reprep
