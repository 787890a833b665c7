#include "reprep/game.hpp"

#include <algorithm>

#include "reprep/rng.hpp"

namespace reprep {

namespace {

// alphabet^(num_x+num_y) with saturation, for cap checks.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Per-edge allowed-pair lookup flattened for the hot loops.
struct AllowTable {
    int alpha;
    std::vector<char> bits; // edge * alpha^2 + a * alpha + b

    explicit AllowTable(const Game& g) : alpha(g.alphabet) {
        bits.assign(g.size() * std::size_t(alpha) * alpha, 0);
        for (std::size_t e = 0; e < g.size(); ++e)
            for (auto [a, b] : g.constraints[e])
                bits[(e * alpha + a) * alpha + b] = 1;
    }
    bool operator()(std::size_t e, int a, int b) const {
        return bits[(e * alpha + a) * alpha + b] != 0;
    }
};

} // namespace

bool Game::allows(std::size_t e, int a, int b) const {
    const auto& c = constraints[e];
    return std::binary_search(c.begin(), c.end(), std::make_pair(a, b));
}

int Game::degree_x(int x) const {
    int d = 0;
    for (const auto& e : edges) d += (e.first == x);
    return d;
}

int Game::degree_y(int y) const {
    int d = 0;
    for (const auto& e : edges) d += (e.second == y);
    return d;
}

void Game::validate() const {
    if (num_x <= 0 || num_y <= 0 || alphabet <= 0)
        throw Error(Errc::InvalidSpec, "game dimensions must be positive");
    if (constraints.size() != edges.size())
        throw Error(Errc::DimensionMismatch,
                    "constraint list length differs from edge list length");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [x, y] = edges[e];
        if (x < 0 || x >= num_x || y < 0 || y >= num_y)
            throw Error(Errc::IndexOutOfRange,
                        "edge " + std::to_string(e) + " out of vertex range");
        for (auto [a, b] : constraints[e])
            if (a < 0 || a >= alphabet || b < 0 || b >= alphabet)
                throw Error(Errc::IndexOutOfRange,
                            "constraint pair out of alphabet on edge " +
                                std::to_string(e));
    }
}

void Game::normalize_constraints() {
    for (auto& c : constraints) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
}

Rat strategy_value(const Game& game, const Strategy& s) {
    if (int(s.psi_x.size()) != game.num_x || int(s.psi_y.size()) != game.num_y)
        throw Error(Errc::DimensionMismatch, "strategy does not match game shape");
    for (int v : s.psi_x)
        if (v < 0 || v >= game.alphabet)
            throw Error(Errc::IndexOutOfRange, "strategy symbol out of alphabet");
    for (int v : s.psi_y)
        if (v < 0 || v >= game.alphabet)
            throw Error(Errc::IndexOutOfRange, "strategy symbol out of alphabet");
    if (game.size() == 0) throw Error(Errc::EmptyGame, "game has no edges");

    std::int64_t sat = 0;
    for (std::size_t e = 0; e < game.size(); ++e) {
        auto [x, y] = game.edges[e];
        sat += game.allows(e, s.psi_x[x], s.psi_y[y]);
    }
    return Rat(sat, std::int64_t(game.size()));
}

namespace {

// Exhaustive search enumerating the X side; Y side optimized pointwise.
// Returns (best satisfied count, witness).
std::pair<std::int64_t, Strategy> exact_enumerate_x(const Game& g,
                                                    const AllowTable& allow) {
    std::vector<std::vector<std::size_t>> edges_by_y(g.num_y);
    for (std::size_t e = 0; e < g.size(); ++e)
        edges_by_y[g.edges[e].second].push_back(e);

    std::vector<int> psi_x(g.num_x, 0);
    std::int64_t best = -1;
    Strategy wit;

    std::vector<std::int64_t> cnt(g.alphabet);
    for (;;) {
        std::int64_t total = 0;
        std::vector<int> psi_y(g.num_y, 0);
        for (int y = 0; y < g.num_y; ++y) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::size_t e : edges_by_y[y]) {
                int x = g.edges[e].first;
                for (int b = 0; b < g.alphabet; ++b)
                    cnt[b] += allow(e, psi_x[x], b);
            }
            int arg = 0;
            for (int b = 1; b < g.alphabet; ++b)
                if (cnt[b] > cnt[arg]) arg = b;
            psi_y[y] = arg;
            total += cnt[arg];
        }
        if (total > best) {
            best = total;
            wit = Strategy{psi_x, psi_y};
        }
        // odometer over psi_x
        int i = 0;
        while (i < g.num_x && ++psi_x[i] == g.alphabet) psi_x[i++] = 0;
        if (i == g.num_x) break;
    }
    return {best, wit};
}

Game transposed(const Game& g) {
    Game t;
    t.num_x = g.num_y;
    t.num_y = g.num_x;
    t.alphabet = g.alphabet;
    t.edges.reserve(g.size());
    t.constraints.reserve(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) {
        t.edges.emplace_back(g.edges[e].second, g.edges[e].first);
        std::vector<std::pair<int, int>> c;
        c.reserve(g.constraints[e].size());
        for (auto [a, b] : g.constraints[e]) c.emplace_back(b, a);
        std::sort(c.begin(), c.end());
        t.constraints.push_back(std::move(c));
    }
    return t;
}

} // namespace

ValueResult value_exact(const Game& game, const Caps& caps) {
    game.validate();
    if (game.size() == 0) throw Error(Errc::EmptyGame, "game has no edges");
    std::uint64_t space = checked_pow(std::uint64_t(game.alphabet),
                                      std::uint64_t(game.num_x) + game.num_y,
                                      caps.strategy_space);
    if (space > caps.strategy_space)
        throw Error(Errc::SearchSpaceTooLarge,
                    "alphabet^(|X|+|Y|) exceeds strategy cap");

    AllowTable allow(game);
    if (game.num_x <= game.num_y) {
        auto [best, wit] = exact_enumerate_x(game, allow);
        return ValueResult{Rat(best, std::int64_t(game.size())), wit,
                           ValueMethod::Exact};
    }
    Game t = transposed(game);
    AllowTable allow_t(t);
    auto [best, wit] = exact_enumerate_x(t, allow_t);
    return ValueResult{Rat(best, std::int64_t(game.size())),
                       Strategy{wit.psi_y, wit.psi_x}, ValueMethod::Exact};
}

ValueResult value_local_search(const Game& game, int restarts,
                               std::uint64_t seed) {
    game.validate();
    if (game.size() == 0) throw Error(Errc::EmptyGame, "game has no edges");
    if (restarts < 1) throw Error(Errc::InvalidSpec, "restarts must be >= 1");

    AllowTable allow(game);
    std::vector<std::vector<std::size_t>> edges_by_x(game.num_x),
        edges_by_y(game.num_y);
    for (std::size_t e = 0; e < game.size(); ++e) {
        edges_by_x[game.edges[e].first].push_back(e);
        edges_by_y[game.edges[e].second].push_back(e);
    }

    auto count_sat = [&](const std::vector<int>& px, const std::vector<int>& py) {
        std::int64_t s = 0;
        for (std::size_t e = 0; e < game.size(); ++e)
            s += allow(e, px[game.edges[e].first], py[game.edges[e].second]);
        return s;
    };

    std::int64_t best = -1;
    Strategy best_wit;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, std::uint64_t(r)));
        std::vector<int> px(game.num_x), py(game.num_y);
        for (auto& v : px) v = int(rng.bounded(std::uint64_t(game.alphabet)));
        for (auto& v : py) v = int(rng.bounded(std::uint64_t(game.alphabet)));

        std::int64_t cur = count_sat(px, py);
        bool improved = true;
        while (improved) {
            improved = false;
            for (int x = 0; x < game.num_x && !improved; ++x) {
                for (int a = 0; a < game.alphabet && !improved; ++a) {
                    if (a == px[x]) continue;
                    std::int64_t delta = 0;
                    for (std::size_t e : edges_by_x[x])
                        delta += allow(e, a, py[game.edges[e].second]) -
                                 allow(e, px[x], py[game.edges[e].second]);
                    if (delta > 0) { px[x] = a; cur += delta; improved = true; }
                }
            }
            for (int y = 0; y < game.num_y && !improved; ++y) {
                for (int b = 0; b < game.alphabet && !improved; ++b) {
                    if (b == py[y]) continue;
                    std::int64_t delta = 0;
                    for (std::size_t e : edges_by_y[y])
                        delta += allow(e, px[game.edges[e].first], b) -
                                 allow(e, px[game.edges[e].first], py[y]);
                    if (delta > 0) { py[y] = b; cur += delta; improved = true; }
                }
            }
        }
        if (cur > best) {
            best = cur;
            best_wit = Strategy{px, py};
        }
    }
    return ValueResult{Rat(best, std::int64_t(game.size())), best_wit,
                       ValueMethod::LocalSearchLowerBound};
}

RectSubgame rect_subgame(const Game& game, const std::vector<int>& S,
                         const std::vector<int>& T) {
    if (S.empty() || T.empty())
        throw Error(Errc::EmptyRectangle, "S and T must be nonempty");
    std::vector<int> xs = S, ys = T;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (int x : xs)
        if (x < 0 || x >= game.num_x)
            throw Error(Errc::IndexOutOfRange, "S contains an invalid vertex");
    for (int y : ys)
        if (y < 0 || y >= game.num_y)
            throw Error(Errc::IndexOutOfRange, "T contains an invalid vertex");

    std::vector<int> xmap(game.num_x, -1), ymap(game.num_y, -1);
    for (std::size_t i = 0; i < xs.size(); ++i) xmap[xs[i]] = int(i);
    for (std::size_t i = 0; i < ys.size(); ++i) ymap[ys[i]] = int(i);

    RectSubgame sub;
    sub.game.num_x = int(xs.size());
    sub.game.num_y = int(ys.size());
    sub.game.alphabet = game.alphabet;
    sub.orig_x = xs;
    sub.orig_y = ys;
    for (std::size_t e = 0; e < game.size(); ++e) {
        auto [x, y] = game.edges[e];
        if (xmap[x] < 0 || ymap[y] < 0) continue;
        sub.game.edges.emplace_back(xmap[x], ymap[y]);
        sub.game.constraints.push_back(game.constraints[e]);
        sub.orig_edge.push_back(e);
    }
    if (sub.game.edges.empty())
        throw Error(Errc::EmptyRectangle, "no edge survives inside S x T");
    return sub;
}

Game induced_subgame(const Game& game, const std::vector<std::size_t>& edge_indices) {
    Game sub;
    sub.num_x = game.num_x;
    sub.num_y = game.num_y;
    sub.alphabet = game.alphabet;
    for (std::size_t idx : edge_indices) {
        if (idx >= game.size())
            throw Error(Errc::IndexOutOfRange, "edge index out of range");
        sub.edges.push_back(game.edges[idx]);
        sub.constraints.push_back(game.constraints[idx]);
    }
    return sub;
}

} // namespace reprep
