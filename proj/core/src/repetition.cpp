#include "reprep/repetition.hpp"

#include <algorithm>
#include <set>

#include "reprep/rng.hpp"

namespace reprep {

std::vector<int> RepeatedGame::x_vertex(std::size_t t) const {
    std::vector<int> v(k);
    for (int j = 0; j < k; ++j) v[j] = base->edges[tuples[t][j]].first;
    return v;
}

std::vector<int> RepeatedGame::y_vertex(std::size_t t) const {
    std::vector<int> v(k);
    for (int j = 0; j < k; ++j) v[j] = base->edges[tuples[t][j]].second;
    return v;
}

void RepeatedGame::validate() const {
    if (!base) throw Error(Errc::InvalidSpec, "repeated game lacks a base game");
    if (k < 1) throw Error(Errc::InvalidSpec, "k must be >= 1");
    for (const auto& t : tuples) {
        if (int(t.size()) != k)
            throw Error(Errc::DimensionMismatch, "tuple arity differs from k");
        for (int e : t)
            if (e < 0 || std::size_t(e) >= base->size())
                throw Error(Errc::IndexOutOfRange, "tuple references a bad edge");
    }
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

} // namespace

RepeatedGame full_power(const Game& game, int k, const Caps& caps) {
    game.validate();
    if (k < 1) throw Error(Errc::InvalidSpec, "k must be >= 1");
    std::uint64_t count = checked_pow(game.size(), std::uint64_t(k), caps.tuple_space);
    if (count > caps.tuple_space)
        throw Error(Errc::SearchSpaceTooLarge, "|E|^k exceeds tuple cap");

    RepeatedGame H;
    H.base = std::make_shared<Game>(game);
    H.k = k;
    H.tuples.reserve(count);
    std::vector<int> t(k, 0);
    for (;;) {
        H.tuples.push_back(t);
        // lexicographic odometer, last coordinate fastest
        int j = k - 1;
        while (j >= 0 && ++t[j] == int(game.size())) t[j--] = 0;
        if (j < 0) break;
    }
    return H;
}

RepeatedGame apply_scheme(const Game& game, const SchemeSpec& spec, int k,
                          const Caps& caps) {
    game.validate();
    if (k < 1) throw Error(Errc::InvalidSpec, "k must be >= 1");

    switch (spec.kind) {
        case SchemeSpec::Kind::FullProduct:
            return full_power(game, k, caps);

        case SchemeSpec::Kind::PermutationUnion: {
            if (spec.z < 1)
                throw Error(Errc::InvalidSpec, "permutation-union needs z >= 1");
            if (game.size() == 0) throw Error(Errc::EmptyGame, "game has no edges");
            RepeatedGame H;
            H.base = std::make_shared<Game>(game);
            H.k = k;
            const int m = int(game.size());
            for (int c = 0; c < spec.z; ++c) {
                std::uint64_t copy_seed = derive_seed(spec.seed, std::uint64_t(c));
                std::vector<std::vector<int>> perms(k);
                for (int j = 1; j < k; ++j)
                    perms[j] = spec.identity_permutations
                                   ? identity_permutation(m)
                                   : random_permutation(
                                         m, derive_seed(copy_seed, std::uint64_t(j)));
                for (int e = 0; e < m; ++e) {
                    std::vector<int> t(k);
                    t[0] = e;
                    for (int j = 1; j < k; ++j) t[j] = perms[j][e];
                    H.tuples.push_back(std::move(t));
                }
            }
            return H;
        }

        case SchemeSpec::Kind::Explicit: {
            RepeatedGame H;
            H.base = std::make_shared<Game>(game);
            H.k = k;
            H.tuples = spec.explicit_tuples;
            try {
                H.validate();
            } catch (const Error& e) {
                throw Error(Errc::InvalidSpec,
                            std::string("explicit tuple list rejected: ") + e.what());
            }
            return H;
        }
    }
    throw Error(Errc::InvalidSpec, "unknown scheme kind");
}

Rat blowup(const RepeatedGame& H) {
    H.validate();
    if (H.base->size() == 0) throw Error(Errc::EmptyGame, "base game has no edges");
    return Rat(std::int64_t(H.size()), std::int64_t(H.base->size()));
}

MarginalsReport uniform_marginals_check(const RepeatedGame& H) {
    H.validate();
    MarginalsReport rep;
    rep.z = blowup(H);
    rep.counts.assign(H.k, std::vector<std::int64_t>(H.base->size(), 0));
    for (const auto& t : H.tuples)
        for (int j = 0; j < H.k; ++j) ++rep.counts[j][t[j]];

    rep.pass = rep.z.is_integer();
    if (rep.pass) {
        std::int64_t z = rep.z.num();
        for (int j = 0; j < H.k && rep.pass; ++j)
            for (std::size_t e = 0; e < H.base->size(); ++e)
                if (rep.counts[j][e] != z) {
                    rep.pass = false;
                    rep.offending_coordinate = j + 1;
                    rep.offending_edge = e;
                    break;
                }
    } else {
        rep.offending_coordinate = 1;
        rep.offending_edge = 0;
    }
    return rep;
}

std::vector<std::size_t> winning_set(const RepeatedGame& H,
                                     const RepStrategy& psi,
                                     const std::vector<int>& C) {
    H.validate();
    for (int c : C)
        if (c < 0 || c >= H.k)
            throw Error(Errc::IndexOutOfRange, "coordinate set outside [k]");

    std::vector<std::size_t> wins;
    for (std::size_t t = 0; t < H.size(); ++t) {
        auto xv = H.x_vertex(t);
        auto yv = H.y_vertex(t);
        auto ia = psi.psi_x.find(xv);
        auto ib = psi.psi_y.find(yv);
        if (ia == psi.psi_x.end() || ib == psi.psi_y.end())
            throw Error(Errc::UndefinedVertex,
                        "strategy undefined on a realized vertex");
        const auto& a = ia->second;
        const auto& b = ib->second;
        bool ok = true;
        for (int c : C) {
            if (!H.base->allows(std::size_t(H.tuples[t][c]), a[c], b[c])) {
                ok = false;
                break;
            }
        }
        if (ok) wins.push_back(t);
    }
    return wins;
}

RepStrategy product_strategy(const RepeatedGame& H, const Strategy& s) {
    RepStrategy psi;
    for (std::size_t t = 0; t < H.size(); ++t) {
        auto xv = H.x_vertex(t);
        auto yv = H.y_vertex(t);
        if (!psi.psi_x.count(xv)) {
            std::vector<int> a(H.k);
            for (int j = 0; j < H.k; ++j) a[j] = s.psi_x[xv[j]];
            psi.psi_x.emplace(std::move(xv), std::move(a));
        }
        if (!psi.psi_y.count(yv)) {
            std::vector<int> b(H.k);
            for (int j = 0; j < H.k; ++j) b[j] = s.psi_y[yv[j]];
            psi.psi_y.emplace(std::move(yv), std::move(b));
        }
    }
    return psi;
}

} // namespace reprep
