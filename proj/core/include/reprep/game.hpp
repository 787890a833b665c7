#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reprep/errors.hpp"
#include "reprep/rational.hpp"

namespace reprep {

/// A two-prover one-round game: a bipartite constraint multigraph with one
/// allowed-answer set per edge entry. Edges are a multiset (parallel edges are
/// distinct entries and every probability is uniform over entries). The size
/// of a game is its edge-entry count.
struct Game {
    int num_x = 0;
    int num_y = 0;
    int alphabet = 0;
    std::vector<std::pair<int, int>> edges;
    /// constraints[e] lists the allowed (a, b) pairs of edge e, sorted
    /// lexicographically with no duplicates.
    std::vector<std::vector<std::pair<int, int>>> constraints;

    std::size_t size() const { return edges.size(); }

    bool allows(std::size_t e, int a, int b) const;

    /// Degree of x counting multiplicity.
    int degree_x(int x) const;
    int degree_y(int y) const;

    /// Throws on any structural violation (bad indices, length mismatch,
    /// out-of-alphabet pairs).
    void validate() const;

    /// Canonicalizes constraint lists (sort + dedup).
    void normalize_constraints();
};

struct Strategy {
    std::vector<int> psi_x;
    std::vector<int> psi_y;
};

enum class ValueMethod { Exact, LocalSearchLowerBound };

struct ValueResult {
    Rat value;
    Strategy witness;
    ValueMethod method = ValueMethod::Exact;
};

/// Exact fraction of edge entries satisfied by s, counted with multiplicity.
Rat strategy_value(const Game& game, const Strategy& s);

/// Exact value by exhaustive strategy search. Enumerates the cheaper side and
/// optimizes the other side pointwise, which is equivalent to enumerating all
/// strategy pairs. Deterministic: ties break toward the lexicographically
/// first witness in odometer order (all-zeros first), with greedy symbols
/// breaking ties toward the smallest symbol.
ValueResult value_exact(const Game& game, const Caps& caps = {});

/// Random-restart hill climbing: single-vertex symbol change, first
/// improvement, restart on local optimum. A reproducible lower bound for
/// games beyond the exact cap; restart r uses derive_seed(seed, r).
ValueResult value_local_search(const Game& game, int restarts,
                               std::uint64_t seed);

/// Rectangular subgame on S x T together with the index maps back into the
/// parent game.
struct RectSubgame {
    Game game;
    std::vector<int> orig_x; // new x index -> parent x
    std::vector<int> orig_y;
    std::vector<std::size_t> orig_edge; // new edge -> parent edge entry
};

/// Keeps exactly the edge entries with both endpoints inside S x T; vertex
/// sets are reindexed to the sorted subsets. Throws EmptyRectangle when S or
/// T is empty or no edge survives (the value of an edgeless game is
/// undefined).
RectSubgame rect_subgame(const Game& game, const std::vector<int>& S,
                         const std::vector<int>& T);

/// Subgame induced by a multiset of edge indices: same vertex sets and
/// alphabet, restricted edge list.
Game induced_subgame(const Game& game, const std::vector<std::size_t>& edge_indices);

} // namespace reprep
