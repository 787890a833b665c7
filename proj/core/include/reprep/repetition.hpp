#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "reprep/game.hpp"

namespace reprep {

/// A k-repeated game: a base game plus a multiset of k-tuples of base edge
/// indices. A tuple (e_1,...,e_k) asks the question pair
/// ((x_1,...,x_k), (y_1,...,y_k)) and accepts answer vectors that satisfy
/// every per-round constraint. Storing edge indices (not vertex tuples) keeps
/// parallel base edges distinguishable.
struct RepeatedGame {
    std::shared_ptr<const Game> base;
    int k = 0;
    std::vector<std::vector<int>> tuples;

    std::size_t size() const { return tuples.size(); }

    std::vector<int> x_vertex(std::size_t t) const;
    std::vector<int> y_vertex(std::size_t t) const;

    void validate() const;
};

/// Vertex -> answer-vector maps, stored sparsely on the realized vertices.
/// std::map keys give deterministic iteration.
struct RepStrategy {
    std::map<std::vector<int>, std::vector<int>> psi_x;
    std::map<std::vector<int>, std::vector<int>> psi_y;
};

struct SchemeSpec {
    enum class Kind { FullProduct, PermutationUnion, Explicit };
    Kind kind = Kind::FullProduct;
    int z = 1;                 // copies, permutation-union only
    std::uint64_t seed = 0;    // permutation seed
    bool identity_permutations = false; // degenerate diagonal variant
    std::vector<std::vector<int>> explicit_tuples;
};

/// All of E^k in lexicographic order; blowup |E|^(k-1).
RepeatedGame full_power(const Game& game, int k, const Caps& caps = {});

/// Builds the repeated game described by spec. The permutation-union scheme
/// emits, for each copy c in [z], the tuples (e, p_2(e), ..., p_k(e)) over all
/// base edges e, where each p_j is a seeded uniformly random permutation of
/// the edge list (the identity when identity_permutations is set). Every
/// coordinate then sees each base edge exactly z times, so uniform marginals
/// hold by construction. Permutation seeds: derive(derive(seed, c), j).
RepeatedGame apply_scheme(const Game& game, const SchemeSpec& spec, int k,
                          const Caps& caps = {});

/// |H| / |G| as an exact rational.
Rat blowup(const RepeatedGame& H);

struct MarginalsReport {
    bool pass = false;
    Rat z;                       // |H| / |G|
    std::vector<std::vector<std::int64_t>> counts; // [k][|E|]
    int offending_coordinate = 0; // 1-based, valid when !pass
    std::size_t offending_edge = 0;

    std::int64_t count(int coordinate_1based, std::size_t edge) const {
        return counts[coordinate_1based - 1][edge];
    }
};

/// Counts, for every coordinate j and base edge entry e, the tuples whose
/// j-th component is e. Passes iff every count equals |H|/|G| exactly (which
/// forces |H|/|G| to be an integer).
MarginalsReport uniform_marginals_check(const RepeatedGame& H);

/// Indices of tuples on which psi wins every round in C (0-based
/// coordinates). The empty C accepts every tuple.
std::vector<std::size_t> winning_set(const RepeatedGame& H,
                                     const RepStrategy& psi,
                                     const std::vector<int>& C);

/// Plays base strategy s independently in every round.
RepStrategy product_strategy(const RepeatedGame& H, const Strategy& s);

} // namespace reprep
