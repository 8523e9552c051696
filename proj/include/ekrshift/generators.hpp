#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ekrshift/complex.hpp"
#include "ekrshift/nearcone.hpp"

namespace ekrshift {

/// Seeded corpus generators. Every function is a pure function of its Rng
/// state, so a corpus is reproducible from (config, seed) alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool coin(int percent) { return below(100) < percent; }

    Mask random_subset(int n) { return next() & full_mask(n); }

    Mask k_subset(int n, int k) {
        Mask m = 0;
        while (face_size(m) < k) m |= Mask{1} << below(n);
        return m;
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(below(static_cast<int>(xs.size())))];
    }

private:
    std::mt19937_64 eng_;
};

/// All labeled complexes on n <= 4 vertices with at least one nonempty
/// face (166 of them for n = 4), enumerated as antichains of nonempty
/// generator sets.
std::vector<SimplicialComplex> exhaustive_complexes(int n);

/// A random complex from 1..2n random nonempty generators.
SimplicialComplex random_complex(int n, Rng& rng);

/// (Γ, Δ) with Γ ⊆ Δ on the same vertex order: a random facet subset or a
/// skeleton of a random complex.
std::pair<SimplicialComplex, SimplicialComplex> random_nested_pair(int n, Rng& rng);

/// A t-intersecting r-family on [n]: a star through a random t-core, or a
/// greedy random family kept pairwise t-intersecting.
std::vector<Mask> random_t_intersecting_family(int n, int t, int r, Rng& rng);

/// A random shifted complex built combinatorially (no shifting operator
/// involved): generators of cardinality >= min_facet_card are closed under
/// swaps toward earlier vertices, then downward. The swap closure preserves
/// cardinality, so the minimal facet cardinality stays >= min_facet_card.
SimplicialComplex random_shifted_complex(int n, int min_facet_card, Rng& rng);

struct NearConeInstance {
    SimplicialComplex cx;
    ApexSequence seq;
};

struct NearConeOptions {
    bool deep = false;       // base = skeleton of a simplex, for high depth
    int extra_percent = 35;  // chance of adjoining a free facet per cone step
};

/// One attempt at a random i-near-cone: a base complex is coned i times,
/// optionally adjoining facets whose boundary lies in the current complex,
/// and the proposed apex is re-validated from scratch. Returns nullopt when
/// the attempt does not validate (callers retry with fresh randomness).
std::optional<NearConeInstance> random_near_cone(int i, int max_n, Rng& rng,
                                                 NearConeOptions opts = {});

/// Retries random_near_cone until `count` validated instances exist.
std::vector<NearConeInstance> near_cone_corpus(int count, int i, int max_n,
                                               std::uint64_t seed, NearConeOptions opts = {});

}  // namespace ekrshift
