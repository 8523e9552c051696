#pragma once

#include <optional>
#include <vector>

#include "ekrshift/complex.hpp"
#include "ekrshift/gfp.hpp"
#include "ekrshift/shifting.hpp"

namespace ekrshift {

/// Pairwise |A ∩ B| >= t. The witness is the first failing pair in lex
/// order. t >= 1; a family without two members is vacuously t-intersecting.
struct IntersectingCheck {
    bool ok = false;
    std::optional<std::pair<Mask, Mask>> witness;
};

IntersectingCheck is_t_intersecting(const std::vector<Mask>& members, int t);

/// max over t-faces σ of Σ_{s ∈ S} f_{s-t}(lk_Δ σ); ties broken by the lex
/// least σ. Throws when Δ has no t-face or S leaves [t, dim+1].
struct StarBound {
    long value = 0;
    Mask argmax = 0;
};

StarBound star_bound(const SimplicialComplex& cx, int t, const std::vector<int>& sizes);

/// The extremal star family: faces in ∪_{s∈S} Δ_(s) containing σ.
std::vector<Mask> star_family(const SimplicialComplex& cx, Mask sigma,
                              const std::vector<int>& sizes);

/// Exact maximum size of a t-intersecting family inside ∪_{s∈S} Δ_(s),
/// computed as a maximum clique of the compatibility graph by
/// branch-and-bound with greedy-coloring bounds. Deterministic. When the
/// node budget trips, lower/upper bracket the optimum instead of claiming
/// one. The candidate pool is guarded at 5000 members.
struct BruteResult {
    long lower = 0;
    long upper = 0;
    bool exact = false;
    std::vector<Mask> witness;
    long nodes = 0;
};

BruteResult max_intersecting_family(const SimplicialComplex& cx, int t,
                                    const std::vector<int>& sizes,
                                    long budget = 10'000'000);

enum class BorgVerdict { holds, hypothesis_not_met, violation, inconclusive };

const char* to_string(BorgVerdict v);

/// Every sufficient hypothesis for the star-bound inequality, evaluated
/// independently so the open region (no hypothesis holds) stays searchable:
/// the facet-cardinality threshold, the binomial remark threshold, and for
/// t = i with an apex sequence found, the depth threshold and the
/// sequentially-CM + facet threshold.
struct BorgHypotheses {
    int r = 0;                   // max of S
    int min_facet_cardinality = 0;
    bool facet_bound = false;    // k >= (t+1)(r-t+1)
    bool remark_bound = false;   // k >= (r-t)*C(3r-2t-1, t+1) + r
    bool apex_found = false;     // Δ is a t-near-cone
    int depth = 0;               // link characterization
    bool depth_bound = false;    // depth >= (t+1)(r-t+1) - 1
    bool seq_cm = false;
    bool scm_bound = false;      // seq-CM and facet_bound
    bool any() const { return facet_bound || remark_bound || depth_bound || scm_bound; }
};

struct EkrReport {
    int t = 0;
    std::vector<int> sizes;
    StarBound star;
    BruteResult brute;
    BorgHypotheses hypothesis;
    BorgVerdict verdict = BorgVerdict::inconclusive;
    bool inequality_holds = false;  // meaningful when brute.exact
};

/// Both sides of the star-bound inequality plus the hypothesis record. A
/// report where some hypothesis holds yet the brute maximum exceeds the
/// star bound is a theorem violation.
EkrReport verify_borg(const SimplicialComplex& cx, int t, const std::vector<int>& sizes,
                      const FieldConfig& cfg, std::uint64_t seed,
                      long budget = 10'000'000);

/// f_{r-t}(lk_{ShiftΔ}{u_1..u_t}) must dominate max_σ f_{r-t}(lk_Δ σ) over
/// t-faces σ of Δ; the first t shifted vertices must form a face whenever Δ
/// has a t-face.
struct PropEasyReport {
    long lhs = 0;
    long rhs = 0;
    bool dominates = false;
    bool first_t_face_present = false;
    bool stable = false;
};

PropEasyReport check_prop_easy(const SimplicialComplex& cx, int t, int r,
                               const FieldConfig& cfg, std::uint64_t seed,
                               ShiftOptions opts = {});

}  // namespace ekrshift
