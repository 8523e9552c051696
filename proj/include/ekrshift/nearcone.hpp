#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ekrshift/complex.hpp"
#include "ekrshift/homology.hpp"
#include "ekrshift/shifting.hpp"

namespace ekrshift {

/// Verdict for "Δ is a near-cone with apex v": every face stays a face when
/// any of its vertices is swapped for v. A false verdict always carries a
/// genuinely violating (σ, w).
struct NearConeCertificate {
    bool verdict = false;
    std::optional<std::pair<Mask, int>> violating;
};

/// Throws when v is not a vertex of Δ (no incident face).
NearConeCertificate is_near_cone(const SimplicialComplex& cx, int v);

/// Witness chain for an i-near-cone: apex vertices v_1..v_i and the anti-star
/// chain Δ(0) ⊃ Δ(1) ⊃ ... ⊃ Δ(i), every Δ(j-1) a near-cone with respect to
/// v_j and every Δ(j) containing at least one vertex. All chain complexes
/// keep the ambient vertex order of Δ(0).
struct ApexSequence {
    std::vector<int> apex;
    std::vector<SimplicialComplex> chain;  // chain[0] = Δ(0) = the input

    Mask apex_mask() const {
        Mask m = 0;
        for (int v : apex) m |= Mask{1} << v;
        return m;
    }
    int i() const { return static_cast<int>(apex.size()); }
    /// Face and vertex counts of Δ(i), recorded so the {∅}-only reading of
    /// "nonempty" stays visible.
    long tail_faces() const;
    int tail_vertices() const;
};

/// Deterministic backtracking in vertex order; absence is a legitimate
/// answer. i >= 1.
std::optional<ApexSequence> find_apex_sequence(const SimplicialComplex& cx, int i);

/// Re-derives the anti-star chain for the proposed apex vertices and checks
/// every near-cone and nonemptiness condition from scratch.
std::optional<ApexSequence> validate_apex_sequence(const SimplicialComplex& cx,
                                                   const std::vector<int>& apex);

/// With dim Δ >= 2i-2 the apex set must be a face; the combination
/// (hypothesis true, conclusion false) is a lemma violation.
struct ApexFaceReport {
    int dim = 0;
    int i = 0;
    bool dim_hypothesis = false;
    bool apex_is_face = false;
    bool violation = false;
};

ApexFaceReport check_apex_face(const SimplicialComplex& cx, const ApexSequence& seq);

/// The s-skeleton of an i-near-cone is closed under swapping any vertex for
/// an apex vertex v_j earlier in (apex-first) order, provided
/// s <= k - i - 1 with k the minimal facet cardinality. Out-of-range s is
/// still evaluated but cannot count as a violation.
struct SkeletonShiftReport {
    int s = 0;
    int k = 0;
    int i = 0;
    bool in_range = false;
    bool holds = false;
    std::optional<std::tuple<Mask, int, int>> witness;  // (σ, j, w)
    bool violation = false;
};

SkeletonShiftReport check_skeleton_shifting(const SimplicialComplex& cx,
                                            const ApexSequence& seq, int s);

/// Shifting/link commutation checks for an i-near-cone with dim >= 2i-2:
/// the near-cone link identity lk_{ShiftΔ} u_1 = Shift(lk_Δ v_1), the same
/// identity on skeleta at the apex face for s <= k-i-1, and the f-vector
/// identity f_r(lk_{ShiftΔ}{u_1..u_i}) = f_r(Shift(lk_Δ F)) for r <= k-2i.
/// Link vertex sets are identified positionally. An unstable shift is
/// reported as unstable, not as failure.
struct LinkCommutationReport {
    bool stable = true;
    bool apex_is_face = false;
    std::optional<bool> nevo_equal;
    std::vector<std::pair<int, bool>> skeleton_link_equal;        // (s, equal)
    std::vector<std::tuple<int, long, long>> fvector_checks;      // (r, lhs, rhs)
    bool all_ok = false;
};

LinkCommutationReport check_link_commutation(const SimplicialComplex& cx,
                                             const ApexSequence& seq,
                                             const FieldConfig& cfg, std::uint64_t seed,
                                             ShiftOptions opts = {});

}  // namespace ekrshift
