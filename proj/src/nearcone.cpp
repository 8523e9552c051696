#include "ekrshift/nearcone.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ekrshift {

long ApexSequence::tail_faces() const { return chain.back().num_faces(); }
int ApexSequence::tail_vertices() const {
    return face_size(chain.back().used_vertices());
}

NearConeCertificate is_near_cone(const SimplicialComplex& cx, int v) {
    if (v < 0 || v >= cx.n() || !(cx.used_vertices() & (Mask{1} << v)))
        throw std::invalid_argument("apex candidate is not a vertex of the complex");
    const Mask vbit = Mask{1} << v;
    for (Mask f : cx.all_faces()) {
        Mask rest = f;
        while (rest) {
            Mask wbit = rest & (~rest + 1);
            rest ^= wbit;
            Mask swapped = (f ^ wbit) | vbit;
            if (!cx.contains(swapped))
                return {false, std::make_pair(f, std::countr_zero(wbit))};
        }
    }
    return {true, std::nullopt};
}

namespace {

bool apex_search(const SimplicialComplex& cur, int remaining, ApexSequence& seq) {
    if (remaining == 0) return true;
    Mask used = cur.used_vertices();
    while (used) {
        int v = std::countr_zero(used);
        used &= used - 1;
        if (!is_near_cone(cur, v).verdict) continue;
        auto next = antistar(cur, Mask{1} << v);
        if (next.used_vertices() == 0) continue;  // need a vertex, not just {∅}
        seq.apex.push_back(v);
        seq.chain.push_back(next);
        if (apex_search(seq.chain.back(), remaining - 1, seq)) return true;
        seq.apex.pop_back();
        seq.chain.pop_back();
    }
    return false;
}

}  // namespace

std::optional<ApexSequence> find_apex_sequence(const SimplicialComplex& cx, int i) {
    if (i < 1) throw std::invalid_argument("apex sequence length must be >= 1");
    ApexSequence seq;
    seq.chain.push_back(cx);
    if (!apex_search(cx, i, seq)) return std::nullopt;
    return seq;
}

std::optional<ApexSequence> validate_apex_sequence(const SimplicialComplex& cx,
                                                   const std::vector<int>& apex) {
    ApexSequence seq;
    seq.chain.push_back(cx);
    for (int v : apex) {
        const auto& cur = seq.chain.back();
        if (v < 0 || v >= cur.n() || !(cur.used_vertices() & (Mask{1} << v))) return std::nullopt;
        if (!is_near_cone(cur, v).verdict) return std::nullopt;
        auto next = antistar(cur, Mask{1} << v);
        if (next.used_vertices() == 0) return std::nullopt;
        seq.apex.push_back(v);
        seq.chain.push_back(std::move(next));
    }
    return seq;
}

ApexFaceReport check_apex_face(const SimplicialComplex& cx, const ApexSequence& seq) {
    ApexFaceReport report;
    report.dim = cx.dim();
    report.i = seq.i();
    report.dim_hypothesis = (report.dim >= 2 * report.i - 2);
    report.apex_is_face = cx.contains(seq.apex_mask());
    report.violation = report.dim_hypothesis && !report.apex_is_face;
    return report;
}

SkeletonShiftReport check_skeleton_shifting(const SimplicialComplex& cx,
                                            const ApexSequence& seq, int s) {
    SkeletonShiftReport report;
    report.s = s;
    report.k = cx.min_facet_cardinality();
    report.i = seq.i();
    report.in_range = (s <= report.k - report.i - 1);
    report.holds = true;

    if (s < 0) throw std::invalid_argument("skeleton index must be >= 0");
    auto skel = skeleton(cx, s);
    // prefix[j] = apex vertices v_1..v_j
    std::vector<Mask> prefix(seq.apex.size() + 1, 0);
    for (std::size_t j = 0; j < seq.apex.size(); ++j)
        prefix[j + 1] = prefix[j] | (Mask{1} << seq.apex[j]);

    for (Mask f : skel.all_faces()) {
        for (int j = 1; j <= report.i && report.holds; ++j) {
            Mask vj = Mask{1} << seq.apex[static_cast<std::size_t>(j - 1)];
            if (f & vj) continue;  // swap target already present
            Mask later = f & ~prefix[static_cast<std::size_t>(j)];
            while (later) {
                Mask wbit = later & (~later + 1);
                later ^= wbit;
                Mask swapped = (f ^ wbit) | vj;
                if (!skel.contains(swapped)) {
                    report.holds = false;
                    report.witness = std::make_tuple(f, j, std::countr_zero(wbit));
                    break;
                }
            }
        }
        if (!report.holds) break;
    }
    report.violation = report.in_range && !report.holds;
    return report;
}

namespace {

std::unordered_set<Mask> link_of_initial_segment(const SimplicialComplex& shifted, int i) {
    // faces containing {u_1..u_i}, with that prefix stripped and the
    // remaining bits renumbered to the link's position space
    Mask prefix = full_mask(i);
    std::unordered_set<Mask> out;
    for (Mask f : shifted.all_faces())
        if (subset_of(prefix, f)) out.insert(compress_mask(f & ~prefix, prefix));
    return out;
}

std::unordered_set<Mask> face_set(const SimplicialComplex& cx) {
    auto faces = cx.all_faces();
    return {faces.begin(), faces.end()};
}

}  // namespace

LinkCommutationReport check_link_commutation(const SimplicialComplex& cx,
                                             const ApexSequence& seq,
                                             const FieldConfig& cfg, std::uint64_t seed,
                                             ShiftOptions opts) {
    const int i = seq.i();
    if (cx.dim() < 2 * i - 2)
        throw std::invalid_argument("link commutation checks need dim >= 2i-2");
    const int k = cx.min_facet_cardinality();
    const Mask apex = seq.apex_mask();

    LinkCommutationReport report;
    report.apex_is_face = cx.contains(apex);
    report.all_ok = true;

    // (1) near-cone identity at the first apex
    auto full_shift = exterior_shift(cx, cfg, seed, opts);
    report.stable = full_shift.stable;
    {
        auto lk_first = link(cx, Mask{1} << seq.apex[0]);
        auto lk_shift = exterior_shift(lk_first, cfg, mix_seed(seed, 101), opts);
        report.stable = report.stable && lk_shift.stable;
        bool equal = link_of_initial_segment(full_shift.shifted, 1) == face_set(lk_shift.shifted);
        report.nevo_equal = equal;
        report.all_ok = report.all_ok && equal;
    }

    if (!report.apex_is_face) {
        // dim >= 2i-2 makes the apex set a face; its absence is itself a
        // violation surfaced by check_apex_face, so stop here
        report.all_ok = false;
        return report;
    }

    // (2) skeleton link identity at the full apex face
    for (int s = std::max(0, i - 1); s <= k - i - 1; ++s) {
        auto skel = skeleton(cx, s);
        auto skel_shift = exterior_shift(skel, cfg, mix_seed(seed, 200 + static_cast<std::uint64_t>(s)), opts);
        auto lk = link(skel, apex);
        auto lk_shift = exterior_shift(lk, cfg, mix_seed(seed, 300 + static_cast<std::uint64_t>(s)), opts);
        report.stable = report.stable && skel_shift.stable && lk_shift.stable;
        bool equal = link_of_initial_segment(skel_shift.shifted, i) == face_set(lk_shift.shifted);
        report.skeleton_link_equal.emplace_back(s, equal);
        report.all_ok = report.all_ok && equal;
    }

    // (3) f-vector identity on the full complex
    if (k - 2 * i >= 0) {
        auto lk = link(cx, apex);
        auto lk_shift = exterior_shift(lk, cfg, mix_seed(seed, 400), opts);
        report.stable = report.stable && lk_shift.stable;
        auto shifted_link = link_of_initial_segment(full_shift.shifted, i);
        for (int r = 0; r <= k - 2 * i; ++r) {
            long lhs = 0;
            for (Mask f : shifted_link)
                if (face_size(f) == r) ++lhs;
            long rhs = static_cast<long>(lk_shift.shifted.faces_of_size(r).size());
            report.fvector_checks.emplace_back(r, lhs, rhs);
            report.all_ok = report.all_ok && (lhs == rhs);
        }
    }
    return report;
}

}  // namespace ekrshift
