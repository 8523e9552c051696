// Acceptance suite: one pass/fail line per criterion, exact integer checks
// throughout, every tolerance pinned in code. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ekrshift/ekr.hpp"
#include "ekrshift/generators.hpp"
#include "ekrshift/homology.hpp"
#include "ekrshift/io.hpp"
#include "ekrshift/nearcone.hpp"
#include "ekrshift/shifting.hpp"
#include "ekrshift/sweep.hpp"

using namespace ekrshift;

namespace {

const FieldConfig kBig;      // 2^31 - 1
const FieldConfig kTwo(2);

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---- shared corpora ------------------------------------------------------

// all 166 labeled complexes on 4 vertices plus 200 seeded random complexes
// on 6 vertices
const std::vector<SimplicialComplex>& corpus_366() {
    static const std::vector<SimplicialComplex> corpus = [] {
        auto all = exhaustive_complexes(4);
        for (int id = 0; id < 200; ++id) {
            Rng rng(mix_seed(2026, static_cast<std::uint64_t>(id)));
            all.push_back(random_complex(6, rng));
        }
        return all;
    }();
    return corpus;
}

// 200 validated i-near-cones (i cycling through 1,2,3) with dim >= 2i-2
const std::vector<NearConeInstance>& near_cone_200() {
    static const std::vector<NearConeInstance> corpus = [] {
        std::vector<NearConeInstance> out;
        std::uint64_t attempt = 0;
        int i = 1;
        while (out.size() < 200) {
            Rng rng(mix_seed(777, attempt++));
            NearConeOptions opts;
            opts.deep = (attempt % 3 == 0);
            if (auto inst = random_near_cone(i, i == 3 ? 9 : 8, rng, opts)) {
                if (inst->cx.dim() >= 2 * i - 2) {
                    out.push_back(std::move(*inst));
                    i = 1 + static_cast<int>(out.size()) % 3;
                }
            }
        }
        return out;
    }();
    return corpus;
}

std::string join_counts(const std::vector<std::pair<std::string, long>>& counts) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) ss << ", ";
        ss << counts[i].first << "=" << counts[i].second;
    }
    return ss.str();
}

std::vector<std::vector<int>> nonempty_size_subsets(int t, int r) {
    std::vector<std::vector<int>> out;
    int span = r - t + 1;
    for (int pick = 1; pick < (1 << span); ++pick) {
        std::vector<int> sizes;
        for (int j = 0; j < span; ++j)
            if (pick & (1 << j)) sizes.push_back(t + j);
        out.push_back(sizes);
    }
    return out;
}

// ---- criteria ------------------------------------------------------------

Outcome criterion1_axioms() {
    long violations = 0, unstable = 0, s2_checked = 0;
    ShiftOptions opts{5, SubsetOrder::lex};

    for (const auto& c : corpus_366()) {
        auto r = check_axioms(c, std::nullopt, std::nullopt, 1, kBig, 41, opts);
        if (!r.stable) {
            ++unstable;
            continue;
        }
        if (!r.s1 || !r.s3) ++violations;
        if (r.s2) {
            ++s2_checked;
            if (!*r.s2) ++violations;
        }
    }
    for (int id = 0; id < 100; ++id) {
        Rng rng(mix_seed(4100, static_cast<std::uint64_t>(id)));
        auto [sub, super] = random_nested_pair(6, rng);
        auto r = check_axioms(super, sub, std::nullopt, 1, kBig, rng.next(), opts);
        if (!r.stable) ++unstable;
        else if (!r.s4.value_or(false)) ++violations;
    }
    long families = 0;
    for (int id = 0; id < 100; ++id) {
        Rng rng(mix_seed(4200, static_cast<std::uint64_t>(id)));
        int t = 1 + id % 2;
        int r = t == 1 ? 2 + id % 2 : 3;
        auto family = random_t_intersecting_family(7, t, r, rng);
        auto shifted = shift_family(family, 7, kBig, rng.next(), opts);
        if (!shifted.underlying.stable) {
            ++unstable;
            continue;
        }
        ++families;
        if (!is_t_intersecting(shifted.family, t).ok) ++violations;
        if (shifted.family.size() != family.size()) ++violations;
    }

    return {violations == 0 && unstable == 0,
            join_counts({{"complexes", 366},
                         {"s2_fixed_points", s2_checked},
                         {"nested_pairs", 100},
                         {"families", families},
                         {"violations", violations},
                         {"unstable", unstable}})};
}

Outcome criterion2_depth_agreement() {
    long disagreements = 0, unstable = 0;
    ShiftOptions opts{5, SubsetOrder::lex};
    for (const auto& c : corpus_366()) {
        auto r = depth(c, kBig, 43, opts);
        if (r.depth_skeleton != r.depth_links) ++disagreements;
        if (!r.shift_stable) {
            ++unstable;
            continue;
        }
        if (r.depth_links != r.depth_shift) ++disagreements;
    }
    return {disagreements == 0 && unstable == 0,
            join_counts({{"complexes", 366},
                         {"disagreements", disagreements},
                         {"unstable", unstable}})};
}

Outcome criterion3_ekr_simplices() {
    struct Row {
        int n, t, r;
    };
    const std::vector<Row> rows{{4, 1, 2}, {5, 1, 2}, {6, 1, 3}, {6, 2, 3}, {8, 2, 3}};
    long failures = 0;
    auto choose = [](long n, long k) {
        long v = 1;
        for (long j = 1; j <= k; ++j) v = v * (n - k + j) / j;
        return v;
    };
    for (auto [n, t, r] : rows) {
        auto sx = SimplicialComplex::from_facets({full_mask(n)}, n);
        auto brute = max_intersecting_family(sx, t, {r});
        if (!brute.exact || brute.lower != choose(n - t, r - t)) ++failures;
    }
    return {failures == 0, join_counts({{"instances", 5}, {"failures", failures}})};
}

Outcome criterion4_lemma_shifted() {
    long violations = 0, grids = 0;
    for (int id = 0; id < 100; ++id) {
        Rng rng(mix_seed(4400, static_cast<std::uint64_t>(id)));
        int n = 6 + rng.below(4);  // up to 9
        int floor = std::min(n, 3 + rng.below(4));
        auto c = random_shifted_complex(n, floor, rng);
        const int k = c.min_facet_cardinality();
        for (int t = 1; t <= 2; ++t) {
            if (c.faces_of_size(t).empty()) continue;
            for (int r = t; r <= 3; ++r) {
                if (k < (t + 1) * (r - t + 1) || r > c.dim() + 1) continue;
                for (const auto& sizes : nonempty_size_subsets(t, r)) {
                    auto star = star_bound(c, t, sizes);
                    auto brute = max_intersecting_family(c, t, sizes);
                    long at_prefix =
                        static_cast<long>(star_family(c, full_mask(t), sizes).size());
                    ++grids;
                    if (!brute.exact || brute.lower > star.value ||
                        brute.lower != at_prefix)
                        ++violations;
                }
            }
        }
    }
    return {violations == 0 && grids > 200,
            join_counts({{"complexes", 100}, {"grids", grids}, {"violations", violations}})};
}

Outcome criterion5_prop_easy() {
    long violations = 0, unstable = 0, checks = 0;
    ShiftOptions opts{3, SubsetOrder::lex};
    for (int id = 0; id < 200; ++id) {
        Rng rng(mix_seed(4500, static_cast<std::uint64_t>(id)));
        auto c = random_complex(5 + id % 3, rng);  // n <= 7
        for (int t = 1; t <= 2; ++t)
            for (int r = t; r <= 3; ++r) {
                if (c.faces_of_size(t).empty() || r > c.dim() + 1) continue;
                auto rep = check_prop_easy(c, t, r, kBig, rng.next(), opts);
                if (!rep.stable) {
                    ++unstable;
                    continue;
                }
                ++checks;
                if (!rep.dominates || !rep.first_t_face_present) ++violations;
            }
    }
    return {violations == 0 && unstable == 0 && checks > 400,
            join_counts({{"complexes", 200},
                         {"checks", checks},
                         {"violations", violations},
                         {"unstable", unstable}})};
}

Outcome criterion6_near_cone_fixtures() {
    long failures = 0;

    // the printed 3-near-cone: anti-star chain, dimension, missing apex face
    std::vector<Mask> gens;
    for (auto f : {std::vector<int>{1, 2, 4, 6}, {1, 3}, {1, 5}, {2, 3}, {2, 5},
                   {3, 4}, {3, 5}, {3, 6}}) {
        Mask mk = 0;
        for (int v : f) mk |= Mask{1} << (v - 1);
        gens.push_back(mk);
    }
    auto example = SimplicialComplex::from_facets(gens, 6);
    auto expect = [&](std::vector<std::vector<int>> facets) {
        std::vector<Mask> ms;
        for (const auto& f : facets) {
            Mask mk = 0;
            for (int v : f) mk |= Mask{1} << (v - 1);
            ms.push_back(mk);
        }
        return SimplicialComplex::from_facets(ms, 6);
    };
    if (example.dim() != 3) ++failures;
    if (example.f_vector().counts != std::vector<long>{1, 6, 13, 4, 1}) ++failures;
    auto seq = find_apex_sequence(example, 3);
    if (!seq) ++failures;
    if (seq) {
        if (seq->apex != std::vector<int>{0, 1, 2}) ++failures;
        if (!seq->chain[1].same_faces(
                expect({{2, 4, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 6}})))
            ++failures;
        if (!seq->chain[2].same_faces(expect({{4, 6}, {3, 4}, {3, 5}, {3, 6}})))
            ++failures;
        if (!seq->chain[3].same_faces(expect({{4, 6}, {5}}))) ++failures;
    }
    if (example.contains(0b111)) ++failures;  // {v1,v2,v3} must not be a face

    // Lemma face across the generated corpus
    long lemma_violations = 0;
    for (const auto& inst : near_cone_200())
        if (check_apex_face(inst.cx, inst.seq).violation) ++lemma_violations;

    return {failures == 0 && lemma_violations == 0,
            join_counts({{"fixture_failures", failures},
                         {"corpus", static_cast<long>(near_cone_200().size())},
                         {"lemma_violations", lemma_violations}})};
}

Outcome criterion7_link_commutation() {
    long violations = 0, unstable = 0, nevo_checked = 0, link_checks = 0,
         fvect_checks = 0;
    ShiftOptions opts{3, SubsetOrder::lex};
    for (std::size_t id = 0; id < near_cone_200().size(); ++id) {
        const auto& inst = near_cone_200()[id];
        auto rep = check_link_commutation(inst.cx, inst.seq, kBig,
                                          mix_seed(4700, id), opts);
        if (!rep.stable) {
            ++unstable;
            continue;
        }
        if (rep.nevo_equal) {
            ++nevo_checked;
            if (!*rep.nevo_equal) ++violations;
        }
        for (auto [s, equal] : rep.skeleton_link_equal) {
            ++link_checks;
            if (!equal) ++violations;
        }
        for (auto [r, lhs, rhs] : rep.fvector_checks) {
            ++fvect_checks;
            if (lhs != rhs) ++violations;
        }
    }
    return {violations == 0 && unstable == 0 && nevo_checked > 100,
            join_counts({{"instances", static_cast<long>(near_cone_200().size())},
                         {"nevo", nevo_checked},
                         {"skeleton_links", link_checks},
                         {"fvector_checks", fvect_checks},
                         {"violations", violations},
                         {"unstable", unstable}})};
}

Outcome criterion8_near_cone_ekr() {
    struct Combo {
        int i, r;
    };
    const std::vector<Combo> combos{{1, 2}, {1, 3}, {2, 3}};
    long violations = 0;
    std::vector<std::pair<std::string, long>> counts;

    for (auto [i, r] : combos) {
        const long depth_needed = (i + 1) * (r - i + 1) - 1;
        const long facet_needed = (i + 1) * (r - i + 1);
        long qualifying = 0;
        NearConeOptions opts;
        opts.deep = true;
        opts.extra_percent = 25;
        std::uint64_t attempt = 0;
        int examined = 0;
        while (qualifying < 8 && examined < 400) {
            Rng rng(mix_seed(4800 + static_cast<std::uint64_t>(100 * i + r), attempt++));
            auto inst = random_near_cone(i, 8, rng, opts);
            ++examined;
            if (!inst) continue;
            const auto& c = inst->cx;
            if (r > c.dim() + 1 || c.faces_of_size(i).empty()) continue;
            const int d = depth_links_only(c, kBig);
            const bool depth_ok = d >= depth_needed;
            const bool scm_ok = c.min_facet_cardinality() >= facet_needed &&
                                is_sequentially_cm(c, kBig).scm;
            if (!depth_ok && !scm_ok) continue;
            ++qualifying;
            for (const auto& sizes : nonempty_size_subsets(i, r)) {
                bool admissible = true;
                for (int s : sizes)
                    if (s > c.dim() + 1) admissible = false;
                if (!admissible) continue;
                auto star = star_bound(c, i, sizes);
                auto brute = max_intersecting_family(c, i, sizes);
                if (!brute.exact || brute.lower > star.value) ++violations;
            }
        }
        counts.emplace_back("qualifying_i" + std::to_string(i) + "r" + std::to_string(r),
                            qualifying);
        if (qualifying < 8) ++violations;  // vacuity guard
    }
    counts.emplace_back("violations", violations);
    return {violations == 0, join_counts(counts)};
}

Outcome criterion9_homology_sanity() {
    long failures = 0;
    for (const auto& c : corpus_366())
        for (const auto* field : {&kTwo, &kBig}) {
            for (int k = 1; k <= c.dim(); ++k) {
                auto prod = mul_gfp(boundary_matrix(c, k, *field),
                                    boundary_matrix(c, k + 1, *field), *field);
                for (auto v : prod.a)
                    if (v % field->p != 0) ++failures;
            }
            if (reduced_betti(c, *field).euler_from_betti() != reduced_euler(c))
                ++failures;
        }
    return {failures == 0,
            join_counts({{"complexes", 366}, {"primes", 2}, {"failures", failures}})};
}

Outcome criterion10_negative_control() {
    auto triangle = SimplicialComplex::from_facets({0b011, 0b101, 0b110}, 3);
    auto report = verify_borg(triangle, 1, {2}, kBig, 1);
    bool ok = report.brute.exact && report.brute.lower == 3 && report.star.value == 2 &&
              report.verdict == BorgVerdict::hypothesis_not_met;
    return {ok, join_counts({{"brute", report.brute.lower},
                             {"star", report.star.value}}) +
                    ", verdict=" + to_string(report.verdict)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;  // 0 = no stated cap
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"shifting axioms S1-S5, 5-seed unanimity", 60, criterion1_axioms},
        {"depth triple agreement (skeleton = links = shift)", 120,
         criterion2_depth_agreement},
        {"EKR oracle on simplices", 30, criterion3_ekr_simplices},
        {"star bound with lex-star attainment on shifted complexes", 300,
         criterion4_lemma_shifted},
        {"shifted-link dominance on random complexes", 0, criterion5_prop_easy},
        {"near-cone fixtures and apex-face lemma", 0, criterion6_near_cone_fixtures},
        {"link/shift commutation and f-vector identities", 0,
         criterion7_link_commutation},
        {"near-cone intersecting-family bounds (t = i)", 600, criterion8_near_cone_ekr},
        {"boundary^2 = 0 and Euler identity at p = 2 and p = 2^31-1", 0,
         criterion9_homology_sanity},
        {"negative control: hollow triangle is hypothesis-not-met", 0,
         criterion10_negative_control},
    };

    int failed = 0;
    for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
        const auto& criterion = criteria[idx];
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        bool in_budget = criterion.budget_seconds == 0 || seconds < criterion.budget_seconds;
        bool pass = outcome.pass && in_budget;
        if (!pass) ++failed;
        std::printf("[%s] %2zu. %s (%s) [%.1fs%s]\n", pass ? "PASS" : "FAIL", idx + 1,
                    criterion.name, outcome.detail.c_str(), seconds,
                    in_budget ? "" : " OVER BUDGET");
        std::fflush(stdout);
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failed == 0 ? 0 : 1;
}
