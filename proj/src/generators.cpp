#include "ekrshift/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ekrshift/ekr.hpp"
#include "ekrshift/gfp.hpp"

namespace ekrshift {

std::vector<SimplicialComplex> exhaustive_complexes(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("exhaustive enumeration is restricted to n <= 4");
    const int subsets = (1 << n) - 1;  // nonempty subsets of [n]
    std::vector<Mask> nonempty;
    for (Mask m = 1; m <= static_cast<Mask>(subsets); ++m) nonempty.push_back(m);

    std::vector<SimplicialComplex> out;
    for (std::uint64_t choice = 1; choice < (1ULL << subsets); ++choice) {
        std::vector<Mask> gens;
        for (int b = 0; b < subsets; ++b)
            if (choice & (1ULL << b)) gens.push_back(nonempty[static_cast<std::size_t>(b)]);
        bool antichain = true;
        for (std::size_t a = 0; a < gens.size() && antichain; ++a)
            for (std::size_t b = 0; b < gens.size(); ++b)
                if (a != b && subset_of(gens[a], gens[b])) {
                    antichain = false;
                    break;
                }
        if (!antichain) continue;  // its closure equals a smaller antichain's
        out.push_back(SimplicialComplex::from_facets(gens, n));
    }
    return out;
}

SimplicialComplex random_complex(int n, Rng& rng) {
    int count = 1 + rng.below(2 * n);
    std::vector<Mask> gens;
    for (int i = 0; i < count; ++i) {
        int size = 1 + rng.below(n);
        gens.push_back(rng.k_subset(n, size));
    }
    return SimplicialComplex::from_facets(gens, n);
}

std::pair<SimplicialComplex, SimplicialComplex> random_nested_pair(int n, Rng& rng) {
    auto super = random_complex(n, rng);
    if (super.dim() >= 0 && rng.coin(33)) {
        int r = rng.below(super.dim() + 1);
        return {skeleton(super, r), super};
    }
    std::vector<Mask> kept;
    for (Mask f : super.facets())
        if (rng.coin(50)) kept.push_back(f);
    if (kept.empty()) kept.push_back(super.facets().front());
    return {SimplicialComplex::from_facets(kept, n, super.labels()), super};
}

std::vector<Mask> random_t_intersecting_family(int n, int t, int r, Rng& rng) {
    if (!(1 <= t && t <= r && r <= n)) throw std::invalid_argument("need 1 <= t <= r <= n");
    std::vector<Mask> all_r = k_subsets_lex(n, r);
    std::vector<Mask> members;
    if (rng.coin(50)) {
        // star through a random t-core
        Mask core = rng.k_subset(n, t);
        std::vector<Mask> candidates;
        for (Mask f : all_r)
            if (subset_of(core, f)) candidates.push_back(f);
        for (Mask f : candidates)
            if (rng.coin(60)) members.push_back(f);
        if (members.empty()) members.push_back(rng.pick(candidates));
    } else {
        // greedy random family
        int attempts = 2 * static_cast<int>(all_r.size());
        while (attempts-- > 0) {
            Mask f = rng.pick(all_r);
            bool ok = true;
            for (Mask g : members)
                if (face_size(f & g) < t) {
                    ok = false;
                    break;
                }
            if (ok && std::find(members.begin(), members.end(), f) == members.end())
                members.push_back(f);
        }
        if (members.empty()) members.push_back(rng.pick(all_r));
    }
    return members;
}

SimplicialComplex random_shifted_complex(int n, int min_facet_card, Rng& rng) {
    if (min_facet_card < 1 || min_facet_card > n)
        throw std::invalid_argument("min facet cardinality must lie in [1, n]");
    int count = 1 + rng.below(3);
    std::vector<Mask> gens;
    for (int i = 0; i < count; ++i) {
        int size = min_facet_card + rng.below(n - min_facet_card + 1);
        gens.push_back(rng.k_subset(n, size));
    }
    // close each cardinality class under swaps toward earlier vertices
    std::unordered_set<Mask> closed(gens.begin(), gens.end());
    std::vector<Mask> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        Mask f = queue.back();
        queue.pop_back();
        Mask present = f;
        while (present) {
            int i = std::countr_zero(present);
            present &= present - 1;
            Mask earlier = ((Mask{1} << i) - 1) & ~f;
            while (earlier) {
                int j = std::countr_zero(earlier);
                earlier &= earlier - 1;
                Mask swapped = (f ^ (Mask{1} << i)) | (Mask{1} << j);
                if (closed.insert(swapped).second) queue.push_back(swapped);
            }
        }
    }
    return SimplicialComplex::from_facets({closed.begin(), closed.end()}, n);
}

namespace {

SimplicialComplex cone_with_front_vertex(const SimplicialComplex& base) {
    // new apex becomes position 0; base vertices move up one slot
    std::vector<Mask> faces;
    for (Mask f : base.all_faces()) {
        faces.push_back(f << 1);
        faces.push_back((f << 1) | 1);
    }
    std::vector<std::string> labels;
    labels.push_back("a" + std::to_string(base.n() + 1));
    for (const auto& l : base.labels()) labels.push_back(l);
    return SimplicialComplex::from_faces(faces, base.n() + 1, std::move(labels));
}

}  // namespace

std::optional<NearConeInstance> random_near_cone(int i, int max_n, Rng& rng,
                                                 NearConeOptions opts) {
    if (i < 1) throw std::invalid_argument("near-cone order must be >= 1");

    SimplicialComplex cx = [&] {
        if (opts.deep) {
            // skeleton of a simplex: Cohen-Macaulay base with known depth
            int m = std::min(max_n - i, 4 + rng.below(3));
            int card = 2 + rng.below(m - 1);  // facet cardinality in [2, m]
            return SimplicialComplex::from_facets(k_subsets_lex(m, card), m);
        }
        int m = std::min(max_n - i, 2 + rng.below(4));
        return random_complex(m, rng);
    }();

    for (int step = 0; step < i; ++step) {
        cx = cone_with_front_vertex(cx);
        if (rng.coin(opts.extra_percent) && cx.dim() >= 1) {
            // adjoin a facet avoiding the new apex whose boundary is present
            std::vector<Mask> candidates;
            for (int size = 2; size <= cx.dim() + 1; ++size)
                for (Mask f : k_subsets_lex(cx.n() - 1, size)) {
                    Mask shifted_up = f << 1;  // avoid position 0 (the apex)
                    if (cx.contains(shifted_up)) continue;
                    bool boundary_in = true;
                    Mask rest = shifted_up;
                    while (rest) {
                        Mask bit = rest & (~rest + 1);
                        rest ^= bit;
                        if (!cx.contains(shifted_up ^ bit)) {
                            boundary_in = false;
                            break;
                        }
                    }
                    if (boundary_in) candidates.push_back(shifted_up);
                }
            if (!candidates.empty()) {
                std::vector<Mask> gens = cx.facets();
                gens.push_back(rng.pick(candidates));
                cx = SimplicialComplex::from_facets(gens, cx.n(), cx.labels());
            }
        }
    }

    std::vector<int> apex;
    for (int j = 0; j < i; ++j) apex.push_back(j);
    auto seq = validate_apex_sequence(cx, apex);
    if (!seq) return std::nullopt;
    return NearConeInstance{std::move(cx), std::move(*seq)};
}

std::vector<NearConeInstance> near_cone_corpus(int count, int i, int max_n,
                                               std::uint64_t seed, NearConeOptions opts) {
    std::vector<NearConeInstance> out;
    std::uint64_t attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        Rng rng(mix_seed(seed, attempt++));
        if (auto inst = random_near_cone(i, max_n, rng, opts)) out.push_back(std::move(*inst));
        if (attempt > static_cast<std::uint64_t>(count) * 1000)
            throw std::runtime_error("near-cone generator yield is pathologically low");
    }
    return out;
}

}  // namespace ekrshift
