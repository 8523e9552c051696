#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "ekrshift/complex.hpp"

namespace ekrshift::testing {

// 1-based vertex list -> mask, matching the default labels "1".."n"
inline Mask m(std::initializer_list<int> verts) {
    Mask out = 0;
    for (int v : verts) out |= Mask{1} << (v - 1);
    return out;
}

inline SimplicialComplex cx(std::initializer_list<std::initializer_list<int>> facets, int n) {
    std::vector<Mask> gens;
    for (auto f : facets) gens.push_back(m(f));
    return SimplicialComplex::from_facets(gens, n);
}

inline std::set<Mask> face_set(const SimplicialComplex& c) {
    auto faces = c.all_faces();
    return {faces.begin(), faces.end()};
}

// independent downward-closure oracle: enumerate subsets with plain sets of
// sorted vertex lists, no bit tricks shared with the implementation
inline std::set<std::set<int>> closure_oracle(
    std::initializer_list<std::initializer_list<int>> facets) {
    std::set<std::set<int>> faces;
    for (auto f : facets) {
        std::vector<int> verts(f);
        const std::size_t k = verts.size();
        for (std::size_t pick = 0; pick < (1ULL << k); ++pick) {
            std::set<int> sub;
            for (std::size_t j = 0; j < k; ++j)
                if (pick & (1ULL << j)) sub.insert(verts[j]);
            faces.insert(sub);
        }
    }
    return faces;
}

inline const std::initializer_list<std::initializer_list<int>> kThreeNearConeFacets = {
    {1, 2, 4, 6}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 6}};

inline SimplicialComplex three_near_cone() { return cx(kThreeNearConeFacets, 6); }

inline SimplicialComplex hollow_triangle() { return cx({{1, 2}, {1, 3}, {2, 3}}, 3); }

inline SimplicialComplex full_simplex(int n) {
    return SimplicialComplex::from_facets({full_mask(n)}, n);
}

inline SimplicialComplex four_cycle() {
    return cx({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 4);
}

}  // namespace ekrshift::testing
