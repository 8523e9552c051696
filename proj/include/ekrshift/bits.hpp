#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ekrshift {

// A face is a subset of an ordered vertex set, one bit per position
// (bit 0 = first/smallest vertex). Complexes enforce n <= 64.
using Mask = std::uint64_t;

inline int face_size(Mask m) { return std::popcount(m); }
inline int face_dim(Mask m) { return std::popcount(m) - 1; }

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Set-bit positions, ascending.
inline std::vector<int> face_vertices(Mask m) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        v.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return v;
}

/// Lexicographic order on faces viewed as ascending vertex tuples;
/// a proper prefix precedes its extensions ({1} < {1,2} < {2}).
inline bool lex_less(Mask a, Mask b) {
    while (a && b) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

/// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<Mask> k_subsets_lex(int n, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
    for (;;) {
        Mask m = 0;
        for (int j : idx) m |= Mask{1} << j;
        out.push_back(m);
        int j = k - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l)
            idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
    }
    return out;
}

/// Renumber the bits of `m` after deleting the positions in `removed`;
/// m and removed must be disjoint.
inline Mask compress_mask(Mask m, Mask removed) {
    Mask out = 0;
    Mask rest = m;
    while (rest) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        int below = std::popcount(removed & ((Mask{1} << p) - 1));
        out |= Mask{1} << (p - below);
    }
    return out;
}

/// Inverse of compress_mask: re-embed `m` into the ambient positions not
/// covered by `removed`.
inline Mask expand_mask(Mask m, Mask removed) {
    Mask out = 0;
    int src = 0;
    for (int p = 0; p < 64 && (m >> src); ++p) {
        if (removed & (Mask{1} << p)) continue;
        if (m & (Mask{1} << src)) out |= Mask{1} << p;
        ++src;
    }
    return out;
}

inline std::string mask_to_string(Mask m, const std::vector<std::string>& labels) {
    std::string s = "{";
    bool first = true;
    for (int p : face_vertices(m)) {
        if (!first) s += ",";
        first = false;
        s += labels[static_cast<std::size_t>(p)];
    }
    s += "}";
    return s;
}

}  // namespace ekrshift
