#include "ekrshift/homology.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ekrshift {

long BettiTable::euler_from_betti() const {
    long e = 0;
    int sign = -1;  // degree -1 first
    for (long b : values) {
        e += sign * b;
        sign = -sign;
    }
    return e;
}

MatrixGFp boundary_matrix(const SimplicialComplex& cx, int k, const FieldConfig& cfg) {
    if (k < 0 || k > cx.dim() + 1)
        throw std::invalid_argument("boundary degree out of range");
    const auto& cols = cx.faces_of_size(k);
    const auto& rows = cx.faces_of_size(k - 1);  // empty for k = 0
    std::unordered_map<Mask, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    MatrixGFp m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Mask f = cols[j];
        int pos = 0;
        Mask rest = f;
        while (rest) {
            Mask bit = rest & (~rest + 1);
            rest ^= bit;
            std::uint64_t entry = (pos % 2 == 0) ? 1 % cfg.p : cfg.neg(1 % cfg.p);
            m.at(row_index.at(f ^ bit), j) = entry;
            ++pos;
        }
    }
    return m;
}

long reduced_euler(const SimplicialComplex& cx) {
    long e = 0;
    int sign = -1;  // (-1)^{s-1} for s = 0
    auto fv = cx.f_vector();
    for (long f : fv.counts) {
        e += sign * f;
        sign = -sign;
    }
    return e;
}

BettiTable reduced_betti(const SimplicialComplex& cx, const FieldConfig& cfg) {
    const int d = cx.dim();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d) + 3, 0);
    for (int k = 1; k <= d + 1; ++k)
        ranks[static_cast<std::size_t>(k)] = rank_gfp(boundary_matrix(cx, k, cfg), cfg);

    BettiTable table;
    table.prime = cfg.p;
    auto fv = cx.f_vector();
    table.chain_dims = fv.counts;
    for (int i = -1; i <= d; ++i) {
        long f = fv.counts[static_cast<std::size_t>(i + 1)];
        long r1 = static_cast<long>(ranks[static_cast<std::size_t>(i + 1)]);
        long r2 = static_cast<long>(ranks[static_cast<std::size_t>(i + 2)]);
        table.values.push_back(f - r1 - r2);
    }
    return table;
}

CmResult is_cohen_macaulay(const SimplicialComplex& cx, const FieldConfig& cfg) {
    for (Mask sigma : cx.all_faces()) {
        auto lk = link(cx, sigma);
        if (lk.dim() < 0) continue;  // facet link {∅}: nothing below dimension -1
        auto betti = reduced_betti(lk, cfg);
        for (int i = -1; i < lk.dim(); ++i)
            if (betti.betti(i) != 0) return {false, std::make_pair(sigma, i)};
    }
    return {true, std::nullopt};
}

SeqCmResult is_sequentially_cm(const SimplicialComplex& cx, const FieldConfig& cfg) {
    for (int r = 0; r <= cx.dim(); ++r) {
        auto cm = is_cohen_macaulay(pure_skeleton(cx, r), cfg);
        if (!cm.cm) return {false, r, cm.witness};
    }
    return {true, std::nullopt, std::nullopt};
}

int depth_links_only(const SimplicialComplex& cx, const FieldConfig& cfg) {
    int bound = cx.dim();  // depth never exceeds the dimension
    for (Mask sigma : cx.all_faces()) {
        auto betti = reduced_betti(link(cx, sigma), cfg);
        for (int i = -1; i < static_cast<int>(betti.values.size()) - 1; ++i)
            if (betti.betti(i) != 0) {
                bound = std::min(bound, i + face_size(sigma));
                break;
            }
    }
    return bound;
}

namespace {

// like depth_links_only but remembers the binding witness
std::pair<int, std::optional<std::pair<Mask, int>>> depth_links_with_witness(
    const SimplicialComplex& cx, const FieldConfig& cfg) {
    int bound = cx.dim();
    std::optional<std::pair<Mask, int>> witness;
    for (Mask sigma : cx.all_faces()) {
        auto betti = reduced_betti(link(cx, sigma), cfg);
        for (int i = -1; i < static_cast<int>(betti.values.size()) - 1; ++i)
            if (betti.betti(i) != 0) {
                if (i + face_size(sigma) < bound || !witness) {
                    bound = std::min(bound, i + face_size(sigma));
                    witness = std::make_pair(sigma, i);
                }
                break;
            }
    }
    return {bound, witness};
}

}  // namespace

DepthReport depth(const SimplicialComplex& cx, const FieldConfig& cfg,
                  std::uint64_t seed, ShiftOptions opts) {
    DepthReport report;

    // (a) largest d with a Cohen-Macaulay d-skeleton; CM-ness of skeleta is
    // monotone downward, so scan from the top
    report.depth_skeleton = -1;
    for (int d = cx.dim(); d >= 0; --d)
        if (is_cohen_macaulay(skeleton(cx, d), cfg).cm) {
            report.depth_skeleton = d;
            break;
        }

    // (b) link-vanishing characterization
    auto [links, witness] = depth_links_with_witness(cx, cfg);
    report.depth_links = links;
    report.witness = witness;

    // (c) minimum facet dimension of the exterior shift
    auto shifted = exterior_shift(cx, cfg, seed, opts);
    report.shift_stable = shifted.stable;
    report.depth_shift = shifted.shifted.min_facet_cardinality() - 1;

    report.agree = report.depth_skeleton == report.depth_links &&
                   (!report.shift_stable || report.depth_links == report.depth_shift);
    return report;
}

}  // namespace ekrshift
