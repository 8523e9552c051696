#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ekrshift/complex.hpp"
#include "ekrshift/gfp.hpp"
#include "ekrshift/shifting.hpp"

namespace ekrshift {

/// Reduced Betti numbers over GF(p). betti(i) is defined for
/// -1 <= i <= dim; the empty complex {∅} has betti(-1) = 1, anything with a
/// vertex has betti(-1) = 0. chain_dims mirrors the f-vector.
struct BettiTable {
    std::uint64_t prime = 0;
    std::vector<long> values;  // values[i + 1] = reduced Betti number in degree i
    std::vector<long> chain_dims;

    long betti(int i) const {
        std::size_t idx = static_cast<std::size_t>(i + 1);
        return idx < values.size() ? values[idx] : 0;
    }
    long euler_from_betti() const;
};

/// Matrix of ∂_k from the span of Δ_(k) to Δ_(k-1), cardinality-indexed:
/// deleting the j-th smallest vertex carries sign (-1)^j, and ∂_1 is the
/// augmentation row onto Δ_(0) = {∅}. Requires 0 <= k <= dim+1.
MatrixGFp boundary_matrix(const SimplicialComplex& cx, int k, const FieldConfig& cfg);

BettiTable reduced_betti(const SimplicialComplex& cx, const FieldConfig& cfg);

/// Reduced Euler characteristic from the f-vector: Σ_{s>=0} (-1)^{s-1} f_s,
/// the empty face contributing -1.
long reduced_euler(const SimplicialComplex& cx);

/// Cohen-Macaulay over GF(p): every face link (including lk ∅ = Δ) has
/// vanishing reduced homology below its dimension. On failure the witness
/// is the first (σ, i) in size-then-lex scan order.
struct CmResult {
    bool cm = false;
    std::optional<std::pair<Mask, int>> witness;
};

CmResult is_cohen_macaulay(const SimplicialComplex& cx, const FieldConfig& cfg);

/// Sequentially CM: every pure r-skeleton is Cohen-Macaulay.
struct SeqCmResult {
    bool scm = false;
    std::optional<int> failed_r;
    std::optional<std::pair<Mask, int>> witness;
};

SeqCmResult is_sequentially_cm(const SimplicialComplex& cx, const FieldConfig& cfg);

/// Depth by three routes: the largest d whose d-skeleton is CM, the largest
/// d with vanishing link homology below d - |σ|, and the minimum facet
/// dimension of the exterior shift. The first two must agree always, the
/// third whenever the shift is stable. The witness is a face σ and degree i
/// with nonvanishing reduced homology in lk σ certifying depth+1 fails.
struct DepthReport {
    int depth_skeleton = 0;
    int depth_links = 0;
    int depth_shift = 0;
    bool agree = false;
    bool shift_stable = false;
    std::optional<std::pair<Mask, int>> witness;
};

DepthReport depth(const SimplicialComplex& cx, const FieldConfig& cfg,
                  std::uint64_t seed = 0, ShiftOptions opts = {});

/// The link-vanishing characterization alone (no shifting); used where the
/// depth number is needed as a hypothesis rather than a cross-check.
int depth_links_only(const SimplicialComplex& cx, const FieldConfig& cfg);

}  // namespace ekrshift
