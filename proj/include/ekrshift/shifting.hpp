#pragma once

#include <optional>
#include <vector>

#include "ekrshift/complex.hpp"
#include "ekrshift/gfp.hpp"

namespace ekrshift {

/// Order in which candidate k-sets are fed to the rank oracle. `lex` (first
/// vertex smallest) is the convention validated by the axiom suite; the
/// reverse ordering is kept behind this switch so a falsifying corpus could
/// be investigated without a code change.
enum class SubsetOrder { lex, reverse_lex };

struct ShiftOptions {
    int trials = 3;
    SubsetOrder order = SubsetOrder::lex;
};

/// Result of exterior algebraic shifting together with its genericity
/// certificate: the prime, the per-trial seeds, and how many trials agreed
/// with the emitted (majority) face set. stable means unanimous agreement.
struct ShiftResult {
    SimplicialComplex shifted;
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> seeds;
    int trials_agreed = 0;
    bool stable = false;
    /// per_size_kept[k] = kept k-sets in lex order (index 0 unused).
    std::vector<std::vector<Mask>> per_size_kept;
};

/// Exterior algebraic shift over GF(p). For each cardinality k a generic
/// invertible matrix g is drawn; candidate k-sets S are scanned in lex
/// order and S is kept iff the row of wedge coordinates
/// (compound_minor(g, S, T))_{T ∈ Δ_(k)} is independent of the rows kept so
/// far. Restricting coordinates to face columns computes rank in the
/// quotient by the non-face span, so exactly f_k(Δ) sets survive per
/// cardinality. The scan repeats for `trials` seeds and the majority face
/// set is emitted with stability metadata; disagreement is surfaced, never
/// averaged. Requires n <= 20.
ShiftResult exterior_shift(const SimplicialComplex& cx, const FieldConfig& cfg,
                           std::uint64_t seed, ShiftOptions opts = {});

struct FamilyShiftResult {
    std::vector<Mask> family;  // the size-r layer of the shifted complex
    ShiftResult underlying;
};

/// Shift of an r-uniform family: build the generated complex, shift it, and
/// return the size-r layer. Throws on mixed cardinalities.
FamilyShiftResult shift_family(const std::vector<Mask>& members, int n,
                               const FieldConfig& cfg, std::uint64_t seed,
                               ShiftOptions opts = {});

/// Executable report for the shifting axioms. s2 applies only when the
/// input is already shifted; s4 needs a subcomplex, s5 a t-intersecting
/// family. Absent inputs leave the corresponding verdicts unset.
struct AxiomReport {
    bool s1 = false;                // output shifted
    std::optional<bool> s2;        // fixed point on shifted input
    bool s3 = false;                // f-vector preserved
    std::optional<bool> s4;        // Shift Γ ⊆ Shift Δ
    std::optional<bool> s5;        // shifted family still t-intersecting
    bool stable = false;
    bool ok() const;
};

AxiomReport check_axioms(const SimplicialComplex& cx,
                         const std::optional<SimplicialComplex>& sub,
                         const std::optional<std::vector<Mask>>& family, int t,
                         const FieldConfig& cfg, std::uint64_t seed,
                         ShiftOptions opts = {});

}  // namespace ekrshift
