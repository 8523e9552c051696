#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ekrshift/bits.hpp"

namespace ekrshift {

/// Face counts indexed by cardinality: counts[s] = |Δ_(s)|, so counts[0] = 1
/// for the empty face and the last entry counts the top-dimensional faces.
struct FVector {
    std::vector<long> counts;
    bool operator==(const FVector&) const = default;
};

/// A finite simplicial complex on an ordered vertex set of at most 64
/// labels. Faces are stored as bitmasks over the ambient order; the empty
/// face is always present and the face set is downward closed. Vertex order
/// is part of the complex's identity (shiftedness and shifting depend on
/// it); the ambient order may contain vertices that occur in no face, which
/// is what link() and header-declared parses produce.
///
/// Complexes are immutable values: every operation returns a new complex.
class SimplicialComplex {
public:
    /// The complex {∅} on an empty vertex set.
    SimplicialComplex() : by_size_{{0}}, set_{0}, facets_{0} {}

    /// Downward closure of the listed generator sets; dominated generators
    /// are absorbed when the facets are recomputed.
    static SimplicialComplex from_facets(const std::vector<Mask>& generators, int n,
                                         std::vector<std::string> labels = {});

    /// Adopts an explicit face list; throws unless it is downward closed.
    /// The empty face is implied.
    static SimplicialComplex from_faces(const std::vector<Mask>& faces, int n,
                                        std::vector<std::string> labels = {});

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// max face cardinality minus one; -1 for the complex {∅}.
    int dim() const { return static_cast<int>(by_size_.size()) - 2; }

    long num_faces() const;
    bool contains(Mask f) const { return set_.count(f) != 0; }

    /// Faces of cardinality s in lex order; empty for s out of range.
    const std::vector<Mask>& faces_of_size(int s) const;

    /// All faces, grouped by cardinality, lex within each group.
    std::vector<Mask> all_faces() const;

    /// Inclusion-maximal faces, lex order.
    const std::vector<Mask>& facets() const { return facets_; }

    /// The paper-facing k: smallest facet cardinality (0 for {∅}).
    int min_facet_cardinality() const;

    FVector f_vector() const;

    /// Vertices that occur in at least one face.
    Mask used_vertices() const { return used_; }

    /// Face-set equality ignoring labels (requires equal ambient size).
    bool same_faces(const SimplicialComplex& o) const;

    bool operator==(const SimplicialComplex& o) const {
        return labels_ == o.labels_ && same_faces(o);
    }

private:
    struct raw_tag {};
    explicit SimplicialComplex(raw_tag) {}
    static SimplicialComplex build(std::unordered_set<Mask> faces, int n,
                                   std::vector<std::string> labels);

    std::vector<std::string> labels_;
    std::vector<std::vector<Mask>> by_size_;  // by_size_[s] = faces of cardinality s
    std::unordered_set<Mask> set_;
    std::vector<Mask> facets_;
    Mask used_ = 0;
};

/// lk_Δ σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}, on the ambient order minus σ.
/// Throws if σ is not a face.
SimplicialComplex link(const SimplicialComplex& cx, Mask sigma);

/// ast_Δ σ = faces avoiding σ (the deletion), on the unchanged ambient order.
SimplicialComplex antistar(const SimplicialComplex& cx, Mask sigma);

/// Faces of dimension at most r (cardinality <= r+1). r >= 0.
SimplicialComplex skeleton(const SimplicialComplex& cx, int r);

/// Complex generated by the faces of dimension exactly r; throws when Δ has
/// no r-dimensional face.
SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int r);

/// Join on disjoint label sets; both operands need at least one vertex.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct ShiftednessWitness {
    Mask face = 0;
    int i = 0;  // vertex present in face
    int j = 0;  // earlier vertex whose swap is missing
};

/// Closed under replacing any vertex by any earlier one in the ambient order.
bool is_shifted(const SimplicialComplex& cx,
                ShiftednessWitness* witness = nullptr);

}  // namespace ekrshift
