#include "ekrshift/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ekrshift {

namespace {

constexpr long kFaceBudget = 1L << 22;

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

SimplicialComplex SimplicialComplex::build(std::unordered_set<Mask> faces, int n,
                                           std::vector<std::string> labels) {
    if (n < 0 || n > 64) throw std::invalid_argument("vertex count must be in [0, 64]");
    if (labels.empty()) labels = default_labels(n);
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate vertex label: " + l);
    }
    faces.insert(0);

    SimplicialComplex cx{raw_tag{}};
    cx.labels_ = std::move(labels);
    int d1 = 0;
    for (Mask f : faces) {
        if (!subset_of(f, full_mask(n)))
            throw std::invalid_argument("face uses a vertex outside the ambient order");
        d1 = std::max(d1, face_size(f));
        cx.used_ |= f;
    }
    cx.by_size_.assign(static_cast<std::size_t>(d1) + 1, {});
    for (Mask f : faces) cx.by_size_[static_cast<std::size_t>(face_size(f))].push_back(f);
    for (auto& layer : cx.by_size_) std::sort(layer.begin(), layer.end(), lex_less);
    cx.set_ = std::move(faces);

    for (const auto& layer : cx.by_size_)
        for (Mask f : layer) {
            bool maximal = true;
            Mask candidates = full_mask(n) & ~f;
            while (candidates) {
                Mask bit = candidates & (~candidates + 1);
                candidates ^= bit;
                if (cx.set_.count(f | bit)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) cx.facets_.push_back(f);
        }
    std::sort(cx.facets_.begin(), cx.facets_.end(), lex_less);
    return cx;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Mask>& generators, int n,
                                                 std::vector<std::string> labels) {
    if (generators.empty()) throw std::invalid_argument("empty facet list");
    std::unordered_set<Mask> faces;
    long budget = kFaceBudget;
    for (Mask g : generators) {
        if (!subset_of(g, full_mask(n)))
            throw std::invalid_argument("generator uses a vertex outside the ambient order");
        // enumerate all subsets of g
        Mask sub = g;
        for (;;) {
            if (faces.insert(sub).second && --budget < 0)
                throw std::length_error("complex exceeds the desk-scale face budget");
            if (sub == 0) break;
            sub = (sub - 1) & g;
        }
    }
    return build(std::move(faces), n, std::move(labels));
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Mask>& faces, int n,
                                                std::vector<std::string> labels) {
    std::unordered_set<Mask> set(faces.begin(), faces.end());
    set.insert(0);
    for (Mask f : set) {
        Mask rest = f;
        while (rest) {
            Mask bit = rest & (~rest + 1);
            rest ^= bit;
            if (!set.count(f ^ bit))
                throw std::invalid_argument("face list is not downward closed");
        }
    }
    return build(std::move(set), n, std::move(labels));
}

long SimplicialComplex::num_faces() const {
    long total = 0;
    for (const auto& layer : by_size_) total += static_cast<long>(layer.size());
    return total;
}

const std::vector<Mask>& SimplicialComplex::faces_of_size(int s) const {
    static const std::vector<Mask> empty;
    if (s < 0 || s >= static_cast<int>(by_size_.size())) return empty;
    return by_size_[static_cast<std::size_t>(s)];
}

std::vector<Mask> SimplicialComplex::all_faces() const {
    std::vector<Mask> out;
    out.reserve(static_cast<std::size_t>(num_faces()));
    for (const auto& layer : by_size_) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

int SimplicialComplex::min_facet_cardinality() const {
    int k = 64;
    for (Mask f : facets_) k = std::min(k, face_size(f));
    return facets_.empty() ? 0 : k;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    fv.counts.reserve(by_size_.size());
    for (const auto& layer : by_size_) fv.counts.push_back(static_cast<long>(layer.size()));
    return fv;
}

bool SimplicialComplex::same_faces(const SimplicialComplex& o) const {
    if (n() != o.n() || set_.size() != o.set_.size()) return false;
    for (Mask f : set_)
        if (!o.set_.count(f)) return false;
    return true;
}

SimplicialComplex link(const SimplicialComplex& cx, Mask sigma) {
    if (!cx.contains(sigma)) throw std::invalid_argument("link of a non-face");
    std::vector<Mask> faces;
    for (Mask f : cx.all_faces())
        if (subset_of(sigma, f)) faces.push_back(compress_mask(f & ~sigma, sigma));
    std::vector<std::string> labels;
    for (int v = 0; v < cx.n(); ++v)
        if (!(sigma & (Mask{1} << v))) labels.push_back(cx.labels()[static_cast<std::size_t>(v)]);
    return SimplicialComplex::from_faces(faces, cx.n() - face_size(sigma), std::move(labels));
}

SimplicialComplex antistar(const SimplicialComplex& cx, Mask sigma) {
    std::vector<Mask> faces;
    for (Mask f : cx.all_faces())
        if ((f & sigma) == 0) faces.push_back(f);
    return SimplicialComplex::from_faces(faces, cx.n(), cx.labels());
}

SimplicialComplex skeleton(const SimplicialComplex& cx, int r) {
    if (r < 0) throw std::invalid_argument("skeleton dimension must be >= 0");
    std::vector<Mask> faces;
    for (int s = 0; s <= std::min(r + 1, cx.dim() + 1); ++s)
        for (Mask f : cx.faces_of_size(s)) faces.push_back(f);
    return SimplicialComplex::from_faces(faces, cx.n(), cx.labels());
}

SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int r) {
    const auto& top = cx.faces_of_size(r + 1);
    if (top.empty()) throw std::invalid_argument("no face of the requested dimension");
    return SimplicialComplex::from_facets(top, cx.n(), cx.labels());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n() == 0 || b.n() == 0)
        throw std::invalid_argument("join operand has an empty vertex set");
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) {
        if (std::find(labels.begin(), labels.end(), l) != labels.end())
            throw std::invalid_argument("join operands share the vertex label: " + l);
        labels.push_back(l);
    }
    std::vector<Mask> faces;
    for (Mask fa : a.all_faces())
        for (Mask fb : b.all_faces()) faces.push_back(fa | (fb << a.n()));
    return SimplicialComplex::from_faces(faces, a.n() + b.n(), std::move(labels));
}

bool is_shifted(const SimplicialComplex& cx, ShiftednessWitness* witness) {
    for (Mask f : cx.all_faces()) {
        Mask present = f;
        while (present) {
            int i = std::countr_zero(present);
            present &= present - 1;
            Mask earlier = (Mask{1} << i) - 1;
            Mask missing = earlier & ~f & full_mask(cx.n());
            while (missing) {
                int j = std::countr_zero(missing);
                missing &= missing - 1;
                Mask swapped = (f ^ (Mask{1} << i)) | (Mask{1} << j);
                if (!cx.contains(swapped)) {
                    if (witness) *witness = {f, i, j};
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ekrshift
