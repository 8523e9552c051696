#include "ekrshift/ekr.hpp"

#include <algorithm>
#include <stdexcept>

#include "ekrshift/homology.hpp"
#include "ekrshift/nearcone.hpp"

namespace ekrshift {

IntersectingCheck is_t_intersecting(const std::vector<Mask>& members, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    std::vector<Mask> sorted = members;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            if (face_size(sorted[a] & sorted[b]) < t)
                return {false, std::make_pair(sorted[a], sorted[b])};
    return {true, std::nullopt};
}

namespace {

void check_size_set(const SimplicialComplex& cx, int t, const std::vector<int>& sizes) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (sizes.empty()) throw std::invalid_argument("the size set S must be nonempty");
    for (int s : sizes)
        if (s < t || s > cx.dim() + 1)
            throw std::invalid_argument("size set must lie in [t, max face cardinality]");
    if (cx.faces_of_size(t).empty()) throw std::invalid_argument("complex has no t-face");
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

StarBound star_bound(const SimplicialComplex& cx, int t, const std::vector<int>& sizes) {
    check_size_set(cx, t, sizes);
    StarBound best;
    bool first = true;
    for (Mask sigma : cx.faces_of_size(t)) {
        long total = 0;
        for (int s : sizes)
            for (Mask f : cx.faces_of_size(s))
                if (subset_of(sigma, f)) ++total;
        if (first || total > best.value) {
            best = {total, sigma};
            first = false;
        }
    }
    return best;
}

std::vector<Mask> star_family(const SimplicialComplex& cx, Mask sigma,
                              const std::vector<int>& sizes) {
    std::vector<Mask> out;
    for (int s : sizes)
        for (Mask f : cx.faces_of_size(s))
            if (subset_of(sigma, f)) out.push_back(f);
    return out;
}

namespace {

// max clique on the compatibility graph (edge <=> |A ∩ B| >= t) by
// Tomita-style branch and bound with greedy coloring bounds
class CliqueSearch {
public:
    CliqueSearch(const std::vector<Mask>& pool, int t, long budget)
        : pool_(pool), m_(pool.size()), words_((m_ + 63) / 64), budget_(budget) {
        adj_.assign(m_, std::vector<std::uint64_t>(words_, 0));
        for (std::size_t a = 0; a < m_; ++a)
            for (std::size_t b = a + 1; b < m_; ++b)
                if (face_size(pool[a] & pool[b]) >= t) {
                    adj_[a][b / 64] |= 1ULL << (b % 64);
                    adj_[b][a / 64] |= 1ULL << (a % 64);
                }
    }

    BruteResult run() {
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t v = 0; v < m_; ++v) all[v / 64] |= 1ULL << (v % 64);
        root_bound_ = color_bound(all);
        std::vector<std::size_t> current;
        expand(current, all);
        BruteResult result;
        result.lower = static_cast<long>(best_.size());
        result.exact = !exhausted_;
        result.upper = result.exact ? result.lower : std::max(result.lower, root_bound_);
        result.nodes = nodes_;
        result.witness.reserve(best_.size());
        for (std::size_t v : best_) result.witness.push_back(pool_[v]);
        return result;
    }

private:
    static bool test(const std::vector<std::uint64_t>& set, std::size_t v) {
        return set[v / 64] & (1ULL << (v % 64));
    }
    static void clear(std::vector<std::uint64_t>& set, std::size_t v) {
        set[v / 64] &= ~(1ULL << (v % 64));
    }
    bool empty(const std::vector<std::uint64_t>& set) const {
        for (auto w : set)
            if (w) return false;
        return true;
    }

    long color_bound(const std::vector<std::uint64_t>& cand) const {
        // number of greedy color classes, scanning in pool order
        std::vector<std::vector<std::uint64_t>> classes;
        for (std::size_t v = 0; v < m_; ++v) {
            if (!test(cand, v)) continue;
            bool placed = false;
            for (auto& cls : classes) {
                bool conflict = false;
                for (std::size_t w = 0; w < words_ && !conflict; ++w)
                    if (cls[w] & adj_[v][w]) conflict = true;
                if (!conflict) {
                    cls[v / 64] |= 1ULL << (v % 64);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.emplace_back(words_, 0);
                classes.back()[v / 64] |= 1ULL << (v % 64);
            }
        }
        return static_cast<long>(classes.size());
    }

    void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t> cand) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (empty(cand)) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }

        // color the candidates greedily; process in descending color so the
        // first prune cuts the rest
        std::vector<std::size_t> order;
        std::vector<long> color;
        {
            std::vector<std::vector<std::size_t>> classes;
            for (std::size_t v = 0; v < m_; ++v) {
                if (!test(cand, v)) continue;
                std::size_t c = 0;
                for (; c < classes.size(); ++c) {
                    bool conflict = false;
                    for (std::size_t u : classes[c])
                        if (test(adj_[v], u)) {
                            conflict = true;
                            break;
                        }
                    if (!conflict) break;
                }
                if (c == classes.size()) classes.emplace_back();
                classes[c].push_back(v);
            }
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (std::size_t v : classes[c]) {
                    order.push_back(v);
                    color.push_back(static_cast<long>(c) + 1);
                }
        }

        for (std::size_t idx = order.size(); idx-- > 0;) {
            std::size_t v = order[idx];
            if (static_cast<long>(current.size()) + color[idx] <=
                static_cast<long>(best_.size()))
                return;
            current.push_back(v);
            std::vector<std::uint64_t> next(words_);
            for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & adj_[v][w];
            expand(current, std::move(next));
            current.pop_back();
            if (exhausted_) return;
            clear(cand, v);
        }
    }

    std::vector<Mask> pool_;
    std::size_t m_;
    std::size_t words_;
    long budget_;
    std::vector<std::vector<std::uint64_t>> adj_;
    std::vector<std::size_t> best_;
    long nodes_ = 0;
    long root_bound_ = 0;
    bool exhausted_ = false;
};

}  // namespace

BruteResult max_intersecting_family(const SimplicialComplex& cx, int t,
                                    const std::vector<int>& sizes, long budget) {
    check_size_set(cx, t, sizes);
    std::vector<int> uniq = sizes;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<Mask> pool;
    for (int s : uniq)
        for (Mask f : cx.faces_of_size(s)) pool.push_back(f);
    if (pool.size() > 5000)
        throw std::length_error("candidate pool exceeds the desk-scale guard of 5000");

    CliqueSearch search(pool, t, budget);
    BruteResult result = search.run();
    if (result.exact && !is_t_intersecting(result.witness, t).ok)
        throw std::logic_error("branch-and-bound produced a non-intersecting witness");
    return result;
}

const char* to_string(BorgVerdict v) {
    switch (v) {
        case BorgVerdict::holds: return "holds";
        case BorgVerdict::hypothesis_not_met: return "hypothesis-not-met";
        case BorgVerdict::violation: return "violation";
        case BorgVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

EkrReport verify_borg(const SimplicialComplex& cx, int t, const std::vector<int>& sizes,
                      const FieldConfig& cfg, [[maybe_unused]] std::uint64_t seed,
                      long budget) {
    EkrReport report;
    report.t = t;
    report.sizes = sizes;
    report.star = star_bound(cx, t, sizes);
    report.brute = max_intersecting_family(cx, t, sizes, budget);

    auto& hyp = report.hypothesis;
    hyp.r = *std::max_element(sizes.begin(), sizes.end());
    hyp.min_facet_cardinality = cx.min_facet_cardinality();
    const long threshold = static_cast<long>(t + 1) * (hyp.r - t + 1);
    hyp.facet_bound = hyp.min_facet_cardinality >= threshold;
    hyp.remark_bound =
        hyp.min_facet_cardinality >=
        static_cast<long>(hyp.r - t) * binomial(3L * hyp.r - 2 * t - 1, t + 1) + hyp.r;

    auto seq = find_apex_sequence(cx, t);
    hyp.apex_found = seq.has_value();
    hyp.depth = depth_links_only(cx, cfg);
    if (hyp.apex_found) {
        hyp.depth_bound = hyp.depth >= threshold - 1;
        hyp.seq_cm = is_sequentially_cm(cx, cfg).scm;
        hyp.scm_bound = hyp.seq_cm && hyp.facet_bound;
    }

    if (report.brute.exact) {
        report.inequality_holds = report.brute.lower <= report.star.value;
        if (report.inequality_holds)
            report.verdict = BorgVerdict::holds;
        else
            report.verdict = hyp.any() ? BorgVerdict::violation : BorgVerdict::hypothesis_not_met;
    } else if (report.brute.upper <= report.star.value) {
        report.inequality_holds = true;
        report.verdict = BorgVerdict::holds;
    } else if (report.brute.lower > report.star.value) {
        report.inequality_holds = false;
        report.verdict = hyp.any() ? BorgVerdict::violation : BorgVerdict::hypothesis_not_met;
    } else {
        report.verdict = BorgVerdict::inconclusive;
    }
    return report;
}

PropEasyReport check_prop_easy(const SimplicialComplex& cx, int t, int r,
                               const FieldConfig& cfg, std::uint64_t seed, ShiftOptions opts) {
    if (r < t) throw std::invalid_argument("r must be >= t");
    if (cx.faces_of_size(t).empty()) throw std::invalid_argument("complex has no t-face");

    PropEasyReport report;
    auto shifted = exterior_shift(cx, cfg, seed, opts);
    report.stable = shifted.stable;
    const Mask prefix = full_mask(t);
    report.first_t_face_present = shifted.shifted.contains(prefix);
    for (Mask f : shifted.shifted.faces_of_size(r))
        if (subset_of(prefix, f)) ++report.lhs;
    report.rhs = star_bound(cx, t, {r}).value;
    report.dominates = report.lhs >= report.rhs;
    return report;
}

}  // namespace ekrshift
