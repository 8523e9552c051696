#include "ekrshift/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ekrshift/ekr.hpp"
#include "ekrshift/generators.hpp"
#include "ekrshift/homology.hpp"
#include "ekrshift/io.hpp"
#include "ekrshift/nearcone.hpp"
#include "ekrshift/shifting.hpp"

namespace ekrshift {

namespace {

using nlohmann::ordered_json;

struct Instance {
    SimplicialComplex cx;
    std::optional<ApexSequence> seq;
    std::uint64_t seed = 0;
};

std::string mask_str(Mask m, const SimplicialComplex& cx) {
    return mask_to_string(m, cx.labels());
}

ordered_json fv_json(const FVector& fv) { return ordered_json(fv.counts); }

void check_axioms_instance(const Instance& inst, const SweepConfig& cfg,
                           const FieldConfig& field, ordered_json& result,
                           std::vector<ordered_json>& violations, int& inconclusive,
                           int id) {
    ShiftOptions opts{cfg.trials, SubsetOrder::lex};
    auto report = check_axioms(inst.cx, std::nullopt, std::nullopt, cfg.t, field,
                               mix_seed(inst.seed, 11), opts);
    result["s1"] = report.s1;
    result["s3"] = report.s3;
    if (report.s2) result["s2"] = *report.s2;
    result["stable"] = report.stable;
    if (!report.stable) {
        ++inconclusive;
        return;
    }
    if (!report.s1) violations.push_back({{"instance", id}, {"check", "S1"}});
    if (!report.s3) violations.push_back({{"instance", id}, {"check", "S3"}});
    if (report.s2 && !*report.s2) violations.push_back({{"instance", id}, {"check", "S2"}});
}

void check_s4_instance(const Instance& inst, const SweepConfig& cfg,
                       const FieldConfig& field, ordered_json& result,
                       std::vector<ordered_json>& violations, int& inconclusive, int id) {
    Rng rng(mix_seed(inst.seed, 22));
    auto [sub, super] = random_nested_pair(inst.cx.n(), rng);
    ShiftOptions opts{cfg.trials, SubsetOrder::lex};
    auto report = check_axioms(super, sub, std::nullopt, cfg.t, field,
                               mix_seed(inst.seed, 23), opts);
    result["s4"] = report.s4.value_or(false);
    result["stable"] = report.stable;
    if (!report.stable) {
        ++inconclusive;
        return;
    }
    if (!report.s4.value_or(false))
        violations.push_back({{"instance", id}, {"check", "S4"}});
}

void check_s5_instance(const Instance& inst, const SweepConfig& cfg,
                       const FieldConfig& field, ordered_json& result,
                       std::vector<ordered_json>& violations, int& inconclusive, int id) {
    Rng rng(mix_seed(inst.seed, 33));
    auto family = random_t_intersecting_family(cfg.n, cfg.t, cfg.r, rng);
    auto cx = SimplicialComplex::from_facets(family, cfg.n);
    ShiftOptions opts{cfg.trials, SubsetOrder::lex};
    auto report = check_axioms(cx, std::nullopt, family, cfg.t, field,
                               mix_seed(inst.seed, 34), opts);
    result["s5"] = report.s5.value_or(false);
    result["stable"] = report.stable;
    if (!report.stable) {
        ++inconclusive;
        return;
    }
    if (!report.s5.value_or(false))
        violations.push_back({{"instance", id}, {"check", "S5"}});
}

void check_depth_instance(const Instance& inst, const SweepConfig& cfg,
                          const FieldConfig& field, ordered_json& result,
                          std::vector<ordered_json>& violations, int& inconclusive,
                          int id) {
    ShiftOptions opts{cfg.trials, SubsetOrder::lex};
    auto report = depth(inst.cx, field, mix_seed(inst.seed, 44), opts);
    result["depth_skeleton"] = report.depth_skeleton;
    result["depth_links"] = report.depth_links;
    result["depth_shift"] = report.depth_shift;
    result["stable"] = report.shift_stable;
    if (report.depth_skeleton != report.depth_links)
        violations.push_back({{"instance", id}, {"check", "depth skeleton vs links"}});
    if (!report.shift_stable) {
        ++inconclusive;
        return;
    }
    if (report.depth_links != report.depth_shift)
        violations.push_back({{"instance", id}, {"check", "depth links vs shift"}});
}

void check_homology_instance(const Instance& inst, const FieldConfig& field,
                             ordered_json& result, std::vector<ordered_json>& violations,
                             int id) {
    bool dd_zero = true;
    for (int k = 1; k <= inst.cx.dim() + 1 && dd_zero; ++k) {
        if (k + 1 > inst.cx.dim() + 1) break;
        auto prod = mul_gfp(boundary_matrix(inst.cx, k, field),
                            boundary_matrix(inst.cx, k + 1, field), field);
        for (auto v : prod.a)
            if (v % field.p != 0) {
                dd_zero = false;
                break;
            }
    }
    auto betti = reduced_betti(inst.cx, field);
    bool euler_ok = betti.euler_from_betti() == reduced_euler(inst.cx);
    result["boundary_squares_to_zero"] = dd_zero;
    result["euler_identity"] = euler_ok;
    if (!dd_zero) violations.push_back({{"instance", id}, {"check", "boundary^2"}});
    if (!euler_ok) violations.push_back({{"instance", id}, {"check", "euler"}});
}

void check_apex_face_instance(const Instance& inst, ordered_json& result,
                              std::vector<ordered_json>& violations, int id) {
    auto report = check_apex_face(inst.cx, *inst.seq);
    result["dim"] = report.dim;
    result["dim_hypothesis"] = report.dim_hypothesis;
    result["apex_is_face"] = report.apex_is_face;
    if (report.violation)
        violations.push_back({{"instance", id}, {"check", "apex-face"}});
}

void check_skeleton_instance(const Instance& inst, ordered_json& result,
                             std::vector<ordered_json>& violations, int id) {
    const int k = inst.cx.min_facet_cardinality();
    const int i = inst.seq->i();
    ordered_json per_s = ordered_json::array();
    for (int s = 0; s <= k - i - 1; ++s) {
        auto report = check_skeleton_shifting(inst.cx, *inst.seq, s);
        per_s.push_back({{"s", s}, {"holds", report.holds}});
        if (report.violation)
            violations.push_back({{"instance", id}, {"check", "skeleton-shifting"}, {"s", s}});
    }
    result["skeleton_checks"] = per_s;
}

void check_link_instance(const Instance& inst, const SweepConfig& cfg,
                         const FieldConfig& field, ordered_json& result,
                         std::vector<ordered_json>& violations, int& inconclusive, int id) {
    if (inst.cx.dim() < 2 * inst.seq->i() - 2) {
        result["skipped"] = "dim below 2i-2";
        return;
    }
    ShiftOptions opts{cfg.trials, SubsetOrder::lex};
    auto report = check_link_commutation(inst.cx, *inst.seq, field,
                                         mix_seed(inst.seed, 55), opts);
    result["nevo"] = report.nevo_equal.value_or(false);
    result["all_ok"] = report.all_ok;
    result["stable"] = report.stable;
    if (!report.stable) {
        ++inconclusive;
        return;
    }
    if (!report.all_ok)
        violations.push_back({{"instance", id}, {"check", "link-commutation"}});
}

void check_borg_instance(const Instance& inst, const SweepConfig& cfg,
                         const FieldConfig& field, ordered_json& result,
                         std::vector<ordered_json>& violations, int& inconclusive, int id) {
    std::vector<int> sizes = cfg.sizes.empty() ? std::vector<int>{cfg.r} : cfg.sizes;
    sizes.erase(std::remove_if(sizes.begin(), sizes.end(),
                               [&](int s) { return s > inst.cx.dim() + 1 || s < cfg.t; }),
                sizes.end());
    if (sizes.empty() || inst.cx.faces_of_size(cfg.t).empty()) {
        result["skipped"] = "no admissible sizes or no t-face";
        return;
    }
    auto report = verify_borg(inst.cx, cfg.t, sizes, field, mix_seed(inst.seed, 66),
                              cfg.budget);
    result["star_bound"] = report.star.value;
    result["brute_max"] = report.brute.exact ? report.brute.lower : -1;
    result["verdict"] = to_string(report.verdict);
    if (report.verdict == BorgVerdict::violation)
        violations.push_back({{"instance", id}, {"check", "borg"}});
    if (report.verdict == BorgVerdict::inconclusive) ++inconclusive;
}

void check_prop_easy_instance(const Instance& inst, const SweepConfig& cfg,
                              const FieldConfig& field, ordered_json& result,
                              std::vector<ordered_json>& violations, int& inconclusive,
                              int id) {
    if (inst.cx.faces_of_size(cfg.t).empty() || cfg.r > inst.cx.dim() + 1) {
        result["skipped"] = "no t-face or r too large";
        return;
    }
    ShiftOptions opts{cfg.trials, SubsetOrder::lex};
    auto report = check_prop_easy(inst.cx, cfg.t, cfg.r, field, mix_seed(inst.seed, 77), opts);
    result["lhs"] = report.lhs;
    result["rhs"] = report.rhs;
    result["stable"] = report.stable;
    if (!report.stable) {
        ++inconclusive;
        return;
    }
    if (!report.dominates)
        violations.push_back({{"instance", id}, {"check", "prop-easy"}});
    if (!report.first_t_face_present)
        violations.push_back({{"instance", id}, {"check", "prop-easy-prefix-face"}});
}

std::vector<Instance> build_corpus(const SweepConfig& cfg) {
    std::vector<Instance> corpus;
    if (cfg.generator == "exhaustive") {
        auto all = exhaustive_complexes(cfg.n);
        for (std::size_t idx = 0; idx < all.size(); ++idx)
            corpus.push_back({std::move(all[idx]), std::nullopt,
                              mix_seed(cfg.seed, idx)});
        return corpus;
    }
    if (cfg.generator == "random") {
        for (int id = 0; id < cfg.samples; ++id) {
            std::uint64_t s = mix_seed(cfg.seed, static_cast<std::uint64_t>(id));
            Rng rng(s);
            corpus.push_back({random_complex(cfg.n, rng), std::nullopt, s});
        }
        return corpus;
    }
    if (cfg.generator == "shifted") {
        int floor = cfg.min_facet > 0
                        ? cfg.min_facet
                        : std::min(cfg.n, (cfg.t + 1) * (cfg.r - cfg.t + 1));
        for (int id = 0; id < cfg.samples; ++id) {
            std::uint64_t s = mix_seed(cfg.seed, static_cast<std::uint64_t>(id));
            Rng rng(s);
            corpus.push_back({random_shifted_complex(cfg.n, floor, rng), std::nullopt, s});
        }
        return corpus;
    }
    if (cfg.generator == "nearcone") {
        NearConeOptions opts;
        opts.deep = cfg.deep;
        auto instances = near_cone_corpus(cfg.samples, cfg.i, cfg.n, cfg.seed, opts);
        for (std::size_t id = 0; id < instances.size(); ++id)
            corpus.push_back({std::move(instances[id].cx), std::move(instances[id].seq),
                              mix_seed(cfg.seed, id)});
        return corpus;
    }
    throw std::invalid_argument("unknown generator '" + cfg.generator + "'");
}

}  // namespace

nlohmann::ordered_json run_sweep(const SweepConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    FieldConfig field(cfg.prime);
    if (cfg.checks.empty()) throw std::invalid_argument("no checks selected");
    for (const auto& c : cfg.checks) {
        static const std::vector<std::string> known{"axioms", "s4",        "s5",
                                                    "depth",  "homology",  "apex-face",
                                                    "skeleton", "link",    "borg",
                                                    "prop-easy"};
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw std::invalid_argument("unknown check '" + c + "'");
        if ((c == "apex-face" || c == "skeleton" || c == "link") &&
            cfg.generator != "nearcone")
            throw std::invalid_argument("check '" + c + "' needs the nearcone generator");
    }

    auto corpus = build_corpus(cfg);

    std::vector<ordered_json> instance_json(corpus.size());
    std::vector<std::vector<ordered_json>> violation_parts(corpus.size());
    std::vector<int> inconclusive_parts(corpus.size(), 0);

    auto run_instance = [&](std::size_t idx) {
        const auto& inst = corpus[idx];
        ordered_json entry;
        entry["id"] = static_cast<int>(idx);
        entry["input_digest"] = digest(inst.cx);
        entry["f_vector"] = fv_json(inst.cx.f_vector());
        if (inst.seq) {
            ordered_json apex = ordered_json::array();
            for (int v : inst.seq->apex) apex.push_back(mask_str(Mask{1} << v, inst.cx));
            entry["apex"] = apex;
        }
        ordered_json results;
        for (const auto& check : cfg.checks) {
            ordered_json r;
            int id = static_cast<int>(idx);
            if (check == "axioms")
                check_axioms_instance(inst, cfg, field, r, violation_parts[idx],
                                      inconclusive_parts[idx], id);
            else if (check == "s4")
                check_s4_instance(inst, cfg, field, r, violation_parts[idx],
                                  inconclusive_parts[idx], id);
            else if (check == "s5")
                check_s5_instance(inst, cfg, field, r, violation_parts[idx],
                                  inconclusive_parts[idx], id);
            else if (check == "depth")
                check_depth_instance(inst, cfg, field, r, violation_parts[idx],
                                     inconclusive_parts[idx], id);
            else if (check == "homology")
                check_homology_instance(inst, field, r, violation_parts[idx], id);
            else if (check == "apex-face")
                check_apex_face_instance(inst, r, violation_parts[idx], id);
            else if (check == "skeleton")
                check_skeleton_instance(inst, r, violation_parts[idx], id);
            else if (check == "link")
                check_link_instance(inst, cfg, field, r, violation_parts[idx],
                                    inconclusive_parts[idx], id);
            else if (check == "borg")
                check_borg_instance(inst, cfg, field, r, violation_parts[idx],
                                    inconclusive_parts[idx], id);
            else if (check == "prop-easy")
                check_prop_easy_instance(inst, cfg, field, r, violation_parts[idx],
                                         inconclusive_parts[idx], id);
            results[check] = std::move(r);
        }
        entry["results"] = std::move(results);
        instance_json[idx] = std::move(entry);
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t idx = 0; idx < corpus.size(); ++idx) run_instance(idx);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> cursor{0};
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t idx = cursor.fetch_add(1);
                    if (idx >= corpus.size()) return;
                    run_instance(idx);
                }
            });
        for (auto& t : workers) t.join();
    }

    ordered_json report;
    report["version"] = kVersion;
    report["command"] = "sweep";
    report["config"] = {{"generator", cfg.generator}, {"n", cfg.n},
                        {"samples", cfg.samples},     {"seed", cfg.seed},
                        {"checks", cfg.checks},       {"t", cfg.t},
                        {"r", cfg.r},                 {"i", cfg.i},
                        {"sizes", cfg.sizes},         {"prime", cfg.prime},
                        {"trials", cfg.trials},       {"budget", cfg.budget},
                        {"min_facet", cfg.min_facet}, {"deep", cfg.deep}};
    report["instances"] = instance_json;
    ordered_json violations = ordered_json::array();
    int inconclusive = 0;
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        for (auto& v : violation_parts[idx]) violations.push_back(std::move(v));
        inconclusive += inconclusive_parts[idx];
    }
    report["violations"] = std::move(violations);
    report["inconclusive"] = inconclusive;
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return report;
}

int sweep_exit_code(const nlohmann::ordered_json& report) {
    return report.at("violations").empty() ? 0 : 1;
}

}  // namespace ekrshift
