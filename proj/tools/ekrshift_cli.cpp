// Command-line front door: parse a complex from a facet list, run any
// operation, or drive a seeded verification sweep. Every subcommand builds
// one JSON record; the human output is a rendering of the same record.

#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekrshift/ekr.hpp"
#include "ekrshift/generators.hpp"
#include "ekrshift/homology.hpp"
#include "ekrshift/io.hpp"
#include "ekrshift/nearcone.hpp"
#include "ekrshift/shifting.hpp"
#include "ekrshift/sweep.hpp"

using nlohmann::ordered_json;
using namespace ekrshift;

namespace {

SimplicialComplex load(const std::string& path) {
    if (path == "-") return parse_complex(std::cin);
    return parse_complex_file(path);
}

std::string face_str(Mask m, const SimplicialComplex& cx) {
    if (m == 0) return "{}";
    std::string s;
    for (int v : face_vertices(m)) {
        if (!s.empty()) s += " ";
        s += cx.labels()[static_cast<std::size_t>(v)];
    }
    return s;
}

ordered_json faces_json(const std::vector<Mask>& faces, const SimplicialComplex& cx) {
    ordered_json arr = ordered_json::array();
    for (Mask f : faces) arr.push_back(face_str(f, cx));
    return arr;
}

ordered_json complex_json(const SimplicialComplex& cx) {
    ordered_json j;
    j["vertices"] = cx.labels();
    j["dim"] = cx.dim();
    j["f_vector"] = cx.f_vector().counts;
    j["min_facet_cardinality"] = cx.min_facet_cardinality();
    j["facets"] = faces_json(cx.facets(), cx);
    return j;
}

void emit(const ordered_json& record, bool json_mode) {
    if (json_mode) {
        std::cout << record.dump(2) << "\n";
        return;
    }
    // thin human rendering of the same record
    std::function<void(const ordered_json&, int)> render = [&](const ordered_json& node,
                                                               int indent) {
        std::string pad(static_cast<std::size_t>(indent), ' ');
        for (auto it = node.begin(); it != node.end(); ++it) {
            if (it.value().is_object()) {
                std::cout << pad << it.key() << ":\n";
                render(it.value(), indent + 2);
            } else {
                std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    };
    render(record, 0);
}

ordered_json shift_json(const ShiftResult& r, const SimplicialComplex& input) {
    ordered_json j;
    j["stable"] = r.stable;
    j["trials_agreed"] = r.trials_agreed;
    j["prime"] = r.prime;
    j["shifted"] = complex_json(r.shifted);
    j["fixed_point"] = r.shifted.same_faces(input);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simplicial-complex toolkit: exterior shifting over GF(p), "
                 "homological depth, near-cones, intersecting-family bounds"};
    app.require_subcommand(1);

    std::string path;
    std::uint64_t prime = 2147483647ULL;
    std::uint64_t seed = 1;
    int trials = 3;
    long budget = 10'000'000;
    bool json_mode = false;
    bool reverse = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("input", path, "facet-list file, or - for stdin")->required();
        cmd->add_option("--prime", prime, "field characteristic (prime < 2^31)");
        cmd->add_option("--seed", seed, "seed for generic matrices / corpora");
        cmd->add_option("--trials", trials, "independent seeds that must agree");
        cmd->add_option("--budget", budget, "branch-and-bound node budget");
        cmd->add_flag("--json", json_mode, "print the raw JSON record");
    };

    auto* c_fvector = app.add_subcommand("fvector", "face counts by cardinality");
    add_common(c_fvector);

    auto* c_shift = app.add_subcommand("shift", "exterior algebraic shift");
    add_common(c_shift);
    c_shift->add_flag("--reverse", reverse, "feed candidate sets in reverse lex order");

    auto* c_homology = app.add_subcommand("homology", "reduced Betti numbers over GF(p)");
    add_common(c_homology);

    auto* c_depth = app.add_subcommand("depth", "depth by skeleton, link, and shift routes");
    add_common(c_depth);

    auto* c_cm = app.add_subcommand("cm", "Cohen-Macaulay and sequentially CM verdicts");
    add_common(c_cm);

    auto* c_nearcone = app.add_subcommand("nearcone", "near-cone certificate / apex search");
    add_common(c_nearcone);
    std::string apex_label;
    int order = 1;
    c_nearcone->add_option("--apex", apex_label, "check one apex vertex by label");
    c_nearcone->add_option("-i,--order", order, "search for an i-near-cone structure");

    auto* c_ekr = app.add_subcommand("ekr", "star bound vs exact maximum for S = {r}");
    add_common(c_ekr);
    int t = 1, r = 2;
    c_ekr->add_option("--t", t, "intersection threshold")->required();
    c_ekr->add_option("--r", r, "face cardinality")->required();

    auto* c_borg = app.add_subcommand("borg", "full inequality report with hypotheses");
    add_common(c_borg);
    std::string sizes_csv;
    c_borg->add_option("--t", t, "intersection threshold")->required();
    c_borg->add_option("--r", r, "largest size when --sizes is omitted");
    c_borg->add_option("--sizes", sizes_csv, "comma-separated size set S");

    auto* c_sweep = app.add_subcommand("sweep", "seeded corpus verification run");
    SweepConfig sweep_cfg;
    std::string checks_csv = "axioms";
    c_sweep->add_option("--generator", sweep_cfg.generator,
                        "exhaustive | random | shifted | nearcone");
    c_sweep->add_option("--n", sweep_cfg.n, "vertex budget")->required();
    c_sweep->add_option("--samples", sweep_cfg.samples, "instances for seeded generators");
    c_sweep->add_option("--seed", sweep_cfg.seed, "corpus seed");
    c_sweep->add_option("--check", checks_csv,
                        "comma list: axioms,s4,s5,depth,homology,apex-face,skeleton,link,"
                        "borg,prop-easy");
    c_sweep->add_option("--t", sweep_cfg.t, "intersection threshold");
    c_sweep->add_option("--r", sweep_cfg.r, "face cardinality");
    c_sweep->add_option("--i", sweep_cfg.i, "near-cone order");
    std::string sweep_sizes_csv;
    c_sweep->add_option("--sizes", sweep_sizes_csv, "comma-separated size set S");
    c_sweep->add_option("--prime", sweep_cfg.prime, "field characteristic");
    c_sweep->add_option("--trials", sweep_cfg.trials, "shift trials");
    c_sweep->add_option("--budget", sweep_cfg.budget, "branch-and-bound node budget");
    c_sweep->add_option("--jobs", sweep_cfg.jobs, "worker threads");
    c_sweep->add_option("--min-facet", sweep_cfg.min_facet,
                        "facet-cardinality floor for the shifted generator");
    c_sweep->add_flag("--deep", sweep_cfg.deep, "bias near-cones toward high depth");
    c_sweep->add_flag("--json", json_mode, "print the raw JSON record");

    CLI11_PARSE(app, argc, argv);

    auto parse_csv_ints = [](const std::string& csv) {
        std::vector<int> out;
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(std::stoi(item));
        return out;
    };

    try {
        FieldConfig field(prime);
        ShiftOptions opts{trials, reverse ? SubsetOrder::reverse_lex : SubsetOrder::lex};
        ordered_json record;
        record["version"] = kVersion;

        if (*c_fvector) {
            auto cx = load(path);
            record["command"] = "fvector";
            record["input_digest"] = digest(cx);
            record["result"] = complex_json(cx);
        } else if (*c_shift) {
            auto cx = load(path);
            record["command"] = "shift";
            record["config"] = {{"prime", prime}, {"seed", seed}, {"trials", trials}};
            record["input_digest"] = digest(cx);
            record["result"] = shift_json(exterior_shift(cx, field, seed, opts), cx);
        } else if (*c_homology) {
            auto cx = load(path);
            record["command"] = "homology";
            record["config"] = {{"prime", prime}};
            record["input_digest"] = digest(cx);
            auto betti = reduced_betti(cx, field);
            ordered_json b;
            for (int i = -1; i < static_cast<int>(betti.values.size()) - 1; ++i)
                b["betti_" + std::to_string(i)] = betti.betti(i);
            record["result"] = {{"betti", b},
                                {"chain_dims", betti.chain_dims},
                                {"euler", betti.euler_from_betti()}};
        } else if (*c_depth) {
            auto cx = load(path);
            record["command"] = "depth";
            record["config"] = {{"prime", prime}, {"seed", seed}, {"trials", trials}};
            record["input_digest"] = digest(cx);
            auto report = depth(cx, field, seed, opts);
            ordered_json jr{{"depth_skeleton", report.depth_skeleton},
                            {"depth_links", report.depth_links},
                            {"depth_shift", report.depth_shift},
                            {"agree", report.agree},
                            {"shift_stable", report.shift_stable}};
            if (report.witness)
                jr["witness"] = {{"face", face_str(report.witness->first, cx)},
                                 {"degree", report.witness->second}};
            record["result"] = jr;
        } else if (*c_cm) {
            auto cx = load(path);
            record["command"] = "cm";
            record["config"] = {{"prime", prime}};
            record["input_digest"] = digest(cx);
            auto cm = is_cohen_macaulay(cx, field);
            auto scm = is_sequentially_cm(cx, field);
            ordered_json jr{{"cohen_macaulay", cm.cm}, {"sequentially_cm", scm.scm}};
            if (cm.witness)
                jr["witness"] = {{"face", face_str(cm.witness->first, cx)},
                                 {"degree", cm.witness->second}};
            if (scm.failed_r) jr["failed_pure_skeleton"] = *scm.failed_r;
            record["result"] = jr;
        } else if (*c_nearcone) {
            auto cx = load(path);
            record["command"] = "nearcone";
            record["input_digest"] = digest(cx);
            if (!apex_label.empty()) {
                int v = -1;
                for (int p = 0; p < cx.n(); ++p)
                    if (cx.labels()[static_cast<std::size_t>(p)] == apex_label) v = p;
                if (v < 0) throw std::runtime_error("unknown vertex label " + apex_label);
                auto cert = is_near_cone(cx, v);
                ordered_json jr{{"apex", apex_label}, {"near_cone", cert.verdict}};
                if (cert.violating)
                    jr["violating"] = {{"face", face_str(cert.violating->first, cx)},
                                       {"vertex",
                                        cx.labels()[static_cast<std::size_t>(
                                            cert.violating->second)]}};
                record["result"] = jr;
            } else {
                auto seq = find_apex_sequence(cx, order);
                ordered_json jr{{"i", order}, {"found", seq.has_value()}};
                if (seq) {
                    ordered_json apex = ordered_json::array();
                    for (int v : seq->apex)
                        apex.push_back(cx.labels()[static_cast<std::size_t>(v)]);
                    jr["apex"] = apex;
                    ordered_json chain = ordered_json::array();
                    for (const auto& c : seq->chain) chain.push_back(faces_json(c.facets(), cx));
                    jr["chain_facets"] = chain;
                }
                record["result"] = jr;
            }
        } else if (*c_ekr) {
            auto cx = load(path);
            record["command"] = "ekr";
            record["config"] = {{"t", t}, {"r", r}, {"budget", budget}};
            record["input_digest"] = digest(cx);
            auto star = star_bound(cx, t, {r});
            auto brute = max_intersecting_family(cx, t, {r}, budget);
            record["result"] = {{"star_bound", star.value},
                                {"star_face", face_str(star.argmax, cx)},
                                {"brute_lower", brute.lower},
                                {"brute_upper", brute.upper},
                                {"exact", brute.exact},
                                {"witness", faces_json(brute.witness, cx)}};
        } else if (*c_borg) {
            auto cx = load(path);
            record["command"] = "borg";
            std::vector<int> sizes =
                sizes_csv.empty() ? std::vector<int>{r} : parse_csv_ints(sizes_csv);
            record["config"] = {{"t", t}, {"sizes", sizes}, {"prime", prime},
                                {"seed", seed}, {"budget", budget}};
            record["input_digest"] = digest(cx);
            auto report = verify_borg(cx, t, sizes, field, seed, budget);
            record["result"] = {
                {"star_bound", report.star.value},
                {"star_face", face_str(report.star.argmax, cx)},
                {"brute_lower", report.brute.lower},
                {"brute_upper", report.brute.upper},
                {"exact", report.brute.exact},
                {"verdict", to_string(report.verdict)},
                {"hypotheses",
                 {{"r", report.hypothesis.r},
                  {"min_facet_cardinality", report.hypothesis.min_facet_cardinality},
                  {"facet_bound", report.hypothesis.facet_bound},
                  {"remark_bound", report.hypothesis.remark_bound},
                  {"apex_found", report.hypothesis.apex_found},
                  {"depth", report.hypothesis.depth},
                  {"depth_bound", report.hypothesis.depth_bound},
                  {"sequentially_cm", report.hypothesis.seq_cm},
                  {"scm_bound", report.hypothesis.scm_bound}}}};
        } else if (*c_sweep) {
            sweep_cfg.checks = [&] {
                std::vector<std::string> out;
                std::stringstream ss(checks_csv);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) out.push_back(item);
                return out;
            }();
            if (!sweep_sizes_csv.empty()) sweep_cfg.sizes = parse_csv_ints(sweep_sizes_csv);
            record = run_sweep(sweep_cfg);
            emit(record, json_mode);
            return sweep_exit_code(record);
        }

        emit(record, json_mode);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
