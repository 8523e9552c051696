#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ekrshift/gfp.hpp"

namespace ekrshift {

/// One reproducible verification run: a seeded corpus, a set of checks, and
/// a machine-readable report. Identical (config, seed) produce byte-identical
/// reports up to the timing field.
struct SweepConfig {
    std::string generator = "random";  // exhaustive | random | shifted | nearcone
    int n = 4;
    int samples = 0;  // ignored for exhaustive
    std::uint64_t seed = 0;
    std::vector<std::string> checks;  // axioms, s4, s5, depth, homology,
                                      // apex-face, skeleton, link, borg, prop-easy
    int t = 1;
    int r = 2;
    int i = 1;
    std::vector<int> sizes;  // S; defaults to {r}
    std::uint64_t prime = 2147483647ULL;
    int trials = 3;
    long budget = 10'000'000;
    int jobs = 1;
    int min_facet = 0;  // floor for the shifted generator; 0 = derive from (t, r)
    bool deep = false;  // near-cone generator bias toward high depth
};

nlohmann::ordered_json run_sweep(const SweepConfig& cfg);

/// Exit-code contract: zero violations and a parseable run <=> 0.
int sweep_exit_code(const nlohmann::ordered_json& report);

}  // namespace ekrshift
