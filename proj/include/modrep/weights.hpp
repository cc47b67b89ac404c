#pragma once

#include "modrep/tableau.hpp"

#include <vector>

namespace modrep {

/// Entries of 0..(p-1)/2 indexed from 1 in the math, 0 in the code.
using Weight = std::vector<int>;

/// Conditions (1)-(4) for a completely splittable weight; (4b) is a literal
/// search for the index chain through the peak (p-1)/2.
bool is_cs_weight(const Weight& w, int p);

/// s_k admissible for w: w_k != w_{k+1} +- 1 as plain integers (1-based k).
bool is_admissible(const Weight& w, int k);

/// Swap positions k, k+1 (1-based).
Weight apply_simple(Weight w, int k);

struct WeightOrbit {
    std::vector<Weight> weights;             // Lambda_i
    std::vector<std::vector<int>> words;     // tau = s_{word.back()} ... s_{word.front()}
    std::vector<std::vector<int>> perms;     // one-line, perms[m-1] = tau(m)
    std::vector<Tableau> tableaux;           // only for tableau-seeded orbits
};

/// Closure of a cs-weight under admissible simple transpositions, with one
/// permutation witness per weight (Lambda and P have equal size; a repeated
/// weight reached through a different permutation raises std::logic_error).
WeightOrbit weight_orbit(const Weight& seed, int p);

/// Same closure seeded by a shifted p-standard tableau; tableaux, weights and
/// permutations stay parallel, ordered by tableau reading word.
WeightOrbit weight_orbit(const Tableau& seed, int p);

} // namespace modrep
