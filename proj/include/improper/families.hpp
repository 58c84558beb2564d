#pragma once

#include <optional>
#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

struct FamilyParams {
    int p = 0;
    int n = 0;
    std::optional<int> s;  // fig4 independent-set size override
    int q = 0;
    int k = 0;
};

// fig4 only: how the independent-set size was chosen and what it produced.
struct Calibration {
    int chosen_s = 0;
    bool calibrated = false;  // false when s was supplied by the caller
    bool reached_target = false;
    int observed_impropriety = 0;
    int observed_drop = 0;
};

// The expected_* fields are claims to be checked, not inputs to any algorithm.
struct FamilyInstance {
    std::string family_tag;
    FamilyParams params;
    Graph graph;
    Vertex designated_vertex = 0;
    Vertex constructed_basepoint = 0;
    int expected_impropriety = 0;
    int expected_drop_value = 0;
    std::vector<Vertex> relocating;   // clique that moves once the designated vertex is gone
    std::vector<std::string> labels;  // role name per vertex
    std::optional<Calibration> calibration;
    std::vector<std::string> notes;
};

// Basepoint b, triangle x1x2x3 (x2, x3 meet b), K_n hanging off x3 and b,
// K_{p-n} attached to b only, and the path b-y1-y2. Designated vertex y1.
FamilyInstance gen_fig2(int p, int n);

// Adjacent A, B; cliques Q1, Q2 (size p-n) and Q3 (size n), every member
// adjacent to A and B; pendant D on A. Designated vertex D.
FamilyInstance gen_fig3(int p, int n);

// Adjacent A, D; cliques Q1, Q2 (size p-n) adjacent to A and D; s pendants
// on A. Without an override s is the smallest value reaching impropriety p.
FamilyInstance gen_fig4(int p, int n, std::optional<int> s = std::nullopt);

// Basepoint A with triangles Lout, Lin, Rout; m1 adjacent to A, m2, D and the
// clique Q = K_{p-6}; m2 and D adjacent to A and m1. Designated vertex D.
FamilyInstance gen_fig5(int p);

// Minimal graph that is not q-proper: K_{q+1} joined to three independent
// vertices (the claw with its centre replaced by K_{q+1}).
Graph gen_qproper_obstruction(int q);

// Claw whose third leaf is replaced by K_{q+1}; kept for comparison with the
// obstruction above (its properness is 1 for every q).
Graph gen_clique_leaf_claw(int q);

Graph gen_clique(int k);
Graph gen_path(int k);
Graph gen_star(int k);  // centre 0 plus k leaves

// Dispatch by tag: fig2, fig3, fig4, fig5, qobstruction, cliqueleaf, clique,
// path, star. Primitive families get designated vertex 0 and no claims.
FamilyInstance make_family(const std::string& tag, const FamilyParams& params);

}  // namespace improper
