#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antistrong/analysis.hpp"
#include "antistrong/graph.hpp"
#include "antistrong/orientation.hpp"

namespace antistrong {

struct Literal {
    int var = 0;  // 0-based
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

struct SatFormula {
    int variables = 0;
    std::vector<Clause> clauses;

    bool operator==(const SatFormula&) const = default;
};

// Throws InvalidInput unless every clause has three literals on distinct variables.
void validate(const SatFormula& f);

// DIMACS CNF: "p cnf <vars> <clauses>", then zero-terminated clauses; 'c' lines
// are comments. Throws ParseError.
SatFormula parse_dimacs(std::istream& in);
std::string to_dimacs(const SatFormula& f);

// Satisfying assignment by enumeration (variables <= 24), or nullopt.
std::optional<std::vector<bool>> brute_force_sat(const SatFormula& f);

// Two internally disjoint (u, v)-paths u y_1 .. y_p v and u z_1 .. z_q v, with
// u = 0, v = 1, y_j = 1 + j, z_j = 1 + p + j. Throws InvalidInput unless p, q >= 1.
UGraph gen_variable_gadget(int p, int q);

struct AvoidPairsInstance {
    UGraph g;
    VertexId x = 0;
    VertexId y = 0;
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
};

// Chained variable gadgets followed by a chain of triple edges, one bundle per
// clause; clause i pairs its j-th literal edge with bundle edge bundle_order[j].
AvoidPairsInstance gen_avoid_pairs(const SatFormula& f, std::array<int, 3> bundle_order = {0, 1, 2});

struct AntipathInstance {
    Digraph d;
    VertexId s = 0;
    VertexId t = 0;
    int k = 0;  // most pairs sharing one edge
    // Per edge of G, the vertices of its private alternating path, from edge.u to edge.v.
    std::vector<std::vector<VertexId>> edge_paths;
    std::vector<VertexId> identified;  // vertices produced by merging a sink and a source
};

// Every edge becomes a private antidirected path of length 2k + 2 starting with a
// forward arc; for each pair (e, f), the smallest unused sink of P_e is merged with
// the smallest unused internal source of P_f. Original vertices keep their ids.
AntipathInstance gen_antipath_instance(const AvoidPairsInstance& inst);

constexpr std::int64_t default_search_budget = 50'000'000;

// Exhaustive search for a vertex-simple antidirected (x, y)-path starting in either
// direction. Throws SizeLimit once more than `budget` search nodes are expanded.
std::optional<TrailWitness> exact_antidirected_path(const Digraph& d, VertexId x, VertexId y,
                                                    std::int64_t budget = default_search_budget);

// Exhaustive search for a simple (x, y)-path using at most one edge of each pair.
std::optional<std::vector<EdgeId>> exact_avoid_pairs_path(const AvoidPairsInstance& inst,
                                                          std::int64_t budget = default_search_budget);

// True when `path` is a simple (x, y)-path of inst.g meeting every pair at most once.
bool is_avoiding_path(const AvoidPairsInstance& inst, const std::vector<EdgeId>& path);

// Independent sets X, Y, Z of size k with all arcs X -> Y, Y -> Z, Z -> X.
Digraph gen_kstrong_nonantistrong(int k);

struct KkkK4 {
    UGraph g;
    PartitionCertificate q;  // the K_{k,k} side as one part, other K_4 vertices alone
};

// K_{k,k} on 0..2k-1 glued at vertex 0 to the K_4 on {0, 2k, 2k+1, 2k+2}.
KkkK4 gen_kkk_k4(int k);

}  // namespace antistrong
