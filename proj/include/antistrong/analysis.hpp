#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antistrong/graph.hpp"

namespace antistrong {

// An antidirected trail: arcs in traversal order, each flagged forward (traversed
// tail to head) or backward. Directions alternate and no arc repeats.
struct TrailWitness {
    VertexId from = 0;
    VertexId to = 0;
    std::vector<ArcId> arcs;
    std::vector<bool> forward;

    std::size_t length() const { return arcs.size(); }
    bool operator==(const TrailWitness&) const = default;
};

// A closed antidirected trail; from == to, even length, alternation holds cyclically.
using CATWitness = TrailWitness;

enum class TrailShape {
    any,             // alternating, arc-disjoint, correctly chained
    forward,         // starts and ends on a forward arc
    even_forward,    // even length, starts forward
    even_backward,   // even length, starts backward
    closed,          // CAT
    simple_path,     // antidirected path: no vertex repeats
};

// Returns an empty string when `w` is a valid trail of the given shape in `d`,
// otherwise a description of the first violated condition.
std::string trail_violation(const Digraph& d, const TrailWitness& w, TrailShape shape);
inline bool is_valid_trail(const Digraph& d, const TrailWitness& w, TrailShape shape) {
    return trail_violation(d, w, shape).empty();
}

// The vertices visited by a trail, starting at w.from.
std::vector<VertexId> trail_vertices(const Digraph& d, const TrailWitness& w);

// n >= 3 and B(D) connected. Linear time.
bool is_antistrong(const Digraph& d);

// Lifts a shortest (x', y'')-path of B(D). Throws NotAntistrong.
TrailWitness forward_trail(const Digraph& d, VertexId x, VertexId y);

// Lifts shortest (x', y')- and (x'', y'')-paths of B(D): the first witness starts
// forward, the second backward, both have even length. Throws NotAntistrong.
std::pair<TrailWitness, TrailWitness> even_trails(const Digraph& d, VertexId x, VertexId y);

// Some antidirected (x, y)-trail exists, with any start and end direction.
bool has_antidirected_trail(const Digraph& d, VertexId x, VertexId y);

// k arc-disjoint forward antidirected (x, y)-trails for every ordered pair x != y.
bool k_arc_antistrong(const Digraph& d, int k);

// Up to `limit` arc-disjoint forward (x, y)-trails, lifted from edge-disjoint
// (x', y'')-paths of B(D).
std::vector<TrailWitness> disjoint_forward_trails(const Digraph& d, VertexId x, VertexId y, int limit = -1);

// A CAT inside the arc subset, or nullopt when the subset is independent
// (its edges form a forest in B(D)).
std::optional<CATWitness> find_cat(const Digraph& d, std::span<const ArcId> subset);
std::optional<CATWitness> find_cat(const Digraph& d);

// Lifts a walk of B(D) given as edge ids starting at B(D)-vertex `start`.
TrailWitness lift_walk(const Digraph& d, VertexId start, std::span<const EdgeId> walk);

}  // namespace antistrong
