#include "antistrong/hardness.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "antistrong/errors.hpp"

namespace antistrong {

void validate(const SatFormula& f) {
    if (f.variables < 0) throw InvalidInput("negative variable count");
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        for (const Literal& l : c)
            if (l.var < 0 || l.var >= f.variables)
                throw InvalidInput("clause " + std::to_string(i + 1) + " uses an unknown variable");
        if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var)
            throw InvalidInput("clause " + std::to_string(i + 1) + " repeats a variable");
    }
}

SatFormula parse_dimacs(std::istream& in) {
    SatFormula f;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    int declared = 0;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
        if (first == "p") {
            std::string fmt;
            if (header || !(ls >> fmt >> f.variables >> declared) || fmt != "cnf" || f.variables < 0 || declared < 0)
                throw ParseError(lineno, "bad problem line");
            header = true;
            continue;
        }
        if (!header) throw ParseError(lineno, "clause before the problem line");
        ls.clear();
        ls.str(line);
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3) throw ParseError(lineno, "clause must have exactly 3 literals");
                Clause c;
                for (int j = 0; j < 3; ++j) {
                    int v = std::abs(pending[j]);
                    if (v > f.variables) throw ParseError(lineno, "literal " + std::to_string(pending[j]) + " out of range");
                    c[j] = Literal{v - 1, pending[j] < 0};
                }
                if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var)
                    throw ParseError(lineno, "clause repeats a variable");
                f.clauses.push_back(c);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
        if (!ls.eof()) throw ParseError(lineno, "expected an integer literal");
    }
    if (!header) throw ParseError(lineno, "missing problem line");
    if (!pending.empty()) throw ParseError(lineno, "unterminated clause");
    if (static_cast<int>(f.clauses.size()) != declared)
        throw ParseError(lineno, "expected " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

std::string to_dimacs(const SatFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<std::vector<bool>> brute_force_sat(const SatFormula& f) {
    validate(f);
    if (f.variables > 24) throw SizeLimit("brute force SAT supports at most 24 variables");
    for (std::uint32_t mask = 0; mask < (1u << f.variables); ++mask) {
        bool ok = true;
        for (const Clause& c : f.clauses) {
            bool sat = false;
            for (const Literal& l : c) sat = sat || (((mask >> l.var) & 1u) != 0) != l.negated;
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> a(static_cast<std::size_t>(f.variables));
            for (int v = 0; v < f.variables; ++v) a[v] = (mask >> v) & 1u;
            return a;
        }
    }
    return std::nullopt;
}

UGraph gen_variable_gadget(int p, int q) {
    if (p < 1 || q < 1) throw InvalidInput("gadget paths need at least one internal vertex");
    std::vector<Edge> edges;
    auto chain = [&](VertexId first, int len) {
        edges.push_back({0, first});
        for (int j = 0; j + 1 < len; ++j) edges.push_back({first + j, first + j + 1});
        edges.push_back({first + len - 1, 1});
    };
    chain(2, p);
    chain(2 + p, q);
    return UGraph(2 + p + q, edges);
}

AvoidPairsInstance gen_avoid_pairs(const SatFormula& f, std::array<int, 3> bundle_order) {
    validate(f);
    {
        auto sorted = bundle_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2}) throw InvalidInput("bundle order must be a permutation of 0, 1, 2");
    }
    const int nv = f.variables;
    std::vector<int> p(static_cast<std::size_t>(nv), 0), q(static_cast<std::size_t>(nv), 0);
    for (const Clause& c : f.clauses)
        for (const Literal& l : c) ++(l.negated ? q : p)[l.var];

    std::vector<Edge> edges;
    // ypath[i][r] / zpath[i][r]: edge id of y_{i,r} y_{i,r+1} / z_{i,r} z_{i,r+1}, r >= 1.
    std::vector<std::vector<EdgeId>> ypath(static_cast<std::size_t>(nv)), zpath(static_cast<std::size_t>(nv));
    VertexId next = 1;
    VertexId u = 0;
    for (int i = 0; i < nv; ++i) {
        const int py = p[i] + 1, qz = q[i] + 1;
        const VertexId y1 = next, z1 = next + py, v = next + py + qz;
        next = v + 1;
        auto chain = [&](VertexId first, int len, std::vector<EdgeId>& ids) {
            edges.push_back({u, first});
            ids.push_back(-1);  // index 0 unused
            for (int j = 0; j + 1 < len; ++j) {
                ids.push_back(static_cast<EdgeId>(edges.size()));
                edges.push_back({first + j, first + j + 1});
            }
            edges.push_back({first + len - 1, v});
        };
        chain(y1, py, ypath[i]);
        chain(z1, qz, zpath[i]);
        u = v;
    }
    // Clause chain c_0 = t, c_1, ..., c_m with three parallel edges per step.
    const int m = static_cast<int>(f.clauses.size());
    std::vector<std::array<EdgeId, 3>> bundle(static_cast<std::size_t>(m));
    VertexId c_prev = u;
    for (int i = 0; i < m; ++i) {
        VertexId c = next++;
        for (int j = 0; j < 3; ++j) {
            bundle[i][j] = static_cast<EdgeId>(edges.size());
            edges.push_back({c_prev, c});
        }
        c_prev = c;
    }

    AvoidPairsInstance inst;
    inst.x = 0;
    inst.y = c_prev;
    std::vector<int> pos(static_cast<std::size_t>(nv), 0), neg(static_cast<std::size_t>(nv), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 3; ++j) {
            const Literal& l = f.clauses[i][j];
            EdgeId e = l.negated ? zpath[l.var][++neg[l.var]] : ypath[l.var][++pos[l.var]];
            inst.pairs.push_back({e, bundle[i][bundle_order[j]]});
        }
    inst.g = UGraph(next, std::move(edges), Multiplicity::unbounded);
    return inst;
}

AntipathInstance gen_antipath_instance(const AvoidPairsInstance& inst) {
    const UGraph& g = inst.g;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> uses(static_cast<std::size_t>(m), 0);
    for (auto [e, f] : inst.pairs) {
        if (e < 0 || e >= m || f < 0 || f >= m || e == f) throw InvalidInput("pair must hold two distinct edges");
        ++uses[e];
        ++uses[f];
    }
    const int k = m == 0 ? 0 : *std::max_element(uses.begin(), uses.end());
    const int len = 2 * k + 2;

    // Path vertices before merging: original vertices, then 2k+1 internal ones per edge.
    AntipathInstance out;
    out.k = k;
    int total = n;
    out.edge_paths.resize(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) {
        auto& path = out.edge_paths[e];
        path.push_back(g.edge(e).u);
        for (int j = 1; j < len; ++j) path.push_back(total++);
        path.push_back(g.edge(e).v);
    }
    DisjointSets ds(total);
    std::vector<int> next_sink(static_cast<std::size_t>(m), 1), next_source(static_cast<std::size_t>(m), 2);
    std::vector<VertexId> merged;
    for (auto [e, f] : inst.pairs) {
        // Odd positions are sinks, even positions sources; both ends are sources.
        if (next_sink[e] > len - 1 || next_source[f] > len - 2) throw std::logic_error("ran out of path vertices");
        VertexId sink = out.edge_paths[e][next_sink[e]];
        VertexId source = out.edge_paths[f][next_source[f]];
        next_sink[e] += 2;
        next_source[f] += 2;
        ds.unite(sink, source);
        merged.push_back(sink);
    }
    // Relabel: original ids stay, merged classes take the id of their smallest member.
    std::vector<VertexId> id(static_cast<std::size_t>(total), -1);
    std::vector<VertexId> class_id(static_cast<std::size_t>(total), -1);
    int count = 0;
    for (VertexId v = 0; v < total; ++v) {
        int r = ds.find(v);
        if (class_id[r] < 0) class_id[r] = count++;
        id[v] = class_id[r];
    }
    std::vector<Arc> arcs;
    for (auto& path : out.edge_paths) {
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            VertexId a = id[path[j]], b = id[path[j + 1]];
            arcs.push_back(j % 2 == 0 ? Arc{a, b} : Arc{b, a});
        }
        for (VertexId& v : path) v = id[v];
    }
    for (VertexId v : merged) out.identified.push_back(id[v]);
    std::sort(out.identified.begin(), out.identified.end());
    out.d = Digraph(count, std::move(arcs));
    out.s = inst.x;
    out.t = inst.y;
    return out;
}

namespace {

class AntipathSearch {
public:
    AntipathSearch(const Digraph& d, VertexId y, std::int64_t budget)
        : d_(d), y_(y), budget_(budget), on_path_(static_cast<std::size_t>(d.vertex_count()), 0) {}

    // `forward`: the next arc must leave `at`.
    bool run(VertexId at, bool forward) {
        if (++nodes_ > budget_) throw SizeLimit("antidirected path search exceeded its node budget");
        auto arcs = forward ? d_.out_arcs(at) : d_.in_arcs(at);
        for (ArcId a : arcs) {
            VertexId w = forward ? d_.arc(a).head : d_.arc(a).tail;
            if (on_path_[w]) continue;
            arcs_.push_back(a);
            dirs_.push_back(forward);
            if (w == y_) return true;
            on_path_[w] = 1;
            if (run(w, !forward)) return true;
            on_path_[w] = 0;
            arcs_.pop_back();
            dirs_.pop_back();
        }
        return false;
    }

    std::vector<char>& on_path() { return on_path_; }
    std::vector<ArcId> arcs_;
    std::vector<bool> dirs_;

private:
    const Digraph& d_;
    VertexId y_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::vector<char> on_path_;
};

}  // namespace

std::optional<TrailWitness> exact_antidirected_path(const Digraph& d, VertexId x, VertexId y, std::int64_t budget) {
    const int n = d.vertex_count();
    if (x < 0 || x >= n || y < 0 || y >= n) throw InvalidInput("vertex out of range");
    if (x == y) throw InvalidInput("path endpoints must be distinct");
    // Vertices outside the component of x in UG(D) can be skipped entirely.
    std::vector<Edge> und;
    for (const Arc& a : d.arcs()) und.push_back({a.tail, a.head});
    Components c = connected_components(n, und);
    if (c.label[x] != c.label[y]) return std::nullopt;
    for (bool first : {true, false}) {
        AntipathSearch s(d, y, budget);
        s.on_path()[x] = 1;
        if (s.run(x, first)) {
            TrailWitness w;
            w.from = x;
            w.to = y;
            w.arcs = s.arcs_;
            w.forward = s.dirs_;
            return w;
        }
    }
    return std::nullopt;
}

namespace {

class AvoidSearch {
public:
    AvoidSearch(const AvoidPairsInstance& inst, std::int64_t budget)
        : inst_(inst), budget_(budget), on_path_(static_cast<std::size_t>(inst.g.vertex_count()), 0),
          partners_(static_cast<std::size_t>(inst.g.edge_count())), used_(static_cast<std::size_t>(inst.g.edge_count()), 0) {
        for (auto [e, f] : inst.pairs) {
            partners_[e].push_back(f);
            partners_[f].push_back(e);
        }
    }

    bool run(VertexId at) {
        if (++nodes_ > budget_) throw SizeLimit("avoid-pairs path search exceeded its node budget");
        if (at == inst_.y) return true;
        for (EdgeId e : inst_.g.incident(at)) {
            VertexId w = inst_.g.edge(e).other(at);
            if (on_path_[w]) continue;
            bool blocked = false;
            for (EdgeId f : partners_[e]) blocked = blocked || used_[f];
            if (blocked) continue;
            on_path_[w] = 1;
            used_[e] = 1;
            path.push_back(e);
            if (run(w)) return true;
            path.pop_back();
            used_[e] = 0;
            on_path_[w] = 0;
        }
        return false;
    }

    std::vector<char>& on_path() { return on_path_; }
    std::vector<EdgeId> path;

private:
    const AvoidPairsInstance& inst_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::vector<char> on_path_;
    std::vector<std::vector<EdgeId>> partners_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<EdgeId>> exact_avoid_pairs_path(const AvoidPairsInstance& inst, std::int64_t budget) {
    const int n = inst.g.vertex_count();
    if (inst.x < 0 || inst.x >= n || inst.y < 0 || inst.y >= n) throw InvalidInput("vertex out of range");
    AvoidSearch s(inst, budget);
    s.on_path()[inst.x] = 1;
    if (s.run(inst.x)) return s.path;
    return std::nullopt;
}

bool is_avoiding_path(const AvoidPairsInstance& inst, const std::vector<EdgeId>& path) {
    const UGraph& g = inst.g;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0), used(static_cast<std::size_t>(g.edge_count()), 0);
    VertexId at = inst.x;
    seen[at] = 1;
    for (EdgeId e : path) {
        if (e < 0 || e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (ed.u != at && ed.v != at) return false;
        at = ed.other(at);
        if (seen[at]) return false;
        seen[at] = 1;
        used[e] = 1;
    }
    if (at != inst.y) return false;
    for (auto [e, f] : inst.pairs)
        if (used[e] && used[f]) return false;
    return true;
}

Digraph gen_kstrong_nonantistrong(int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    std::vector<Arc> arcs;
    for (int part = 0; part < 3; ++part) {
        const int from = part * k, to = ((part + 1) % 3) * k;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) arcs.push_back({from + i, to + j});
    }
    return Digraph(3 * k, std::move(arcs));
}

KkkK4 gen_kkk_k4(int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) edges.push_back({i, k + j});
    const std::array<VertexId, 4> k4{0, 2 * k, 2 * k + 1, 2 * k + 2};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) edges.push_back({k4[a], k4[b]});
    KkkK4 out;
    out.g = UGraph(2 * k + 3, std::move(edges));
    std::vector<VertexId> side(static_cast<std::size_t>(2 * k));
    std::iota(side.begin(), side.end(), 0);
    out.q = make_certificate(out.g, {side, {2 * k}, {2 * k + 1}, {2 * k + 2}});
    return out;
}

}  // namespace antistrong
