#include "antistrong/io.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <fstream>
#include <set>
#include <sstream>

#include "antistrong/errors.hpp"
#include "antistrong/hardness.hpp"
#include "antistrong/matroid.hpp"

namespace antistrong {

namespace {

const char* kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::digraph: return "digraph";
        case InstanceKind::graph: return "graph";
        case InstanceKind::multigraph: return "multigraph";
    }
    return "?";
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Digraph Instance::digraph() const {
    if (kind != InstanceKind::digraph) throw InvalidInput(std::string("expected a digraph, got a ") + kind_name(kind));
    std::vector<Arc> arcs;
    for (auto [u, v] : pairs) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

UGraph Instance::graph() const {
    if (kind == InstanceKind::digraph) throw InvalidInput("expected a graph, got a digraph");
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return UGraph(n, std::move(edges), kind == InstanceKind::multigraph ? Multiplicity::doubled : Multiplicity::simple);
}

Instance parse_instance(std::istream& in) {
    Instance inst;
    std::string raw;
    std::size_t lineno = 0;
    bool header = false;
    int declared = 0;
    std::set<std::pair<VertexId, VertexId>> seen;
    std::map<std::pair<VertexId, VertexId>, int> copies;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            if (trim(line.substr(0, hash)).empty()) {
                inst.comments.push_back(trim(line.substr(hash + 1)));
                continue;
            }
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!header) {
            std::string kind;
            if (!(ls >> kind >> inst.n >> declared)) throw ParseError(lineno, "expected header '<digraph|graph|multigraph> n m'");
            if (kind == "digraph")
                inst.kind = InstanceKind::digraph;
            else if (kind == "graph")
                inst.kind = InstanceKind::graph;
            else if (kind == "multigraph")
                inst.kind = InstanceKind::multigraph;
            else
                throw ParseError(lineno, "unknown instance kind '" + kind + "'");
            if (inst.n < 0 || declared < 0) throw ParseError(lineno, "counts must be nonnegative");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing text after header");
            header = true;
            continue;
        }
        VertexId u = 0, v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(lineno, "expected 'u v'");
        if (u < 0 || u >= inst.n || v < 0 || v >= inst.n) throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(inst.n) + ")");
        if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        if (inst.kind == InstanceKind::digraph) {
            if (!seen.insert({u, v}).second) throw ParseError(lineno, "repeated arc " + std::to_string(u) + " " + std::to_string(v));
        } else {
            const int limit = inst.kind == InstanceKind::graph ? 1 : 2;
            if (++copies[{std::min(u, v), std::max(u, v)}] > limit)
                throw ParseError(lineno, "too many copies of edge " + std::to_string(u) + " " + std::to_string(v));
        }
        inst.pairs.push_back({u, v});
    }
    if (!header) throw ParseError(lineno, "missing header");
    if (static_cast<int>(inst.pairs.size()) != declared)
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " lines, found " + std::to_string(inst.pairs.size()));
    return inst;
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    return parse_instance(in);
}

std::string serialize(const Instance& inst) {
    std::ostringstream out;
    for (const auto& c : inst.comments) out << "# " << c << '\n';
    out << kind_name(inst.kind) << ' ' << inst.n << ' ' << inst.pairs.size() << '\n';
    for (auto [u, v] : inst.pairs) out << u << ' ' << v << '\n';
    return out.str();
}

Instance from_digraph(const Digraph& d) {
    Instance inst;
    inst.kind = InstanceKind::digraph;
    inst.n = d.vertex_count();
    for (const Arc& a : d.arcs()) inst.pairs.push_back({a.tail, a.head});
    return inst;
}

Instance from_graph(const UGraph& g) {
    Instance inst;
    inst.kind = g.multiplicity() == Multiplicity::simple ? InstanceKind::graph : InstanceKind::multigraph;
    inst.n = g.vertex_count();
    for (const Edge& e : g.edges()) inst.pairs.push_back({e.u, e.v});
    return inst;
}

std::string instance_hash(const Instance& inst) {
    Instance bare = inst;
    bare.comments.clear();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : serialize(bare)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json make_artifact(const std::string& kind, const Instance& inst, const std::string& instance_path, Json payload) {
    return Json{{"schema", certificate_schema},
                {"kind", kind},
                {"input_hash", instance_hash(inst)},
                {"instance", instance_path},
                {"payload", std::move(payload)}};
}

namespace {

Json arcs_json(const std::vector<Arc>& arcs) {
    Json a = Json::array();
    for (const Arc& x : arcs) a.push_back({x.tail, x.head});
    return a;
}

}  // namespace

Json orientation_payload(const Orientation& o, const std::string& property) {
    return Json{{"property", property}, {"arcs", arcs_json(o.arcs)}};
}

Json certificate_payload(const PartitionCertificate& q) {
    return Json{{"parts", q.parts}, {"e", q.e}, {"b", q.b}, {"bound", q.bound()}};
}

std::string shape_name(TrailShape s) {
    switch (s) {
        case TrailShape::any: return "any";
        case TrailShape::forward: return "forward";
        case TrailShape::even_forward: return "even_forward";
        case TrailShape::even_backward: return "even_backward";
        case TrailShape::closed: return "closed";
        case TrailShape::simple_path: return "simple_path";
    }
    return "any";
}

TrailShape parse_shape(const std::string& s) {
    for (TrailShape t : {TrailShape::any, TrailShape::forward, TrailShape::even_forward, TrailShape::even_backward,
                         TrailShape::closed, TrailShape::simple_path})
        if (shape_name(t) == s) return t;
    throw SchemaMismatch("unknown trail shape '" + s + "'");
}

Json trail_payload(const TrailWitness& w, TrailShape shape) {
    return Json{{"x", w.from}, {"y", w.to}, {"arcs", w.arcs}, {"forward", w.forward}, {"shape", shape_name(shape)}};
}

Json decomposition_payload(const UGraph& g, const ForestSplit& split) {
    TwoDecomposition d = describe_decomposition(g, split.forest, split.pseudoforest);
    Json roots = Json::array(), precious = Json::array();
    for (const RedComponent& c : d.components) {
        roots.push_back(c.root);
        if (c.precious) precious.push_back(*c.precious);
    }
    return Json{{"feasible", true}, {"black", d.black}, {"red", d.red}, {"side", d.side}, {"roots", roots}, {"precious", precious}};
}

Json violation_payload(const std::vector<EdgeId>& violating) {
    return Json{{"feasible", false}, {"violating_edges", violating}};
}

Json pack_payload(const PackResult& p) {
    return Json{{"k", p.k}, {"l", p.l}, {"classes", p.classes}, {"leftover", p.leftover}};
}

Json augmentation_payload(int k, const AugmentationResult& r) {
    return Json{{"k", k}, {"new_arcs", arcs_json(r.new_arcs)}, {"packing", r.packing}};
}

Json detachment_payload(const Detachment& h) {
    Json edges = Json::array();
    for (const Edge& e : h.edges) edges.push_back({e.u, e.v});
    return Json{{"n", h.n}, {"edges", edges}};
}

namespace {

template <typename T>
T field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw SchemaMismatch(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaMismatch(std::string("field '") + name + "' has the wrong type");
    }
}

std::vector<Arc> arcs_from(const Json& j, const char* name) {
    std::vector<Arc> out;
    for (auto [u, v] : field<std::vector<std::pair<VertexId, VertexId>>>(j, name)) out.push_back({u, v});
    return out;
}

VerifyReport fail(std::string why) { return {false, std::move(why)}; }
VerifyReport pass() { return {true, {}}; }

VerifyReport verify_orientation(const Json& p, const Instance& inst) {
    UGraph g = inst.graph();
    Orientation o{arcs_from(p, "arcs")};
    auto property = field<std::string>(p, "property");
    if (!orients(g, o)) return fail("arcs do not orient the edges of the instance");
    Digraph d;
    try {
        d = to_digraph(g.vertex_count(), o);
    } catch (const InvalidGraph& e) {
        return fail(std::string("oriented graph is not simple: ") + e.what());
    }
    if (property == "antistrong") return is_antistrong(d) ? pass() : fail("orientation is not antistrong");
    if (property == "catfree") return find_cat(d) ? fail("orientation contains a closed antidirected trail") : pass();
    if (property == "anticonnected") {
        for (VertexId x = 0; x < d.vertex_count(); ++x)
            for (VertexId y = x + 1; y < d.vertex_count(); ++y) {
                try {
                    if (!exact_antidirected_path(d, x, y)) return fail("no antidirected path between " + std::to_string(x) + " and " + std::to_string(y));
                } catch (const SizeLimit&) {
                    return fail("antidirected path search exceeded its budget");
                }
            }
        return pass();
    }
    throw SchemaMismatch("unknown orientation property '" + property + "'");
}

VerifyReport verify_partition(const Json& p, const Instance& inst) {
    UGraph g = inst.graph();
    PartitionCertificate q;
    q.parts = field<std::vector<std::vector<VertexId>>>(p, "parts");
    q.e = field<int>(p, "e");
    q.b = field<int>(p, "b");
    PartitionCertificate fresh;
    try {
        fresh = make_certificate(g, q.parts);
    } catch (const NotAPartition& e) {
        return fail(std::string("not a partition: ") + e.what());
    }
    if (fresh.e != q.e || fresh.b != q.b)
        return fail("stored e/b (" + std::to_string(q.e) + ", " + std::to_string(q.b) + ") differ from recomputed (" +
                    std::to_string(fresh.e) + ", " + std::to_string(fresh.b) + ")");
    if (!(fresh.e < fresh.bound())) return fail("partition satisfies e(Q) >= |Q| - 1 + b(Q)");
    return pass();
}

VerifyReport verify_trail(const Json& p, const Instance& inst) {
    Digraph d = inst.digraph();
    TrailWitness w;
    w.from = field<VertexId>(p, "x");
    w.to = field<VertexId>(p, "y");
    w.arcs = field<std::vector<ArcId>>(p, "arcs");
    w.forward = field<std::vector<bool>>(p, "forward");
    std::string why = trail_violation(d, w, parse_shape(field<std::string>(p, "shape")));
    return why.empty() ? pass() : fail(why);
}

VerifyReport verify_decomposition(const Json& p, const Instance& inst) {
    UGraph g = inst.graph();
    auto in_range = [&](const std::vector<EdgeId>& s) {
        for (EdgeId e : s)
            if (e < 0 || e >= g.edge_count()) return false;
        return true;
    };
    if (!field<bool>(p, "feasible")) {
        auto h = field<std::vector<EdgeId>>(p, "violating_edges");
        if (!in_range(h)) return fail("edge id out of range");
        std::set<EdgeId> uniq(h.begin(), h.end());
        if (uniq.size() != h.size()) return fail("repeated edge");
        return is_violating_subgraph(g, h) ? pass() : fail("subgraph satisfies |E(H)| <= 2|V(H)| - 1 - beta(H)");
    }
    auto black = field<std::vector<EdgeId>>(p, "black");
    auto red = field<std::vector<EdgeId>>(p, "red");
    if (!in_range(black) || !in_range(red)) return fail("edge id out of range");
    std::vector<int> uses(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : black) ++uses[e];
    for (EdgeId e : red) ++uses[e];
    for (int c : uses)
        if (c != 1) return fail("black and red do not partition the edge set");
    if (!cycle_matroid_indep(g, black)) return fail("black edges contain a cycle");
    if (!even_bicircular_indep(g, red)) return fail("red edges are not an odd pseudoforest");
    if (p.contains("side")) {
        auto side = field<std::vector<int>>(p, "side");
        if (static_cast<int>(side.size()) != g.vertex_count()) return fail("side has the wrong length");
        for (EdgeId e : black)
            if (side[g.edge(e).u] == side[g.edge(e).v]) return fail("black edge inside one side");
    }
    return pass();
}

VerifyReport verify_pack_artifact(const Json& p, const Instance& inst) {
    Digraph d = inst.digraph();
    PackResult r;
    r.k = field<int>(p, "k");
    r.l = field<int>(p, "l");
    r.classes = field<std::vector<std::vector<ArcId>>>(p, "classes");
    r.leftover = field<std::vector<ArcId>>(p, "leftover");
    return verify_pack(d, r) ? pass() : fail("classes are not disjoint spanning subdigraphs of the required kind");
}

VerifyReport verify_augmentation(const Json& p, const Instance& inst) {
    Digraph d = inst.digraph();
    const int k = field<int>(p, "k");
    auto extra = arcs_from(p, "new_arcs");
    std::vector<Arc> all = d.arcs();
    for (const Arc& a : extra) {
        if (a.tail < 0 || a.tail >= d.vertex_count() || a.head < 0 || a.head >= d.vertex_count()) return fail("new arc out of range");
        all.push_back(a);
    }
    Digraph aug;
    try {
        aug = Digraph(d.vertex_count(), all);
    } catch (const InvalidGraph& e) {
        return fail(std::string("augmented digraph is not simple: ") + e.what());
    }
    if (k == 1) {
        if (!is_antistrong(aug)) return fail("augmented digraph is not antistrong");
        // Each new arc joins at most two components of B(D).
        const int comps = connected_components(BipRep(d)).count;
        if (static_cast<int>(extra.size()) != comps - 1) return fail("augmentation is not minimum");
        return pass();
    }
    PackResult r;
    r.k = k;
    r.classes = field<std::vector<std::vector<ArcId>>>(p, "packing");
    return verify_pack(aug, r) ? pass() : fail("packing of the augmented digraph is invalid");
}

VerifyReport verify_detachment_artifact(const Json& p, const Instance& inst) {
    UGraph g = inst.graph();
    Detachment h;
    h.n = field<int>(p, "n");
    for (auto [u, v] : field<std::vector<std::pair<VertexId, VertexId>>>(p, "edges")) h.edges.push_back({u, v});
    return verify_detachment(g, h) ? pass() : fail("not a connected bipartite 2-detachment with sides V', V''");
}

}  // namespace

VerifyReport verify_artifact(const Json& artifact, const Instance& inst) {
    if (field<std::string>(artifact, "schema") != certificate_schema) throw SchemaMismatch("unsupported schema");
    const auto kind = field<std::string>(artifact, "kind");
    const auto hash = field<std::string>(artifact, "input_hash");
    const Json& payload = artifact.at("payload");
    if (!payload.is_object()) throw SchemaMismatch("payload must be an object");
    if (hash != instance_hash(inst)) return fail("input hash does not match the instance");
    try {
        if (kind == "orientation") return verify_orientation(payload, inst);
        if (kind == "partition-certificate") return verify_partition(payload, inst);
        if (kind == "trail") return verify_trail(payload, inst);
        if (kind == "decomposition") return verify_decomposition(payload, inst);
        if (kind == "pack") return verify_pack_artifact(payload, inst);
        if (kind == "augmentation") return verify_augmentation(payload, inst);
        if (kind == "detachment") return verify_detachment_artifact(payload, inst);
    } catch (const InvalidInput& e) {
        return fail(e.what());
    }
    throw SchemaMismatch("unknown artifact kind '" + kind + "'");
}

}  // namespace antistrong
