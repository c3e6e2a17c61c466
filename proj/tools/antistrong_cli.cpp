#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antistrong/analysis.hpp"
#include "antistrong/appendix.hpp"
#include "antistrong/augmentation.hpp"
#include "antistrong/errors.hpp"
#include "antistrong/hardness.hpp"
#include "antistrong/io.hpp"
#include "antistrong/orientation.hpp"
#include "antistrong/packing.hpp"

namespace fs = std::filesystem;
using namespace antistrong;

namespace {

enum Exit { ok = 0, negative = 1, usage = 2, open_problem = 3 };

struct Options {
    std::string input;
    std::string out;
    int k = 1;
    int l = 1;
    int x = -1;
    int y = -1;
    std::string shape = "forward";
    std::int64_t budget = default_search_budget;
    std::uint64_t seed = 0;
    int n = 6;
    int m = 8;
    std::string kind = "digraph";
    std::string cnf;
    std::string cert;
    std::string dir;
    int jobs = 0;
};

// Artifacts store the instance path relative to the artifact's own directory.
std::string instance_ref(const Options& o) {
    fs::path in = fs::absolute(o.input);
    if (o.out.empty()) return in.lexically_normal().string();
    fs::path base = fs::absolute(o.out).parent_path();
    return in.lexically_relative(base).string();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

void emit(const Options& o, const std::string& kind, const Instance& inst, Json payload) {
    Json a = make_artifact(kind, inst, instance_ref(o), std::move(payload));
    write_text(o.out, a.dump(2) + "\n");
}

// Human-readable status goes to stderr when the artifact is on stdout.
std::ostream& status(const Options& o) { return o.out.empty() ? std::cerr : std::cout; }

int cmd_check(const Options& o) {
    Digraph d = read_instance(o.input).digraph();
    if (d.vertex_count() < 3) {
        std::cout << "not antistrong: fewer than three vertices\n";
        return negative;
    }
    const int c = connected_components(BipRep(d)).count;
    if (c == 1) {
        std::cout << "antistrong\n";
        return ok;
    }
    std::cout << "not antistrong: B(D) has " << c << " components\n";
    return negative;
}

int cmd_trail(const Options& o) {
    Instance inst = read_instance(o.input);
    Digraph d = inst.digraph();
    if (o.x < 0 || o.y < 0 || o.x >= d.vertex_count() || o.y >= d.vertex_count())
        throw InvalidInput("--from and --to must be vertices of the instance");
    TrailShape shape = parse_shape(o.shape);
    try {
        TrailWitness w;
        if (shape == TrailShape::forward) {
            w = forward_trail(d, o.x, o.y);
        } else if (shape == TrailShape::even_forward) {
            w = even_trails(d, o.x, o.y).first;
        } else if (shape == TrailShape::even_backward) {
            w = even_trails(d, o.x, o.y).second;
        } else {
            throw InvalidInput("--shape must be forward, even_forward or even_backward");
        }
        emit(o, "trail", inst, trail_payload(w, shape));
        return ok;
    } catch (const NotAntistrong& e) {
        std::cout << "no trail: " << e.what() << "\n";
        return negative;
    }
}

int cmd_kcheck(const Options& o) {
    Digraph d = read_instance(o.input).digraph();
    if (k_arc_antistrong(d, o.k)) {
        std::cout << o.k << "-arc-antistrong\n";
        return ok;
    }
    std::cout << "not " << o.k << "-arc-antistrong\n";
    return negative;
}

int cmd_augment(const Options& o) {
    Instance inst = read_instance(o.input);
    AugmentationResult r = augment_antistrong(inst.digraph());
    status(o) << "added " << r.new_arcs.size() << " arcs\n";
    emit(o, "augmentation", inst, augmentation_payload(1, r));
    return ok;
}

int cmd_augment_k(const Options& o) {
    Instance inst = read_instance(o.input);
    auto r = augment_k_disjoint(inst.digraph(), o.k);
    if (!r) {
        std::cout << "no set of new arcs gives " << o.k << " arc-disjoint antistrong spanning subdigraphs\n";
        return negative;
    }
    status(o) << "added " << r->new_arcs.size() << " arcs\n";
    emit(o, "augmentation", inst, augmentation_payload(o.k, *r));
    return ok;
}

int cmd_orient(const Options& o) {
    Instance inst = read_instance(o.input);
    OrientationOutcome r = antistrong_orientation(inst.graph());
    if (auto* q = std::get_if<PartitionCertificate>(&r)) {
        status(o) << "no antistrong orientation: e(Q) = " << q->e << " < " << q->bound() << "\n";
        emit(o, "partition-certificate", inst, certificate_payload(*q));
        return negative;
    }
    emit(o, "orientation", inst, orientation_payload(std::get<Orientation>(r), "antistrong"));
    return ok;
}

int cmd_decompose(const Options& o, bool appendix) {
    Instance inst = read_instance(o.input);
    UGraph g = inst.graph();
    std::optional<ForestSplit> split;
    std::vector<EdgeId> violating;
    if (appendix) {
        AppendixResult r = appendix_decomposition(g);
        split = r.split;
        violating = r.violating;
        status(o) << "moved " << r.stats.moved_to_black << ", core swaps " << r.stats.core_swaps << ", case A "
                  << r.stats.case_a << ", case B " << r.stats.case_b << "\n";
    } else {
        DecompositionResult r = decompose_forest_odd_pseudoforest(g);
        split = r.split;
        violating = r.violating;
    }
    if (!split) {
        status(o) << "no forest + odd pseudoforest partition\n";
        emit(o, "decomposition", inst, violation_payload(violating));
        return negative;
    }
    emit(o, "decomposition", inst, decomposition_payload(g, *split));
    return ok;
}

int cmd_detach(const Options& o) {
    Instance inst = read_instance(o.input);
    auto r = good_2_detachment(inst.graph());
    if (auto* q = std::get_if<PartitionCertificate>(&r)) {
        status(o) << "no good 2-detachment: e(Q) = " << q->e << " < " << q->bound() << "\n";
        emit(o, "partition-certificate", inst, certificate_payload(*q));
        return negative;
    }
    emit(o, "detachment", inst, detachment_payload(std::get<Detachment>(r)));
    return ok;
}

int cmd_pack(const Options& o, int k, int l) {
    Instance inst = read_instance(o.input);
    auto r = mixed_pack(inst.digraph(), k, l);
    if (!r) {
        std::cout << "no packing with " << k << " antistrong and " << l << " connected classes\n";
        return negative;
    }
    emit(o, "pack", inst, pack_payload(*r));
    return ok;
}

int cmd_anticonnect(const Options& o) {
    Instance inst = read_instance(o.input);
    try {
        Orientation r = anticonnected_orientation(inst.graph());
        emit(o, "orientation", inst, orientation_payload(r, "anticonnected"));
        return ok;
    } catch (const Disconnected& e) {
        std::cout << "no anticonnected orientation: " << e.what() << "\n";
        return negative;
    }
}

int cmd_solve_antipath(const Options& o) {
    Instance inst = read_instance(o.input);
    Digraph d = inst.digraph();
    int s = o.x, t = o.y;
    // Generated instances carry "s <id> t <id> k <k>".
    for (const auto& c : inst.comments) {
        std::istringstream cs(c);
        std::string a, b;
        int sv = 0, tv = 0;
        if (cs >> a >> sv >> b >> tv && a == "s" && b == "t") {
            if (s < 0) s = sv;
            if (t < 0) t = tv;
        }
    }
    if (s < 0 || t < 0 || s >= d.vertex_count() || t >= d.vertex_count())
        throw InvalidInput("endpoints missing: pass --from and --to");
    auto w = exact_antidirected_path(d, s, t, o.budget);
    if (!w) {
        std::cout << "no antidirected (" << s << ", " << t << ")-path\n";
        return negative;
    }
    status(o) << "antidirected path with " << w->length() << " arcs\n";
    emit(o, "trail", inst, trail_payload(*w, TrailShape::simple_path));
    return ok;
}

int cmd_gen_sat(const Options& o) {
    std::ifstream in(o.cnf);
    if (!in) throw InvalidInput("cannot open " + o.cnf);
    SatFormula f = parse_dimacs(in);
    AntipathInstance a = gen_antipath_instance(gen_avoid_pairs(f));
    Instance inst = from_digraph(a.d);
    inst.comments.push_back("s " + std::to_string(a.s) + " t " + std::to_string(a.t) + " k " + std::to_string(a.k));
    write_text(o.out, serialize(inst));
    return ok;
}

int cmd_gen_kstrong(const Options& o) {
    write_text(o.out, serialize(from_digraph(gen_kstrong_nonantistrong(o.k))));
    return ok;
}

int cmd_gen_kkk(const Options& o) {
    KkkK4 r = gen_kkk_k4(o.k);
    Instance inst = from_graph(r.g);
    write_text(o.out, serialize(inst));
    if (!o.cert.empty()) {
        std::string ref = o.out.empty() || o.out == "-"
                              ? std::string()
                              : fs::absolute(o.out).lexically_relative(fs::absolute(o.cert).parent_path()).string();
        write_text(o.cert, make_artifact("partition-certificate", inst, ref, certificate_payload(r.q)).dump(2) + "\n");
    }
    return ok;
}

int cmd_gen_random(const Options& o) {
    if (o.n < 1 || o.m < 0) throw InvalidInput("need n >= 1 and m >= 0");
    std::mt19937_64 rng(o.seed);
    std::vector<std::pair<VertexId, VertexId>> all;
    for (int u = 0; u < o.n; ++u)
        for (int v = 0; v < o.n; ++v)
            if (u != v && (o.kind == "digraph" || u < v)) all.push_back({u, v});
    if (o.m > static_cast<int>(all.size())) throw InvalidInput("too many arcs for " + std::to_string(o.n) + " vertices");
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(o.m));
    std::sort(all.begin(), all.end());
    Instance inst;
    if (o.kind == "digraph")
        inst.kind = InstanceKind::digraph;
    else if (o.kind == "graph")
        inst.kind = InstanceKind::graph;
    else
        throw InvalidInput("--kind must be digraph or graph");
    inst.n = o.n;
    inst.pairs = all;
    inst.comments.push_back("seed " + std::to_string(o.seed));
    write_text(o.out, serialize(inst));
    return ok;
}

struct VerifyLine {
    std::string file;
    bool ok = false;
    std::string reason;
};

VerifyLine verify_file(const fs::path& artifact_path, const std::string& instance_override) {
    VerifyLine line;
    line.file = artifact_path.string();
    try {
        std::ifstream f(artifact_path);
        if (!f) throw InvalidInput("cannot open " + artifact_path.string());
        Json a;
        try {
            a = Json::parse(f);
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaMismatch(std::string("invalid JSON: ") + e.what());
        }
        fs::path inst_path = instance_override;
        if (inst_path.empty()) {
            if (!a.contains("instance") || !a["instance"].is_string() || a["instance"].get<std::string>().empty())
                throw SchemaMismatch("artifact names no instance; pass --instance");
            inst_path = a["instance"].get<std::string>();
            if (inst_path.is_relative()) inst_path = artifact_path.parent_path() / inst_path;
        }
        VerifyReport r = verify_artifact(a, read_instance(inst_path));
        line.ok = r.ok;
        line.reason = r.reason;
    } catch (const Error& e) {
        line.reason = e.what();
    }
    return line;
}

int cmd_verify(const Options& o) {
    std::vector<fs::path> files;
    if (!o.dir.empty()) {
        for (const auto& e : fs::recursive_directory_iterator(o.dir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw InvalidInput("no .json files under " + o.dir);
    } else {
        if (o.input.empty()) throw InvalidInput("pass an artifact or --dir");
        files.push_back(o.input);
    }
    std::vector<VerifyLine> lines(files.size());
    const std::size_t jobs = o.jobs > 0 ? static_cast<std::size_t>(o.jobs) : std::max(1u, std::thread::hardware_concurrency());
    const std::string override_path = o.dir.empty() ? o.cert : std::string();
    for (std::size_t start = 0; start < files.size(); start += jobs) {
        std::vector<std::future<VerifyLine>> batch;
        for (std::size_t i = start; i < std::min(files.size(), start + jobs); ++i)
            batch.push_back(std::async(std::launch::async, verify_file, files[i], override_path));
        for (std::size_t i = 0; i < batch.size(); ++i) lines[start + i] = batch[i].get();
    }
    int bad = 0;
    for (const auto& l : lines) {
        std::cout << (l.ok ? "ok   " : "FAIL ") << l.file;
        if (!l.ok) std::cout << ": " << l.reason;
        std::cout << "\n";
        bad += !l.ok;
    }
    if (files.size() > 1) std::cout << lines.size() - bad << "/" << lines.size() << " verified\n";
    return bad ? negative : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Antistrong digraphs: recognition, augmentation, orientation, packing and reductions"};
    app.require_subcommand(1);
    Options o;
    int code = ok;

    auto input = [&](CLI::App* c, const char* what) { c->add_option("input", o.input, what)->required()->check(CLI::ExistingFile); };
    auto out = [&](CLI::App* c) { c->add_option("-o,--out", o.out, "Write the artifact here instead of stdout"); };

    auto* check = app.add_subcommand("check", "Decide whether a digraph is antistrong");
    input(check, "Digraph instance");
    check->callback([&] { code = cmd_check(o); });

    auto* trail = app.add_subcommand("trail", "Antidirected (x, y)-trail witness");
    input(trail, "Digraph instance");
    trail->add_option("--from", o.x, "x")->required();
    trail->add_option("--to", o.y, "y")->required();
    trail->add_option("--shape", o.shape, "forward | even_forward | even_backward");
    out(trail);
    trail->callback([&] { code = cmd_trail(o); });

    auto* kcheck = app.add_subcommand("kcheck", "Decide k-arc-antistrong");
    input(kcheck, "Digraph instance");
    kcheck->add_option("-k", o.k, "k")->required();
    kcheck->callback([&] { code = cmd_kcheck(o); });

    auto* augment = app.add_subcommand("augment", "Fewest new arcs making the digraph antistrong");
    input(augment, "Digraph instance");
    out(augment);
    augment->callback([&] { code = cmd_augment(o); });

    auto* augment_k = app.add_subcommand("augment-k", "Fewest new arcs giving k arc-disjoint antistrong spanning subdigraphs");
    input(augment_k, "Digraph instance");
    augment_k->add_option("-k", o.k, "k")->required();
    out(augment_k);
    augment_k->callback([&] { code = cmd_augment_k(o); });

    auto* orient = app.add_subcommand("orient", "Antistrong orientation or violated partition");
    input(orient, "Graph or multigraph instance");
    out(orient);
    orient->callback([&] { code = cmd_orient(o); });

    auto* decompose = app.add_subcommand("decompose", "Forest + odd pseudoforest partition (matroid union)");
    input(decompose, "Graph or multigraph instance");
    out(decompose);
    decompose->callback([&] { code = cmd_decompose(o, false); });

    auto* decompose_app = app.add_subcommand("decompose-appendix", "Forest + odd pseudoforest partition (colour exchanges)");
    input(decompose_app, "Graph or multigraph instance");
    out(decompose_app);
    decompose_app->callback([&] { code = cmd_decompose(o, true); });

    auto* detach = app.add_subcommand("detach", "Connected bipartite 2-detachment with sides V', V''");
    input(detach, "Graph or multigraph instance");
    out(detach);
    detach->callback([&] { code = cmd_detach(o); });

    auto* pack = app.add_subcommand("pack", "k arc-disjoint antistrong spanning subdigraphs");
    input(pack, "Digraph instance");
    pack->add_option("-k", o.k, "k")->required();
    out(pack);
    pack->callback([&] { code = cmd_pack(o, o.k, 0); });

    auto* nonsep = app.add_subcommand("nonsep", "Antistrong spanning subdigraph whose removal keeps UG(D) connected");
    input(nonsep, "Digraph instance");
    out(nonsep);
    nonsep->callback([&] { code = cmd_pack(o, 1, 1); });

    auto* mixed = app.add_subcommand("mixed-pack", "k antistrong plus l connected arc-disjoint classes");
    input(mixed, "Digraph instance");
    mixed->add_option("-k", o.k, "k")->required();
    mixed->add_option("-l", o.l, "l")->required();
    out(mixed);
    mixed->callback([&] { code = cmd_pack(o, o.k, o.l); });

    auto* anticonnect = app.add_subcommand("anticonnect", "Orientation with an antidirected path between every pair");
    input(anticonnect, "Graph instance");
    out(anticonnect);
    anticonnect->callback([&] { code = cmd_anticonnect(o); });

    auto* solve = app.add_subcommand("solve-antipath", "Exhaustive search for an antidirected (s, t)-path");
    input(solve, "Digraph instance");
    solve->add_option("--from", o.x, "s (default: from the instance comment)");
    solve->add_option("--to", o.y, "t (default: from the instance comment)");
    solve->add_option("--budget", o.budget, "Search node budget");
    out(solve);
    solve->callback([&] { code = cmd_solve_antipath(o); });

    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    auto* gsat = gen->add_subcommand("sat-reduction", "Antidirected path instance from a 3-CNF formula");
    gsat->add_option("cnf", o.cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
    out(gsat);
    gsat->callback([&] { code = cmd_gen_sat(o); });
    auto* gks = gen->add_subcommand("kstrong", "k-strong digraph that is not antistrong");
    gks->add_option("-k", o.k, "k")->required();
    out(gks);
    gks->callback([&] { code = cmd_gen_kstrong(o); });
    auto* gkkk = gen->add_subcommand("kkk-k4", "K_{k,k} glued to K_4");
    gkkk->add_option("-k", o.k, "k")->required();
    gkkk->add_option("--cert", o.cert, "Also write the partition certificate here");
    out(gkkk);
    gkkk->callback([&] { code = cmd_gen_kkk(o); });
    auto* grand = gen->add_subcommand("random", "Uniform random simple digraph or graph");
    grand->add_option("-n", o.n, "Vertices");
    grand->add_option("-m", o.m, "Arcs or edges");
    grand->add_option("--kind", o.kind, "digraph | graph");
    grand->add_option("--seed", o.seed, "RNG seed");
    out(grand);
    grand->callback([&] { code = cmd_gen_random(o); });

    auto* verify = app.add_subcommand("verify", "Re-check artifacts from the definitions");
    verify->add_option("input", o.input, "Artifact JSON");
    verify->add_option("--instance", o.cert, "Instance file (default: the one named in the artifact)");
    verify->add_option("--dir", o.dir, "Verify every .json under this directory");
    verify->add_option("-j,--jobs", o.jobs, "Parallel workers");
    verify->callback([&] { code = cmd_verify(o); });

    const std::vector<std::pair<const char*, const char*>> open = {
        {"augment-karc", "minimum augmentation to a k-arc-antistrong digraph"},
        {"augment-bipartite-kec", "minimum augmentation of a bipartite graph to k-edge-connectivity preserving bipartiteness"},
        {"pack-antistrong-strong", "arc-disjoint antistrong and strong spanning subdigraphs"},
        {"pack-antistrong-2ec", "antistrong spanning subdigraph whose complement has a 2-edge-connected underlying graph"},
        {"orient-strong-antistrong", "orientation that is both strong and antistrong"},
    };
    for (const auto& [name, what] : open) {
        auto* c = app.add_subcommand(name, std::string("Open problem: ") + what);
        c->allow_extras();
        c->callback([&, what = std::string(what)] {
            std::cerr << "open problem: no polynomial algorithm (or hardness result) is known for " << what << "\n";
            code = open_problem;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const SchemaMismatch& e) {
        std::cerr << "schema mismatch: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return code;
}
