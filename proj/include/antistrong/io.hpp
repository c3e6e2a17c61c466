#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "antistrong/analysis.hpp"
#include "antistrong/appendix.hpp"
#include "antistrong/augmentation.hpp"
#include "antistrong/graph.hpp"
#include "antistrong/orientation.hpp"
#include "antistrong/packing.hpp"

namespace antistrong {

using Json = nlohmann::json;

enum class InstanceKind { digraph, graph, multigraph };

// Parsed instance file: "digraph|graph|multigraph n m" then m lines "u v".
// Lines starting with '#' and blank lines are ignored.
struct Instance {
    InstanceKind kind = InstanceKind::digraph;
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<std::string> comments;  // text after '#', kept for round trips

    Digraph digraph() const;  // throws InvalidInput unless kind is digraph
    UGraph graph() const;     // throws InvalidInput when kind is digraph

    bool operator==(const Instance&) const = default;
};

// Throws ParseError with the offending line number.
Instance parse_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);
std::string serialize(const Instance& inst);

Instance from_digraph(const Digraph& d);
Instance from_graph(const UGraph& g);

// FNV-1a 64-bit of serialize(inst) without comments, as 16 hex digits.
std::string instance_hash(const Instance& inst);

inline constexpr const char* certificate_schema = "antistrong-cert/1";

// {"schema", "kind", "input_hash", "instance", "payload"}.
Json make_artifact(const std::string& kind, const Instance& inst, const std::string& instance_path, Json payload);

Json orientation_payload(const Orientation& o, const std::string& property);
Json certificate_payload(const PartitionCertificate& q);
Json trail_payload(const TrailWitness& w, TrailShape shape);
Json decomposition_payload(const UGraph& g, const ForestSplit& split);
Json violation_payload(const std::vector<EdgeId>& violating);
Json pack_payload(const PackResult& p);
Json augmentation_payload(int k, const AugmentationResult& r);
Json detachment_payload(const Detachment& h);

std::string shape_name(TrailShape s);
TrailShape parse_shape(const std::string& s);  // throws SchemaMismatch

struct VerifyReport {
    bool ok = false;
    std::string reason;
};

// Re-checks an artifact against its instance from the definitions alone.
// Throws SchemaMismatch when the JSON does not follow the schema.
VerifyReport verify_artifact(const Json& artifact, const Instance& inst);

}  // namespace antistrong
