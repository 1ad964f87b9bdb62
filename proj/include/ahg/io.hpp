#pragma once

#include "ahg/gadgets.hpp"
#include "ahg/game.hpp"
#include "ahg/graph.hpp"
#include "ahg/reductions.hpp"
#include "ahg/types.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ahg {

using Json = nlohmann::ordered_json;

// One self-describing document carrying a graph plus optional partition,
// model tag, and generator provenance. Canonical form: edges normalized
// (small id first) and sorted; partition blocks sorted internally and
// ordered by smallest member; serialization is byte-deterministic.
struct InstanceDocument {
    std::string format_version = "1";
    std::size_t players = 0;
    std::optional<std::vector<std::string>> names;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::optional<std::vector<std::vector<PlayerId>>> partition;
    std::optional<UtilityModel> model;
    std::optional<Json> provenance; // generator maps; carried opaquely
    std::optional<Json> layout;     // gadget role map sidecar

    friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// Parses either the JSON document form (first non-space byte '{') or the
// edge-list form: optional 'c' comment lines, one header 'p ahg <n> <m>'
// with 0-based ids (the DIMACS-style 'p edge <n> <m>' header with 1-based
// ids is also accepted), then m lines 'e <u> <v>'. Syntax problems throw
// ParseError with a position; semantic problems (id out of range,
// overlapping partition blocks, bad model tag, name-count mismatch) throw
// ValidationError naming the offending field. The result is canonical.
InstanceDocument parse_instance(std::string_view text);

// Canonical JSON rendering (two-space indent, trailing newline). The
// canonicalization is idempotent: parse(serialize(doc)) == canonical doc.
std::string serialize_instance(const InstanceDocument& doc);

// Graph-only edge-list rendering: 'p ahg <n> <m>' plus 'e <u> <v>' lines.
std::string serialize_edgelist(const InstanceDocument& doc);

// Conversions between documents and engine types. graph_from_document is
// total on canonical documents; partition_from_document enforces the full
// partition property via the CoalitionStructure constructor.
FriendshipGraph graph_from_document(const InstanceDocument& doc);
std::optional<CoalitionStructure> partition_from_document(const InstanceDocument& doc);

InstanceDocument document_from_graph(const FriendshipGraph& g);
InstanceDocument document_from_gadget(const Gadget& g);
InstanceDocument document_from_artifact(const ReductionArtifact& r);

// The layout sidecar used by document_from_gadget and the provenance
// section used by document_from_artifact, exposed for tests.
Json layout_to_json(const GadgetLayout& layout);

} // namespace ahg
