#include "ahg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

namespace ahg {

namespace {

// Validates and normalizes in place: edges small-id-first, sorted, unique;
// partition blocks sorted internally and ordered by smallest member.
void canonicalize(InstanceDocument& doc) {
    for (auto& [u, v] : doc.edges) {
        if (u == v)
            throw ValidationError("edges: self-loop on vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (v >= doc.players)
            throw ValidationError("edges: endpoint " + std::to_string(v) + " out of range for " +
                                  std::to_string(doc.players) + " players");
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    doc.edges.erase(std::unique(doc.edges.begin(), doc.edges.end()), doc.edges.end());

    if (doc.names && doc.names->size() != doc.players)
        throw ValidationError("names: expected " + std::to_string(doc.players) + " entries, got " +
                              std::to_string(doc.names->size()));

    if (doc.partition) {
        std::vector<char> seen(doc.players, 0);
        for (auto& block : *doc.partition) {
            if (block.empty())
                throw ValidationError("partition: empty block");
            std::sort(block.begin(), block.end());
            for (PlayerId id : block) {
                if (id >= doc.players)
                    throw ValidationError("partition: player " + std::to_string(id) +
                                          " out of range");
                if (seen[id])
                    throw ValidationError("partition: overlapping blocks (player " +
                                          std::to_string(id) + " appears twice)");
                seen[id] = 1;
            }
        }
        std::sort(doc.partition->begin(), doc.partition->end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }
}

std::size_t require_count(const Json& j, const char* field) {
    if (!j.is_number_unsigned())
        throw ValidationError(std::string(field) + ": expected a non-negative count");
    return j.get<std::size_t>();
}

InstanceDocument parse_json_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    if (!j.is_object())
        throw ValidationError("document: expected a JSON object");
    if (j.contains("format")) {
        if (!j["format"].is_string() || j["format"].get<std::string>() != "ahg-instance")
            throw ValidationError("format: expected \"ahg-instance\"");
    }

    InstanceDocument doc;
    if (j.contains("version")) {
        if (!j["version"].is_string())
            throw ValidationError("version: expected a string");
        doc.format_version = j["version"].get<std::string>();
    }
    if (!j.contains("players"))
        throw ValidationError("players: required field missing");
    doc.players = require_count(j["players"], "players");

    if (j.contains("names")) {
        if (!j["names"].is_array())
            throw ValidationError("names: expected an array of strings");
        std::vector<std::string> names;
        for (const Json& entry : j["names"]) {
            if (!entry.is_string())
                throw ValidationError("names: expected an array of strings");
            names.push_back(entry.get<std::string>());
        }
        doc.names = std::move(names);
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw ValidationError("edges: expected an array of id pairs");
        for (const Json& entry : j["edges"]) {
            if (!entry.is_array() || entry.size() != 2)
                throw ValidationError("edges: each entry must be a pair of ids");
            doc.edges.emplace_back(static_cast<VertexId>(require_count(entry[0], "edges")),
                                   static_cast<VertexId>(require_count(entry[1], "edges")));
        }
    }
    if (j.contains("partition")) {
        if (!j["partition"].is_array())
            throw ValidationError("partition: expected an array of blocks");
        std::vector<std::vector<PlayerId>> blocks;
        for (const Json& block : j["partition"]) {
            if (!block.is_array())
                throw ValidationError("partition: each block must be an array of ids");
            std::vector<PlayerId> members;
            for (const Json& id : block)
                members.push_back(static_cast<PlayerId>(require_count(id, "partition")));
            blocks.push_back(std::move(members));
        }
        doc.partition = std::move(blocks);
    }
    if (j.contains("model")) {
        if (!j["model"].is_string())
            throw ValidationError("model: expected a model tag string");
        const auto tag = j["model"].get<std::string>();
        const auto m = model_from_string(tag);
        if (!m)
            throw ValidationError("model: unknown tag \"" + tag + "\"");
        doc.model = *m;
    }
    if (j.contains("provenance"))
        doc.provenance = j["provenance"];
    if (j.contains("layout"))
        doc.layout = j["layout"];
    return doc;
}

std::uint64_t parse_uint_token(const std::string& token, std::size_t line) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("line " + std::to_string(line) + ": expected a number, got \"" + token +
                         "\"");
    return value;
}

InstanceDocument parse_edgelist_document(std::string_view text) {
    InstanceDocument doc;
    bool saw_header = false;
    bool one_based = false;
    std::size_t declared_edges = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream line(raw);
        std::vector<std::string> tokens;
        for (std::string t; line >> t;)
            tokens.push_back(std::move(t));
        if (tokens.empty())
            continue;
        if (tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (saw_header)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate 'p' header");
            if (tokens.size() != 4 || (tokens[1] != "ahg" && tokens[1] != "edge"))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p ahg <n> <m>' or 'p edge <n> <m>'");
            one_based = tokens[1] == "edge";
            doc.players = parse_uint_token(tokens[2], line_no);
            declared_edges = parse_uint_token(tokens[3], line_no);
            saw_header = true;
            continue;
        }
        if (tokens[0] == "e") {
            if (!saw_header)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": edge before the 'p' header");
            if (tokens.size() != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            std::uint64_t u = parse_uint_token(tokens[1], line_no);
            std::uint64_t v = parse_uint_token(tokens[2], line_no);
            if (one_based) {
                if (u == 0 || v == 0)
                    throw ValidationError("edges: 'p edge' ids are 1-based, got 0 on line " +
                                          std::to_string(line_no));
                --u;
                --v;
            }
            doc.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
            continue;
        }
        throw ParseError("line " + std::to_string(line_no) + ": unknown record \"" + tokens[0] +
                         "\"");
    }
    if (!saw_header)
        throw ParseError("missing 'p' header line");
    if (doc.edges.size() != declared_edges)
        throw ValidationError("edges: header declares " + std::to_string(declared_edges) +
                              " edges, found " + std::to_string(doc.edges.size()));
    return doc;
}

} // namespace

InstanceDocument parse_instance(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError("instance: empty input");
    InstanceDocument doc = text[first] == '{' ? parse_json_document(text)
                                              : parse_edgelist_document(text);
    canonicalize(doc);
    return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
    InstanceDocument canonical = doc;
    canonicalize(canonical);

    Json j;
    j["format"] = "ahg-instance";
    j["version"] = canonical.format_version;
    j["players"] = canonical.players;
    if (canonical.names)
        j["names"] = *canonical.names;
    Json edges = Json::array();
    for (const auto& [u, v] : canonical.edges)
        edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    if (canonical.partition)
        j["partition"] = *canonical.partition;
    if (canonical.model)
        j["model"] = std::string(to_string(*canonical.model));
    if (canonical.provenance)
        j["provenance"] = *canonical.provenance;
    if (canonical.layout)
        j["layout"] = *canonical.layout;
    return j.dump(2) + "\n";
}

std::string serialize_edgelist(const InstanceDocument& doc) {
    InstanceDocument canonical = doc;
    canonicalize(canonical);
    std::string out = "p ahg " + std::to_string(canonical.players) + " " +
                      std::to_string(canonical.edges.size()) + "\n";
    for (const auto& [u, v] : canonical.edges)
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

FriendshipGraph graph_from_document(const InstanceDocument& doc) {
    return FriendshipGraph::build(doc.players, doc.edges);
}

std::optional<CoalitionStructure> partition_from_document(const InstanceDocument& doc) {
    if (!doc.partition)
        return std::nullopt;
    std::vector<Coalition> blocks;
    blocks.reserve(doc.partition->size());
    for (const auto& members : *doc.partition)
        blocks.push_back(Coalition::from_members(doc.players, members));
    return CoalitionStructure(doc.players, std::move(blocks));
}

InstanceDocument document_from_graph(const FriendshipGraph& g) {
    InstanceDocument doc;
    doc.players = g.num_vertices();
    doc.edges.reserve(g.num_edges());
    for (const Edge& e : g.edges())
        doc.edges.emplace_back(e.u, e.v);
    return doc;
}

Json layout_to_json(const GadgetLayout& layout) {
    Json j;
    j["kind"] = to_string(layout.kind);
    j["degree-param"] = layout.degree_param;
    j["k-prime"] = layout.k_prime;
    j["players"] = layout.num_players;
    if (layout.top)
        j["top"] = *layout.top;
    j["distinguished"] = layout.distinguished;
    j["mids"] = layout.mids;
    j["fringe"] = layout.fringe;
    j["base"] = layout.base;
    return j;
}

InstanceDocument document_from_gadget(const Gadget& g) {
    InstanceDocument doc = document_from_graph(g.graph);
    doc.layout = layout_to_json(g.layout);
    return doc;
}

InstanceDocument document_from_artifact(const ReductionArtifact& r) {
    InstanceDocument doc = document_from_graph(r.game.graph());
    std::vector<std::vector<PlayerId>> partition;
    partition.reserve(r.gamma.blocks().size());
    for (const Coalition& block : r.gamma.blocks())
        partition.push_back(block.members());
    doc.partition = std::move(partition);

    Json prov;
    prov["target"] = std::string(target_tag(r.target));
    Json models = Json::array();
    for (UtilityModel m : target_models(r.target))
        models.push_back(std::string(to_string(m)));
    prov["models"] = std::move(models);
    prov["k"] = r.k_effective;
    prov["k-prime"] = r.k_prime;

    Json source;
    source["players"] = r.source.num_vertices();
    Json source_edges = Json::array();
    for (const Edge& e : r.source.edges())
        source_edges.push_back(Json::array({e.u, e.v}));
    source["edges"] = std::move(source_edges);
    prov["source"] = std::move(source);

    Json vp = Json::array();
    for (const auto& [v, p] : r.vertex_players)
        vp.push_back(Json::array({v, p}));
    prov["vertex-players"] = std::move(vp);
    Json ep = Json::array();
    for (const auto& [e, p] : r.edge_players)
        ep.push_back(Json::array({e.u, e.v, p}));
    prov["edge-players"] = std::move(ep);
    Json ip = Json::array();
    for (const auto& [key, p] : r.incidence_players)
        ip.push_back(Json::array({key.first, key.second.u, key.second.v, p}));
    prov["incidence-players"] = std::move(ip);
    Json dp = Json::array();
    for (const auto& [e, ids] : r.dummy_players)
        dp.push_back(Json::array({e.u, e.v, ids}));
    prov["dummy-players"] = std::move(dp);

    Json steps = Json::array();
    for (const PreprocessStep& s : r.preprocessing_log) {
        Json step;
        step["action"] = std::string(to_string(s.action));
        step["k-after"] = s.k_after;
        step["reason"] = s.reason;
        steps.push_back(std::move(step));
    }
    prov["preprocessing"] = std::move(steps);

    Json gadgets = Json::array();
    for (const GadgetLayout& l : r.gadget_layouts)
        gadgets.push_back(layout_to_json(l));
    prov["gadgets"] = std::move(gadgets);

    doc.provenance = std::move(prov);
    return doc;
}

} // namespace ahg
