#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kgrag {

struct Triple {
    std::string subject;
    std::string relation;
    std::string object;

    bool operator==(const Triple&) const = default;
};

enum class NodeKind { Package, Function, Attribute, Parameter, DescriptionLiteral };

const char* to_string(NodeKind kind);

struct KgNode {
    std::string id;
    NodeKind kind = NodeKind::Function;
    std::string name;        // defaults to id when no has_name triple is present
    std::string description; // empty when documentation is missing
    std::optional<std::string> parent;
};

struct KgStats {
    std::size_t entities = 0;
    std::size_t triples = 0;
    std::size_t packages = 0;
    std::size_t functions = 0;
    std::size_t attributes = 0;
    std::size_t parameters = 0;
    std::size_t description_literals = 0;
};

// Immutable after load; safe for concurrent readers.
//
// Serialization is JSON-Lines, one triple per line:
//   {"s": "<id>", "r": "<relation>", "o": "<id-or-literal>"}
// Entities are declared with {"s": id, "r": "is_a", "o": "package|function|
// attribute|parameter"}. Reserved structural relations: has_child, has_name,
// has_description, has_parameter. Unknown relations are kept as plain triples.
class KnowledgeGraph {
public:
    static KnowledgeGraph load(const std::filesystem::path& path);
    static KnowledgeGraph from_triples(const std::vector<Triple>& triples);

    void save(const std::filesystem::path& path) const;
    std::string to_jsonl() const;

    // All package nodes, sorted by id.
    std::vector<KgNode> anchors() const;

    // Function/attribute descendant closure of a package anchor, sorted by id.
    std::vector<KgNode> children(const std::string& anchor_id) const;

    const KgNode* find(const std::string& id) const;

    // Package anchor an entity belongs to, walking parent links.
    std::optional<std::string> anchor_of(const std::string& id) const;

    const std::vector<Triple>& triples() const { return triples_; }
    const std::map<std::string, KgNode>& nodes() const { return nodes_; }

    KgStats stats() const;

private:
    std::vector<Triple> triples_;                                 // input order
    std::map<std::string, KgNode> nodes_;                         // by id
    std::map<std::string, std::vector<std::string>> child_ids_;   // parent -> children

    void apply_structure();
};

} // namespace kgrag
