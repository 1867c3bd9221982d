#include "kgrag/knowledge_graph.hpp"

#include "kgrag/errors.hpp"
#include "kgrag/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace kgrag {

namespace {

using nlohmann::json;

const char* kIsA = "is_a";
const char* kHasChild = "has_child";
const char* kHasName = "has_name";
const char* kHasDescription = "has_description";
const char* kHasParameter = "has_parameter";

std::optional<NodeKind> kind_from_string(const std::string& s) {
    if (s == "package") return NodeKind::Package;
    if (s == "function") return NodeKind::Function;
    if (s == "attribute") return NodeKind::Attribute;
    if (s == "parameter") return NodeKind::Parameter;
    return std::nullopt;
}

std::string json_escape(const std::string& s) {
    return json(s).dump();
}

} // namespace

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Package: return "package";
        case NodeKind::Function: return "function";
        case NodeKind::Attribute: return "attribute";
        case NodeKind::Parameter: return "parameter";
        case NodeKind::DescriptionLiteral: return "description-literal";
    }
    return "unknown";
}

KnowledgeGraph KnowledgeGraph::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open knowledge graph file: " + path.string());

    std::vector<Triple> triples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(std::string("malformed triple: ") + e.what(), lineno);
        }
        if (!j.is_object() || !j.contains("s") || !j.contains("r") || !j.contains("o") ||
            !j["s"].is_string() || !j["r"].is_string() || !j["o"].is_string()) {
            throw ParseError("triple must be an object with string fields s, r, o", lineno);
        }
        Triple t{j["s"].get<std::string>(), j["r"].get<std::string>(), j["o"].get<std::string>()};
        if (t.relation.empty()) throw ParseError("empty relation label", lineno);
        triples.push_back(std::move(t));
    }
    return from_triples(triples);
}

KnowledgeGraph KnowledgeGraph::from_triples(const std::vector<Triple>& triples) {
    KnowledgeGraph g;
    g.triples_ = triples;

    // First pass declares entities so structural triples may appear in any order.
    for (const Triple& t : g.triples_) {
        if (t.relation.empty()) throw ParseError("empty relation label");
        if (t.relation != kIsA) continue;
        auto kind = kind_from_string(t.object);
        if (!kind) throw ParseError("unknown entity kind '" + t.object + "' for " + t.subject);
        auto [it, inserted] = g.nodes_.try_emplace(t.subject);
        it->second.id = t.subject;
        it->second.kind = *kind;
        if (it->second.name.empty()) it->second.name = t.subject;
    }

    g.apply_structure();
    return g;
}

void KnowledgeGraph::apply_structure() {
    std::set<std::string> dangling;
    auto require_entity = [&](const std::string& id) -> KgNode* {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) {
            dangling.insert(id);
            return nullptr;
        }
        return &it->second;
    };

    for (const Triple& t : triples_) {
        if (t.relation == kIsA) continue;
        KgNode* subject = require_entity(t.subject);
        if (t.relation == kHasChild || t.relation == kHasParameter) {
            KgNode* object = require_entity(t.object);
            if (subject && object) {
                object->parent = t.subject;
                child_ids_[t.subject].push_back(t.object);
            }
        } else if (t.relation == kHasName) {
            if (subject) subject->name = t.object;
        } else if (t.relation == kHasDescription) {
            if (subject) {
                subject->description = t.object;
                // Description literals are entities of their own kind, keyed
                // off the owning node so distinct owners never collide.
                KgNode literal;
                literal.id = t.subject + "#description";
                literal.kind = NodeKind::DescriptionLiteral;
                literal.name = t.object;
                literal.parent = t.subject;
                nodes_[literal.id] = std::move(literal);
            }
        }
        // Unknown relations carry no structure; the subject must still exist.
    }

    if (!dangling.empty()) {
        std::ostringstream msg;
        msg << "triples reference undeclared entities:";
        for (const auto& id : dangling) msg << " " << id;
        throw IntegrityError(msg.str());
    }

    for (auto& [id, kids] : child_ids_) std::sort(kids.begin(), kids.end());
}

std::string KnowledgeGraph::to_jsonl() const {
    std::ostringstream out;
    for (const Triple& t : triples_) {
        out << "{\"s\":" << json_escape(t.subject) << ",\"r\":" << json_escape(t.relation)
            << ",\"o\":" << json_escape(t.object) << "}\n";
    }
    return out.str();
}

void KnowledgeGraph::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write knowledge graph file: " + path.string());
    out << to_jsonl();
}

std::vector<KgNode> KnowledgeGraph::anchors() const {
    std::vector<KgNode> out;
    for (const auto& [id, node] : nodes_) {
        if (node.kind == NodeKind::Package) out.push_back(node);
    }
    return out; // nodes_ is ordered by id
}

std::vector<KgNode> KnowledgeGraph::children(const std::string& anchor_id) const {
    const KgNode* anchor = find(anchor_id);
    if (!anchor || anchor->kind != NodeKind::Package) {
        throw DomainError("children() requires a package anchor, got: " + anchor_id);
    }
    std::vector<KgNode> out;
    std::deque<std::string> frontier{anchor_id};
    while (!frontier.empty()) {
        std::string id = std::move(frontier.front());
        frontier.pop_front();
        auto it = child_ids_.find(id);
        if (it == child_ids_.end()) continue;
        for (const std::string& child_id : it->second) {
            const KgNode* child = find(child_id);
            if (!child) continue;
            if (child->kind == NodeKind::Function || child->kind == NodeKind::Attribute) {
                out.push_back(*child);
            }
            frontier.push_back(child_id);
        }
    }
    std::sort(out.begin(), out.end(), [](const KgNode& a, const KgNode& b) { return a.id < b.id; });
    return out;
}

const KgNode* KnowledgeGraph::find(const std::string& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
}

std::optional<std::string> KnowledgeGraph::anchor_of(const std::string& id) const {
    const KgNode* node = find(id);
    std::size_t hops = 0;
    while (node) {
        if (node->kind == NodeKind::Package) return node->id;
        if (!node->parent || ++hops > nodes_.size()) return std::nullopt;
        node = find(*node->parent);
    }
    return std::nullopt;
}

KgStats KnowledgeGraph::stats() const {
    KgStats s;
    s.entities = nodes_.size();
    s.triples = triples_.size();
    for (const auto& [id, node] : nodes_) {
        switch (node.kind) {
            case NodeKind::Package: ++s.packages; break;
            case NodeKind::Function: ++s.functions; break;
            case NodeKind::Attribute: ++s.attributes; break;
            case NodeKind::Parameter: ++s.parameters; break;
            case NodeKind::DescriptionLiteral: ++s.description_literals; break;
        }
    }
    return s;
}

} // namespace kgrag
