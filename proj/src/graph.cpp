#include "fuzzycat/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fuzzycat {

bool FuzzyGraph::has_node(const std::string& name) const {
    return std::find(nodes.begin(), nodes.end(), name) != nodes.end();
}

const GraphArrow* FuzzyGraph::find_arrow(const std::string& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return &a;
    return nullptr;
}

GraphReport validate_graph(const FuzzyGraph& g) {
    GraphReport report;

    std::set<std::string> seen_nodes;
    for (const auto& n : g.nodes) {
        if (!seen_nodes.insert(n).second)
            report.violations.push_back(
                {GraphViolationKind::DuplicateNode, n, "node declared twice"});
    }

    std::set<std::string> seen_arrows;
    for (const auto& a : g.arrows) {
        if (!seen_arrows.insert(a.id).second)
            report.violations.push_back(
                {GraphViolationKind::DuplicateArrowId, a.id, "arrow id declared twice"});
        if (!g.has_node(a.dom))
            report.violations.push_back({GraphViolationKind::DanglingEndpoint, a.id,
                                         "domain node missing: " + a.dom});
        if (!g.has_node(a.cod))
            report.violations.push_back({GraphViolationKind::DanglingEndpoint, a.id,
                                         "codomain node missing: " + a.cod});
    }
    return report;
}

Degree path_plausibility(const FuzzyGraph& g, const Path& p) {
    if (p.arrow_ids.empty()) throw PathError("empty path");

    std::vector<Degree> degrees;
    const GraphArrow* prev = nullptr;
    for (const auto& id : p.arrow_ids) {
        const GraphArrow* a = g.find_arrow(id);
        if (!a) throw PathError("unknown arrow in path: " + id);
        if (prev && prev->cod != a->dom)
            throw PathError("broken chain at " + prev->id + " -> " + a->id);
        degrees.push_back(a->plausibility);
        prev = a;
    }
    return degree_min(degrees);
}

std::vector<std::pair<Path, Degree>> enumerate_paths(const FuzzyGraph& g,
                                                     const std::string& from,
                                                     const std::string& to,
                                                     int max_len) {
    if (!g.has_node(from)) throw NodeError("unknown node: " + from);
    if (!g.has_node(to)) throw NodeError("unknown node: " + to);
    if (max_len < 1) throw NodeError("max_len must be positive");

    // outgoing arrows per node, sorted by id so DFS emits lexicographic order
    std::map<std::string, std::vector<const GraphArrow*>> out;
    for (const auto& a : g.arrows) out[a.dom].push_back(&a);
    for (auto& [_, v] : out)
        std::sort(v.begin(), v.end(),
                  [](const GraphArrow* x, const GraphArrow* y) { return x->id < y->id; });

    std::vector<std::pair<Path, Degree>> result;
    std::vector<const GraphArrow*> stack;

    auto dfs = [&](auto&& self, const std::string& at) -> void {
        if (!stack.empty() && at == to) {
            Path p;
            std::vector<Degree> degs;
            for (const auto* a : stack) {
                p.arrow_ids.push_back(a->id);
                degs.push_back(a->plausibility);
            }
            result.emplace_back(std::move(p), degree_min(degs));
        }
        if (static_cast<int>(stack.size()) == max_len) return;
        auto it = out.find(at);
        if (it == out.end()) return;
        for (const auto* a : it->second) {
            stack.push_back(a);
            self(self, a->cod);
            stack.pop_back();
        }
    };
    dfs(dfs, from);

    std::sort(result.begin(), result.end(),
              [](const auto& x, const auto& y) { return x.first.arrow_ids < y.first.arrow_ids; });
    return result;
}

} // namespace fuzzycat
