#ifndef FUZZYCAT_GRAPH_HPP
#define FUZZYCAT_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "fuzzycat/degree.hpp"

namespace fuzzycat {

/// Directed multigraph whose arrows carry plausibility degrees. Parallel
/// arrows with distinct ids are permitted.
struct GraphArrow {
    std::string id;
    std::string dom;
    std::string cod;
    Degree plausibility;
};

struct FuzzyGraph {
    std::vector<std::string> nodes;
    std::vector<GraphArrow> arrows;

    bool has_node(const std::string& name) const;
    const GraphArrow* find_arrow(const std::string& id) const;
};

/// A path is stored in application order: arrow_ids[0] is applied first.
/// The paper writes paths (f_1,...,f_k) with f_k applied first; the stored
/// list is that display reversed.
struct Path {
    std::vector<std::string> arrow_ids;

    size_t length() const { return arrow_ids.size(); }
};

enum class GraphViolationKind { DanglingEndpoint, DuplicateArrowId, DuplicateNode };

struct GraphViolation {
    GraphViolationKind kind;
    std::string subject; // arrow or node id
    std::string detail;
};

struct GraphReport {
    std::vector<GraphViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Lists every dangling endpoint and duplicate id; empty iff the graph
/// invariants hold.
GraphReport validate_graph(const FuzzyGraph& g);

/// Min of the member arrows' degrees. Throws PathError on a broken chain or
/// unknown arrow id.
Degree path_plausibility(const FuzzyGraph& g, const Path& p);

/// Every path of length 1..max_len from `from` to `to`, with its
/// plausibility, ordered lexicographically by arrow-id sequence. Cyclic
/// revisits are allowed up to the length bound.
std::vector<std::pair<Path, Degree>> enumerate_paths(const FuzzyGraph& g,
                                                     const std::string& from,
                                                     const std::string& to,
                                                     int max_len);

} // namespace fuzzycat

#endif
