#ifndef GRUNDY_GRAPH_HPP
#define GRUNDY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace grundy {

// Undirected simple graph with dense vertex ids 0..n-1 and an optional
// free-form role tag per vertex (used by the instance generators to name
// gadget vertices). Adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    int add_vertex(std::string tag = {});
    void add_edge(int u, int v); // self-loops rejected; duplicates are a no-op
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const;

    const std::string& tag(int v) const;
    void set_tag(int v, std::string tag);

    // Induced subgraph on `keep`; vertex i of the result is keep[i].
    Graph induced(const std::vector<int>& keep) const;
    // Induced subgraph on ids 0..count-1 (ids preserved).
    Graph induced_prefix(int count) const;

    bool is_clique() const;
    bool is_edgeless() const { return m_ == 0; }
    bool is_connected() const;
    bool is_tree() const;

    std::vector<std::pair<int, int>> edges() const; // sorted, u < v

    // Structural equality, role tags ignored.
    bool same_structure(const Graph& o) const;

    // One adjacency bitmask per vertex; requires n <= 64.
    std::vector<uint64_t> adjacency_masks() const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> tags_;
    int m_ = 0;

    void check_vertex(int v) const;
};

// Text format: header "p edge <n> <m>", one "e <u> <v>" line per edge with
// 1-based endpoints, comments starting with "c". Role tags round-trip as
// "c tag <v> <string>" comment lines (1-based v).
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);

} // namespace grundy

#endif
