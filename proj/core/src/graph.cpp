#include "grundy/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace grundy {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(n);
    tags_.resize(n);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
}

int Graph::add_vertex(std::string tag) {
    adj_.emplace_back();
    tags_.push_back(std::move(tag));
    return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loop rejected");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const std::string& Graph::tag(int v) const {
    check_vertex(v);
    return tags_[v];
}

void Graph::set_tag(int v, std::string tag) {
    check_vertex(v);
    tags_[v] = std::move(tag);
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> pos(vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if (pos[keep[i]] != -1) throw std::invalid_argument("induced: duplicate vertex");
        pos[keep[i]] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.tags_[i] = tags_[keep[i]];
        for (int w : adj_[keep[i]])
            if (pos[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), pos[w]);
    }
    return out;
}

Graph Graph::induced_prefix(int count) const {
    if (count < 0 || count > vertex_count())
        throw std::invalid_argument("induced_prefix: bad count");
    Graph out(count);
    for (int v = 0; v < count; ++v) {
        out.tags_[v] = tags_[v];
        for (int w : adj_[v])
            if (w < v) out.add_edge(w, v);
    }
    return out;
}

bool Graph::is_clique() const {
    long long n = vertex_count();
    return m_ == n * (n - 1) / 2;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

bool Graph::is_tree() const {
    return vertex_count() >= 1 && m_ == vertex_count() - 1 && is_connected();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

bool Graph::same_structure(const Graph& o) const {
    return vertex_count() == o.vertex_count() && m_ == o.m_ && adj_ == o.adj_;
}

std::vector<uint64_t> Graph::adjacency_masks() const {
    if (vertex_count() > 64) throw std::invalid_argument("adjacency_masks: n > 64");
    std::vector<uint64_t> masks(vertex_count(), 0);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v]) masks[v] |= uint64_t{1} << w;
    return masks;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    long long edges_seen = 0;
    Graph g;
    std::vector<std::pair<int, std::string>> pending_tags;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") {
            std::string word;
            if (ls >> word && word == "tag") {
                int v;
                std::string tag;
                if (!(ls >> v) || !std::getline(ls, tag))
                    throw std::invalid_argument("graph format: bad tag line: " + line);
                if (!tag.empty() && tag.front() == ' ') tag.erase(0, 1);
                pending_tags.emplace_back(v, tag);
            }
            continue;
        }
        if (head == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw std::invalid_argument("graph format: bad problem line: " + line);
            g = Graph(n);
            continue;
        }
        if (head == "e") {
            if (n < 0) throw std::invalid_argument("graph format: edge before problem line");
            int u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("graph format: bad edge line: " + line);
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
            continue;
        }
        throw std::invalid_argument("graph format: unknown line: " + line);
    }
    if (n < 0) throw std::invalid_argument("graph format: missing problem line");
    if (edges_seen != m)
        throw std::invalid_argument("graph format: edge count mismatch");
    for (auto& [v, tag] : pending_tags) {
        if (v < 1 || v > n) throw std::invalid_argument("graph format: tag vertex out of range");
        g.set_tag(v - 1, tag);
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.tag(v).empty()) out << "c tag " << (v + 1) << " " << g.tag(v) << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file: " + path);
    write_graph(out, g);
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

} // namespace grundy
