#include "grundy/cliquewidth.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grundy {

int CliquewidthExpression::label_count() const {
    std::set<int> labels;
    for (const auto& n : nodes) {
        if (n.a >= 0) labels.insert(n.a);
        if (n.b >= 0) labels.insert(n.b);
    }
    return static_cast<int>(labels.size());
}

bool CliquewidthExpression::label_joined(int label) const {
    for (const auto& n : nodes)
        if (n.kind == CwNode::Join && (n.a == label || n.b == label)) return true;
    return false;
}

namespace {

struct CwValue {
    Graph graph;
    std::vector<int> label_of;              // per vertex
    std::vector<std::vector<int>> buckets;  // label -> vertices (lazy, may shrink)

    std::vector<int>& bucket(int label) {
        if (label >= static_cast<int>(buckets.size())) buckets.resize(label + 1);
        return buckets[label];
    }
};

void check_label(int l) {
    if (l < 0 || l > 1'000'000) throw std::invalid_argument("cw eval: bad label");
}

} // namespace

std::pair<Graph, int> eval_cw_expression(const CliquewidthExpression& e) {
    if (e.root < 0 || e.root >= static_cast<int>(e.nodes.size()))
        throw std::invalid_argument("cw eval: bad root");
    int n = static_cast<int>(e.nodes.size());
    std::vector<CwValue> vals(n);
    std::vector<char> computed(n, 0);
    for (int i = 0; i < n; ++i) {
        const CwNode& node = e.nodes[i];
        CwValue v;
        switch (node.kind) {
        case CwNode::Intro: {
            check_label(node.a);
            v.graph = Graph(1);
            v.label_of = {node.a};
            v.bucket(node.a).push_back(0);
            break;
        }
        case CwNode::Union: {
            if (node.left < 0 || node.left >= i || node.right < 0 || node.right >= i ||
                !computed[node.left] || !computed[node.right])
                throw std::invalid_argument("cw eval: union child out of order");
            v = std::move(vals[node.left]);
            CwValue& r = vals[node.right];
            int off = v.graph.vertex_count();
            for (int w = 0; w < r.graph.vertex_count(); ++w) {
                v.graph.add_vertex(r.graph.tag(w));
                v.label_of.push_back(r.label_of[w]);
                v.bucket(r.label_of[w]).push_back(off + w);
            }
            for (auto [x, y] : r.graph.edges()) v.graph.add_edge(off + x, off + y);
            computed[node.left] = computed[node.right] = 0;
            break;
        }
        case CwNode::Join: {
            check_label(node.a);
            check_label(node.b);
            if (node.a == node.b) throw std::invalid_argument("cw eval: join on equal labels");
            if (node.left < 0 || node.left >= i || !computed[node.left])
                throw std::invalid_argument("cw eval: join child out of order");
            v = std::move(vals[node.left]);
            auto& ba = v.bucket(node.a);
            auto& bb = v.bucket(node.b);
            for (int x : ba)
                for (int y : bb) v.graph.add_edge(x, y);
            computed[node.left] = 0;
            break;
        }
        case CwNode::Rename: {
            check_label(node.a);
            check_label(node.b);
            if (node.a == node.b) throw std::invalid_argument("cw eval: rename to same label");
            if (node.left < 0 || node.left >= i || !computed[node.left])
                throw std::invalid_argument("cw eval: rename child out of order");
            v = std::move(vals[node.left]);
            auto& src = v.bucket(node.a);
            auto& dst = v.bucket(node.b);
            for (int x : src) {
                v.label_of[x] = node.b;
                dst.push_back(x);
            }
            src.clear();
            break;
        }
        }
        vals[i] = std::move(v);
        computed[i] = 1;
    }
    if (!computed[e.root]) throw std::invalid_argument("cw eval: root consumed by another node");
    return {std::move(vals[e.root].graph), e.label_count()};
}

void CwBuilder::wrap(CwNode::Kind kind, int a, int b) {
    if (e_.root < 0) throw std::invalid_argument("cw builder: empty expression");
    CwNode n;
    n.kind = kind;
    n.a = a;
    n.b = b;
    n.left = e_.root;
    e_.nodes.push_back(n);
    e_.root = static_cast<int>(e_.nodes.size()) - 1;
}

void CwBuilder::intro(int label) {
    CwNode n;
    n.kind = CwNode::Intro;
    n.a = label;
    e_.nodes.push_back(n);
    int id = static_cast<int>(e_.nodes.size()) - 1;
    if (e_.root < 0) {
        e_.root = id;
    } else {
        CwNode u;
        u.kind = CwNode::Union;
        u.left = e_.root;
        u.right = id;
        e_.nodes.push_back(u);
        e_.root = static_cast<int>(e_.nodes.size()) - 1;
    }
}

void CwBuilder::join(int a, int b) { wrap(CwNode::Join, a, b); }
void CwBuilder::rename(int a, int b) { wrap(CwNode::Rename, a, b); }

CliquewidthExpression CwBuilder::finish() { return std::move(e_); }

namespace {

struct Token {
    enum Kind { LParen, RParen, Word, Number } kind;
    std::string text;
    int value = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '(') {
            out.push_back({Token::LParen, "(", 0});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, ")", 0});
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t used = 0;
            int v = std::stoi(text.substr(i), &used);
            out.push_back({Token::Number, text.substr(i, used), v});
            i += used;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Word, text.substr(i, j - i), 0});
            i = j;
        } else {
            throw std::invalid_argument("cw parse: unexpected character");
        }
    }
    return out;
}

} // namespace

CliquewidthExpression parse_cw_expression(const std::string& text) {
    auto tokens = tokenize(text);
    CliquewidthExpression e;
    struct Frame {
        std::string op;
        std::vector<int> labels;
        std::vector<int> children;
    };
    std::vector<Frame> stack;
    int completed = -1;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const Token& t = tokens[i];
        if (t.kind == Token::LParen) {
            ++i;
            if (i >= tokens.size() || tokens[i].kind != Token::Word)
                throw std::invalid_argument("cw parse: expected operator");
            stack.push_back({tokens[i].text, {}, {}});
            ++i;
        } else if (t.kind == Token::Number) {
            if (stack.empty()) throw std::invalid_argument("cw parse: stray number");
            stack.back().labels.push_back(t.value);
            ++i;
        } else if (t.kind == Token::RParen) {
            if (stack.empty()) throw std::invalid_argument("cw parse: stray )");
            Frame f = std::move(stack.back());
            stack.pop_back();
            CwNode n;
            if (f.op == "intro") {
                if (f.labels.size() != 1 || !f.children.empty())
                    throw std::invalid_argument("cw parse: intro wants one label");
                n.kind = CwNode::Intro;
                n.a = f.labels[0];
            } else if (f.op == "union") {
                if (f.children.size() != 2 || !f.labels.empty())
                    throw std::invalid_argument("cw parse: union wants two children");
                n.kind = CwNode::Union;
                n.left = f.children[0];
                n.right = f.children[1];
            } else if (f.op == "join" || f.op == "rename") {
                if (f.labels.size() != 2 || f.children.size() != 1)
                    throw std::invalid_argument("cw parse: " + f.op +
                                                " wants two labels and one child");
                n.kind = f.op == "join" ? CwNode::Join : CwNode::Rename;
                n.a = f.labels[0];
                n.b = f.labels[1];
                n.left = f.children[0];
            } else {
                throw std::invalid_argument("cw parse: unknown operator " + f.op);
            }
            e.nodes.push_back(n);
            completed = static_cast<int>(e.nodes.size()) - 1;
            if (!stack.empty()) stack.back().children.push_back(completed);
            ++i;
        } else {
            throw std::invalid_argument("cw parse: unexpected token " + t.text);
        }
    }
    if (!stack.empty() || completed < 0)
        throw std::invalid_argument("cw parse: unbalanced expression");
    e.root = completed;
    return e;
}

std::string cw_expression_to_string(const CliquewidthExpression& e) {
    if (e.root < 0) throw std::invalid_argument("cw print: empty expression");
    // iterative to survive deep chains
    std::ostringstream os;
    struct Item {
        int node;
        int phase; // which child / closing state
    };
    std::vector<Item> stack{{e.root, 0}};
    while (!stack.empty()) {
        auto [node, phase] = stack.back();
        stack.pop_back();
        const CwNode& n = e.nodes[node];
        if (phase == 0) {
            switch (n.kind) {
            case CwNode::Intro:
                os << "(intro " << n.a << ")";
                break;
            case CwNode::Union:
                os << "(union ";
                stack.push_back({node, 1});
                stack.push_back({n.left, 0});
                break;
            case CwNode::Join:
                os << "(join " << n.a << " " << n.b << " ";
                stack.push_back({node, 2});
                stack.push_back({n.left, 0});
                break;
            case CwNode::Rename:
                os << "(rename " << n.a << " " << n.b << " ";
                stack.push_back({node, 2});
                stack.push_back({n.left, 0});
                break;
            }
        } else if (phase == 1) { // union: between children
            os << " ";
            stack.push_back({node, 2});
            stack.push_back({n.right, 0});
        } else {
            os << ")";
        }
    }
    return os.str();
}

} // namespace grundy
