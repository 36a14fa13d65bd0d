#include "grundy/reductions.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace grundy {

void CnfFormula::validate() const {
    if (var_count < 1) throw std::invalid_argument("cnf: no variables");
    for (const auto& cl : clauses) {
        std::vector<int> vars;
        for (int lit : cl.lits) {
            if (lit == 0 || std::abs(lit) > var_count)
                throw std::invalid_argument("cnf: literal out of range");
            vars.push_back(std::abs(lit));
        }
        std::sort(vars.begin(), vars.end());
        if (std::unique(vars.begin(), vars.end()) != vars.end())
            throw std::invalid_argument("cnf: clause with repeated variable");
        for (std::size_t q = 1; q < 3; ++q)
            if (std::abs(cl.lits[q - 1]) > std::abs(cl.lits[q]))
                throw std::invalid_argument("cnf: clause literals not sorted by variable");
    }
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
    CnfFormula f;
    int expected_clauses = -1;
    std::vector<int> pending;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "p") {
            std::string kind;
            if (!(ls >> kind >> f.var_count >> expected_clauses) || kind != "cnf")
                throw std::invalid_argument("cnf format: bad problem line");
            continue;
        }
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw std::invalid_argument("cnf format: clause must have exactly 3 literals");
                CnfClause cl;
                std::copy(pending.begin(), pending.end(), cl.lits.begin());
                std::sort(cl.lits.begin(), cl.lits.end(),
                          [](int a, int b) { return std::abs(a) < std::abs(b); });
                f.clauses.push_back(cl);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!pending.empty()) throw std::invalid_argument("cnf format: unterminated clause");
    if (expected_clauses >= 0 && expected_clauses != static_cast<int>(f.clauses.size()))
        throw std::invalid_argument("cnf format: clause count mismatch");
    f.validate();
    return f;
}

CnfFormula parse_dimacs_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cnf file: " + path);
    return parse_dimacs_cnf(in);
}

std::string cnf_to_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.var_count << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses)
        os << cl.lits[0] << " " << cl.lits[1] << " " << cl.lits[2] << " 0\n";
    return os.str();
}

namespace {

// support sizes of the literal vertex for variable i (1-based):
// ({2k : k in [n]} u {2i-1, 2n+1, 2n+2}) \ {2i}, ascending
std::vector<int> literal_support_sizes(int i, int n) {
    std::vector<int> sizes;
    for (int q = 1; q <= n; ++q)
        if (2 * q != 2 * i) sizes.push_back(2 * q);
    sizes.push_back(2 * i - 1);
    sizes.push_back(2 * n + 1);
    sizes.push_back(2 * n + 2);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> d_support_sizes(int j, int n) { // 1-based clause index
    std::vector<int> sizes;
    for (int q = 1; q <= 2 * n + 3; ++q) sizes.push_back(q);
    for (int q = 2 * n + 5; q <= 2 * n + 3 + j; ++q) sizes.push_back(q);
    return sizes;
}

std::vector<int> u_support_sizes(int n, int m) {
    std::vector<int> sizes;
    for (int q = 1; q <= 2 * n + 4; ++q) sizes.push_back(q);
    for (int q = 2 * n + 5 + m; q <= 10 * n + 10 * m; ++q) sizes.push_back(q);
    return sizes;
}

std::vector<int> iota_vec(int hi) { // [1, hi]
    std::vector<int> out;
    for (int q = 1; q <= hi; ++q) out.push_back(q);
    return out;
}

} // namespace

SatReduction build_sat_reduction(const CnfFormula& f) {
    f.validate();
    const int n = f.var_count;
    const int m = static_cast<int>(f.clauses.size());

    SatReduction red;
    red.formula = f;
    red.target = 10 * n + 10 * m + 1;
    SatIndex& ix = red.index;
    Graph& g = red.graph;

    // variable gadgets; vertex order matches the clique-width script
    ix.xn.resize(n);
    ix.xp.resize(n);
    for (int i = 1; i <= n; ++i) {
        ix.xn[i - 1] = g.add_vertex("xN(" + std::to_string(i) + ")");
        ix.xp[i - 1] = g.add_vertex("xP(" + std::to_string(i) + ")");
        attach_clique_supports_inplace(g, ix.xn[i - 1], iota_vec(2 * i - 2), ix.supports);
        attach_clique_supports_inplace(g, ix.xp[i - 1], iota_vec(2 * i - 2), ix.supports);
        g.add_edge(ix.xn[i - 1], ix.xp[i - 1]);
    }
    // clause gadgets
    ix.c.resize(m);
    ix.d.resize(m);
    ix.literals.assign(m, {});
    for (int j = 1; j <= m; ++j) {
        const CnfClause& cl = f.clauses[j - 1];
        ix.c[j - 1] = g.add_vertex("c(" + std::to_string(j) + ")");
        attach_clique_supports_inplace(g, ix.c[j - 1], iota_vec(2 * n), ix.supports);
        ix.d[j - 1] = g.add_vertex("d(" + std::to_string(j) + ")");
        attach_clique_supports_inplace(g, ix.d[j - 1], d_support_sizes(j, n), ix.supports);
        g.add_edge(ix.c[j - 1], ix.d[j - 1]);
        for (int lit : cl.lits) {
            int i = std::abs(lit);
            int v = g.add_vertex("x(" + std::to_string(i) + "," + std::to_string(j) + ")");
            ix.literals[j - 1].push_back(v);
            attach_clique_supports_inplace(g, v, literal_support_sizes(i, n), ix.supports);
            g.add_edge(v, ix.c[j - 1]);
            const auto& row = lit > 0 ? ix.xp : ix.xn;
            for (int ip = 0; ip < n; ++ip) g.add_edge(v, row[ip]);
        }
    }
    ix.u = g.add_vertex("u");
    attach_clique_supports_inplace(g, ix.u, u_support_sizes(n, m), ix.supports);
    for (int j = 0; j < m; ++j) g.add_edge(ix.u, ix.d[j]);
    return red;
}

namespace {

// connector gets `connector_color`, internals the remaining colors of [size]
void apply_clique_coloring(std::vector<int>& colors, const SupportRecord& rec,
                           int connector_color) {
    colors[rec.base] = connector_color;
    int next = 1;
    for (int off = 1; off < rec.order; ++off) {
        if (next == connector_color) ++next;
        colors[rec.base + off] = next++;
    }
}

} // namespace

GrundyColoring sat_witness_coloring(const SatReduction& red, const std::vector<bool>& assignment) {
    const CnfFormula& f = red.formula;
    const int n = f.var_count;
    const int m = static_cast<int>(f.clauses.size());
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("sat witness: assignment size mismatch");
    auto satisfied = [&](int lit) {
        return lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
    };
    for (const auto& cl : f.clauses)
        if (!satisfied(cl.lits[0]) && !satisfied(cl.lits[1]) && !satisfied(cl.lits[2]))
            throw std::invalid_argument("sat witness: assignment does not satisfy the formula");

    const SatIndex& ix = red.index;
    std::vector<int> colors(red.graph.vertex_count(), 0);
    std::map<int, std::vector<const SupportRecord*>> supports_of;
    for (const auto& rec : ix.supports) supports_of[rec.supported].push_back(&rec);
    auto color_supports_optimal = [&](int v) {
        for (const SupportRecord* rec : supports_of[v])
            apply_clique_coloring(colors, *rec, rec->order);
    };

    // variable rows: the true side of the pair takes the even color
    for (int i = 1; i <= n; ++i) {
        colors[ix.xp[i - 1]] = assignment[i - 1] ? 2 * i : 2 * i - 1;
        colors[ix.xn[i - 1]] = assignment[i - 1] ? 2 * i - 1 : 2 * i;
        color_supports_optimal(ix.xp[i - 1]);
        color_supports_optimal(ix.xn[i - 1]);
    }

    for (int j = 1; j <= m; ++j) {
        const CnfClause& cl = f.clauses[j - 1];
        // the lowest-variable satisfying literal takes 2n+3, the other two
        // 2n+1 and 2n+2 in variable order
        int sat_pos = -1;
        for (int qi = 0; qi < 3; ++qi)
            if (satisfied(cl.lits[qi])) {
                sat_pos = qi;
                break;
            }
        std::vector<int> desired(3);
        int next_low = 2 * n + 1;
        for (int qi = 0; qi < 3; ++qi) desired[qi] = (qi == sat_pos) ? 2 * n + 3 : next_low++;

        for (int qi = 0; qi < 3; ++qi) {
            int lit = cl.lits[qi];
            int v = ix.literals[j - 1][qi];
            int col = desired[qi];
            colors[v] = col;
            // colors already present among the variable-row neighbors
            std::vector<char> present(col + 1, 0);
            const auto& row = lit > 0 ? ix.xp : ix.xn;
            for (int ip = 0; ip < n; ++ip)
                if (colors[row[ip]] < col) present[colors[row[ip]]] = 1;
            std::vector<int> missing;
            for (int c = col - 1; c >= 1; --c)
                if (!present[c]) missing.push_back(c); // descending
            // greedy: each missing color goes to the smallest unused support
            // that can reach it
            std::vector<const SupportRecord*> recs = supports_of[v];
            std::sort(recs.begin(), recs.end(),
                      [](const SupportRecord* a, const SupportRecord* b) {
                          return a->order < b->order;
                      });
            std::vector<char> used(recs.size(), 0);
            for (int c : missing) {
                bool placed = false;
                for (std::size_t r = 0; r < recs.size(); ++r) {
                    if (used[r] || recs[r]->order < c) continue;
                    apply_clique_coloring(colors, *recs[r], c);
                    used[r] = 1;
                    placed = true;
                    break;
                }
                if (!placed)
                    throw std::logic_error("sat witness: support assignment infeasible");
            }
            for (std::size_t r = 0; r < recs.size(); ++r) {
                if (used[r]) continue;
                int c = recs[r]->order == col ? recs[r]->order - 1 : recs[r]->order;
                apply_clique_coloring(colors, *recs[r], c);
            }
        }
        colors[ix.c[j - 1]] = 2 * n + 4;
        color_supports_optimal(ix.c[j - 1]);
        colors[ix.d[j - 1]] = 2 * n + 4 + j;
        color_supports_optimal(ix.d[j - 1]);
    }
    colors[ix.u] = red.target;
    color_supports_optimal(ix.u);

    GrundyColoring out;
    out.colors = std::move(colors);
    out.max_color = *std::max_element(out.colors.begin(), out.colors.end());
    return out;
}

CliquewidthExpression build_cw8_expression(const CnfFormula& f) {
    f.validate();
    const int n = f.var_count;
    const int m = static_cast<int>(f.clauses.size());
    // labels: 0 junk, 1 all xN, 2 all xP, 3/4 working, 5 all d, 6/7 support
    // clique construction (connector on 6 before its internals, matching the
    // graph builder's connector-first numbering)
    CwBuilder b;
    auto supports = [&](int owner_label, const std::vector<int>& sizes) {
        for (int size : sizes) {
            b.intro(6);
            b.join(6, owner_label);
            for (int q = 1; q < size; ++q) {
                b.intro(7);
                b.join(7, 6);
                b.rename(7, 6);
            }
            b.rename(6, 0);
        }
    };
    for (int i = 1; i <= n; ++i) {
        b.intro(3); // xN
        b.intro(4); // xP
        // the graph builder attaches supports before adding the matching edge
        // but after both endpoints exist; introduce order must match it
        supports(3, iota_vec(2 * i - 2));
        supports(4, iota_vec(2 * i - 2));
        b.join(3, 4);
        b.rename(3, 1);
        b.rename(4, 2);
    }
    for (int j = 1; j <= m; ++j) {
        const CnfClause& cl = f.clauses[j - 1];
        b.intro(3); // c_j
        supports(3, iota_vec(2 * n));
        b.intro(4); // d_j
        supports(4, d_support_sizes(j, n));
        b.join(3, 4);
        b.rename(4, 5);
        for (int lit : cl.lits) {
            int i = std::abs(lit);
            b.intro(4); // literal vertex
            supports(4, literal_support_sizes(i, n));
            b.join(4, 3);
            b.join(4, lit > 0 ? 2 : 1);
            b.rename(4, 0);
        }
        b.rename(3, 0);
    }
    b.intro(3); // u
    supports(3, u_support_sizes(n, m));
    b.join(3, 5);
    return b.finish();
}

} // namespace grundy
