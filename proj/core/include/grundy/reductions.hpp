#ifndef GRUNDY_REDUCTIONS_HPP
#define GRUNDY_REDUCTIONS_HPP

#include "grundy/binomial.hpp"
#include "grundy/cliquewidth.hpp"
#include "grundy/coloring.hpp"
#include "grundy/decomposition.hpp"
#include "grundy/graph.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace grundy {

// ---------------------------------------------------------------- multicolored clique

struct McEdge {
    int part_a = 0, idx_a = 0; // vertex idx_a of part_a (0-based)
    int part_b = 0, idx_b = 0; // normalized so part_a < part_b
};

// k parts of equal size n (a power of two >= 2), edges between distinct
// parts only.
struct MccInstance {
    int k = 0;
    int n = 0;
    std::vector<McEdge> edges;

    int m() const { return static_cast<int>(edges.size()); }
    void validate() const; // throws invalid_argument
};

// names of the generated gadget vertices; all "core" vertices (everything
// except supports) come first, so the support-stripped graph is the prefix
// [0, core_count)
struct GadgetIndex {
    int log_n = 0;
    // s[i][j][l-1]: selection vertex l (1-based l in [1, 2 log n]) of part i,
    // column j in [0, m+1]
    std::vector<std::vector<std::vector<int>>> s;
    // p[i][j]: propagator of part i between columns j and j+1, j in [0, m]
    std::vector<std::vector<int>> p;
    std::vector<int> w_x, w_y, wp_x, wp_y; // per edge (wp_* are the checkers)
    std::vector<std::array<int, 3>> validators; // {part_a, part_b, vertex}, lex order
    int core_count = 0;
    std::vector<SupportRecord> supports;
};

struct ReductionOutput {
    MccInstance instance;
    Graph gprime;  // gadget graph with all tree supports
    TargetSpec targets; // propagators, checkers, validators at t = 2 log n + 4
    std::vector<int> target_order; // column-sweep order used by the filling step
    GadgetIndex index;
    int threshold = 0; // required Grundy value of the filled graph
};

ReductionOutput build_mcc_reduction(const MccInstance& inst);

// ceil(log2(k(m+1) + C(k,2) + 2m)) + 2 log2(n) + 5
int mcc_threshold(int k, int n, int m);

// Explicit column-sweep path decomposition of the support-stripped gadget
// graph: validators in every bag, flanking propagator rows per column, the
// current edge pair, a two-vertex window over the selection gadgets, then
// the checkers. Width <= C(k,2) + 2k + 3. One important bag per target,
// aligned with ReductionOutput::target_order.
struct GprimePathDecomposition {
    PathDecomposition pd;
    std::vector<int> important_bag;
};

GprimePathDecomposition build_gprime_path_decomposition(const ReductionOutput& out);

// Adds one binomial tree of order ceil(log2 |targets|) + t + 1 and grafts
// each target onto a distinct order-t slot by recursive halving, following
// the important-bag order. Also builds the explicit tree decomposition of
// width <= 4*pd.width()+5, extended over the support trees.
struct FillResult {
    Graph h;
    TreeDecomposition certificate;
    int fill_root = -1;
    int fill_order = 0;
    // for every vertex of h: the order of the filling subtree rooted there
    // (0 for vertices of the input graph)
    std::vector<int> fill_vertex_order;
};

FillResult tree_filling(const Graph& g, const TargetSpec& targets,
                        const std::vector<int>& target_order, const PathDecomposition& pd,
                        const std::vector<int>& important_bag,
                        const std::vector<SupportRecord>& supports);

struct MccArtifacts {
    ReductionOutput out;
    GprimePathDecomposition pd;
    FillResult fill;
};

MccArtifacts build_mcc_pipeline(const MccInstance& inst);

// Constructive coloring of the filled graph for a valid multicolored clique
// (clique[i] = chosen vertex of part i): achieves every target at t and the
// filling-tree root at exactly the threshold.
GrundyColoring mcc_witness_coloring(const MccArtifacts& art, const std::vector<int>& clique);

// instance text format: "mcc <k> <n> <m>" then m lines "a x b y" of 1-based
// part ids and 0-based vertex indices
MccInstance read_mcc_instance(std::istream& in);
std::string mcc_instance_to_string(const MccInstance& inst);

// ---------------------------------------------------------------- 3-sat

struct CnfClause {
    std::array<int, 3> lits{}; // signed 1-based variables, distinct, ascending by |lit|
};

struct CnfFormula {
    int var_count = 0;
    std::vector<CnfClause> clauses;
    void validate() const;
};

CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf_file(const std::string& path);
std::string cnf_to_dimacs(const CnfFormula& f);

struct SatIndex {
    std::vector<int> xp, xn;                // per variable
    std::vector<std::vector<int>> literals; // per clause, aligned with ascending vars
    std::vector<int> c, d;                  // per clause
    int u = -1;
    std::vector<SupportRecord> supports;
};

struct SatReduction {
    CnfFormula formula;
    Graph graph;
    int target = 0; // 10n + 10m + 1
    SatIndex index;
};

SatReduction build_sat_reduction(const CnfFormula& f);

// Constructive coloring for a satisfying assignment (assignment[i] = value
// of variable i+1); max color exactly 10n+10m+1.
GrundyColoring sat_witness_coloring(const SatReduction& red, const std::vector<bool>& assignment);

// 8-label clique-width expression whose evaluation reproduces
// build_sat_reduction(f).graph vertex-for-vertex; label 0 is junk and never
// joined.
CliquewidthExpression build_cw8_expression(const CnfFormula& f);

} // namespace grundy

#endif
