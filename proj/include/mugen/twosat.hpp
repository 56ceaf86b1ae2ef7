#pragma once

#include <cstdint>
#include <vector>

#include "mugen/solve.hpp"

namespace mugen {

// Digraph on the 2n literal nodes of a 2-SAT formula. Each clause z1 v z2
// contributes the edges ~z1 -> z2 and ~z2 -> z1, so the edge set is
// skew-symmetric: u -> v exists iff ~v -> ~u does.
struct ImplicationGraph {
    unsigned num_vars = 0;
    // adjacency[node] lists successor nodes; parallel edges are kept.
    std::vector<std::vector<std::uint32_t>> adjacency;
    std::size_t num_edges = 0;

    static std::uint32_t node_of(Literal lit)
    {
        return 2 * (lit.variable - 1) + (lit.negated ? 1u : 0u);
    }
    static Literal literal_of(std::uint32_t node)
    {
        return Literal{node / 2 + 1, (node & 1u) != 0};
    }
    static std::uint32_t negation_of(std::uint32_t node) { return node ^ 1u; }

    std::size_t num_nodes() const { return adjacency.size(); }
};

// Strongly connected components, ids assigned in completion order, i.e. the
// component sequence 0, 1, 2, ... is a reverse topological order of the
// condensation: every edge u -> v has component(u) >= component(v).
struct SccDecomposition {
    std::vector<std::uint32_t> component; // per node
    std::uint32_t num_components = 0;
};

// Throws NotTwoSat if any clause has width != 2.
ImplicationGraph build_implication_graph(const CnfFormula& f);

// Iterative Tarjan, linear in nodes + edges.
SccDecomposition tarjan_scc(const std::vector<std::vector<std::uint32_t>>& adjacency);
SccDecomposition tarjan_scc(const ImplicationGraph& g);

// Unsatisfiable iff some component contains a variable together with its
// negation (the reported conflict_variable is the lowest such index).
// Otherwise satisfiable, with the witness read off the component order:
// a variable is true iff its positive literal's component precedes its
// negative literal's in the reverse topological numbering.
// Throws NotTwoSat if any clause has width != 2.
SatResult twosat_solve(const CnfFormula& f);

} // namespace mugen
