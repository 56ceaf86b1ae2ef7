#include "mugen/twosat.hpp"

#include <algorithm>
#include <limits>

namespace mugen {

ImplicationGraph build_implication_graph(const CnfFormula& f)
{
    ImplicationGraph g;
    g.num_vars = f.num_vars();
    g.adjacency.assign(2 * std::size_t{g.num_vars}, {});
    for (std::size_t ci = 0; ci < f.num_clauses(); ++ci) {
        const Clause& c = f.clauses()[ci];
        if (c.width() != 2)
            throw NotTwoSat("clause " + std::to_string(ci) + " has width " +
                            std::to_string(c.width()) + ", expected 2");
        Literal z1 = c.literals()[0];
        Literal z2 = c.literals()[1];
        g.adjacency[ImplicationGraph::node_of(negate(z1))].push_back(
            ImplicationGraph::node_of(z2));
        g.adjacency[ImplicationGraph::node_of(negate(z2))].push_back(
            ImplicationGraph::node_of(z1));
        g.num_edges += 2;
    }
    return g;
}

SccDecomposition tarjan_scc(const std::vector<std::vector<std::uint32_t>>& adjacency)
{
    constexpr std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();
    const std::uint32_t n = static_cast<std::uint32_t>(adjacency.size());

    std::vector<std::uint32_t> index(n, kUndef);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<std::uint32_t> component(n, kUndef);
    std::vector<std::uint32_t> node_stack;
    std::vector<char> on_stack(n, 0);
    // Explicit DFS frames (node, position in its adjacency list) instead of
    // recursion: implication graphs of long chain formulas get deep.
    std::vector<std::pair<std::uint32_t, std::size_t>> frames;

    std::uint32_t next_index = 0;
    std::uint32_t next_component = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUndef)
            continue;
        frames.emplace_back(root, 0);
        index[root] = lowlink[root] = next_index++;
        node_stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            const std::uint32_t u = frames.back().first;
            if (frames.back().second < adjacency[u].size()) {
                const std::uint32_t v = adjacency[u][frames.back().second++];
                if (index[v] == kUndef) {
                    index[v] = lowlink[v] = next_index++;
                    node_stack.push_back(v);
                    on_stack[v] = 1;
                    frames.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    lowlink[u] = std::min(lowlink[u], index[v]);
                }
                continue;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
            }
            if (lowlink[u] == index[u]) {
                while (true) {
                    const std::uint32_t w = node_stack.back();
                    node_stack.pop_back();
                    on_stack[w] = 0;
                    component[w] = next_component;
                    if (w == u)
                        break;
                }
                ++next_component;
            }
        }
    }
    return SccDecomposition{std::move(component), next_component};
}

SccDecomposition tarjan_scc(const ImplicationGraph& g)
{
    return tarjan_scc(g.adjacency);
}

SatResult twosat_solve(const CnfFormula& f)
{
    const ImplicationGraph g = build_implication_graph(f);
    const SccDecomposition scc = tarjan_scc(g);

    for (unsigned v = 1; v <= f.num_vars(); ++v) {
        const std::uint32_t p = ImplicationGraph::node_of(pos(v));
        if (scc.component[p] == scc.component[p + 1])
            return SatResult::unsat(v);
    }

    Assignment a(f.num_vars());
    for (unsigned v = 1; v <= f.num_vars(); ++v) {
        const std::uint32_t p = ImplicationGraph::node_of(pos(v));
        a.set(v, scc.component[p] < scc.component[p + 1]);
    }
    return SatResult::sat(std::move(a));
}

} // namespace mugen
