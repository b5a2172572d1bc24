#include "bcx/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bcx {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Matroid uniform(int r, int n) {
    if (r < 0 || n < 0 || r > n) {
        throw Error(ErrorCode::BadParameters, "uniform matroid needs 0 <= r <= n");
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    GroundSet ground(labels);
    std::vector<Mask> circuits;
    if (r < n) {
        for_each_combination(static_cast<std::size_t>(n), static_cast<std::size_t>(r) + 1,
                             [&](Mask m) { circuits.push_back(m); });
    }
    return Matroid::from_circuit_masks(std::move(ground), std::move(circuits));
}

Matroid graphic(const Graph& g) {
    if (g.edges.size() > Matroid::kDefaultMaxElements) {
        throw Error(ErrorCode::TooLarge, "graph exceeds the desk-scale edge cap");
    }
    std::vector<int> labels;
    labels.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count) {
            throw Error(ErrorCode::BadParameters, "edge endpoint outside the vertex range");
        }
        labels.push_back(e.label);
    }
    GroundSet ground(labels);

    // adjacency[v] = list of (other endpoint, edge position)
    std::vector<std::vector<std::pair<int, std::size_t>>> adjacency(g.vertex_count);
    std::set<std::vector<int>> cycles;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.u == e.v) {
            cycles.insert({e.label}); // self-loop: matroid loop
        } else {
            adjacency[e.u].push_back({e.v, i});
            adjacency[e.v].push_back({e.u, i});
        }
    }

    // Vertex-simple cycles by path extension: paths start at the smallest
    // vertex of the cycle, visit larger vertices only, and close back to the
    // start through a different edge. Both orientations land on the same
    // sorted label set and collapse in the dedup set.
    std::vector<bool> on_path(g.vertex_count, false);
    std::vector<int> path_labels;
    auto extend = [&](auto&& self, int start, int current, std::size_t first_edge) -> void {
        for (const auto& [next, edge_pos] : adjacency[current]) {
            if (next == start) {
                if (edge_pos != first_edge) {
                    std::vector<int> cycle = path_labels;
                    cycle.push_back(g.edges[edge_pos].label);
                    std::sort(cycle.begin(), cycle.end());
                    cycles.insert(std::move(cycle));
                }
                continue;
            }
            if (next < start || on_path[next]) continue;
            on_path[next] = true;
            path_labels.push_back(g.edges[edge_pos].label);
            self(self, start, next, first_edge);
            path_labels.pop_back();
            on_path[next] = false;
        }
    };
    for (int start = 0; start < g.vertex_count; ++start) {
        on_path[start] = true;
        for (const auto& [next, edge_pos] : adjacency[start]) {
            if (next <= start) continue;
            on_path[next] = true;
            path_labels.push_back(g.edges[edge_pos].label);
            extend(extend, start, next, edge_pos);
            path_labels.pop_back();
            on_path[next] = false;
        }
        on_path[start] = false;
    }

    std::vector<std::vector<int>> circuit_lists(cycles.begin(), cycles.end());
    return Matroid::from_circuits(std::move(ground), circuit_lists);
}

std::size_t rational_column_rank(const RationalMatrix& a, const std::vector<std::size_t>& columns) {
    const std::size_t rows = a.rows, k = columns.size();
    std::vector<BigRational> m(rows * k);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i * k + j] = a.at(i, columns[j]);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * k + col] == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < k; ++j) std::swap(m[rank * k + j], m[pivot * k + j]);
        const BigRational lead = m[rank * k + col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i * k + col] == 0) continue;
            const BigRational factor = m[i * k + col] / lead;
            for (std::size_t j = col; j < k; ++j) m[i * k + j] -= factor * m[rank * k + j];
        }
        ++rank;
    }
    return rank;
}

std::size_t prime_column_rank(const PrimeFieldMatrix& a, const std::vector<std::size_t>& columns) {
    const std::size_t rows = a.rows, k = columns.size();
    const std::int64_t p = a.p;
    std::vector<std::int64_t> m(rows * k);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i * k + j] = ((a.at(i, columns[j]) % p) + p) % p;

    auto inv_mod = [p](std::int64_t x) {
        // Extended Euclid; p is prime so any nonzero x is invertible.
        std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = x % p;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
            tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
        }
        return ((t0 % p) + p) % p;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * k + col] == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < k; ++j) std::swap(m[rank * k + j], m[pivot * k + j]);
        const std::int64_t lead_inv = inv_mod(m[rank * k + col]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i * k + col] == 0) continue;
            const std::int64_t factor = m[i * k + col] * lead_inv % p;
            for (std::size_t j = col; j < k; ++j)
                m[i * k + j] = ((m[i * k + j] - factor * m[rank * k + j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

namespace {

// Shared circuit search for vector matroids: candidate subsets by
// increasing size, pruning supersets of circuits already found. A k-subset
// with all (k-1)-subsets independent is a circuit iff its rank is k-1.
template <typename RankFn>
Matroid linear_from_rank(std::size_t cols, std::size_t full_rank_cap, RankFn&& column_rank) {
    if (cols > Matroid::kDefaultMaxElements) {
        throw Error(ErrorCode::TooLarge, "matrix exceeds the desk-scale column cap");
    }
    std::vector<int> labels(cols);
    for (std::size_t i = 0; i < cols; ++i) labels[i] = static_cast<int>(i) + 1;
    std::vector<Mask> circuits;
    for (std::size_t k = 1; k <= std::min(cols, full_rank_cap + 1); ++k) {
        for_each_combination(cols, k, [&](Mask x) {
            for (Mask found : circuits) {
                if (subset_of(found, x)) return;
            }
            std::vector<std::size_t> columns;
            for_each_bit(x, [&](std::size_t i) { columns.push_back(i); });
            if (column_rank(columns) < k) circuits.push_back(x);
        });
    }
    return Matroid::from_circuit_masks(GroundSet(labels), std::move(circuits));
}

} // namespace

Matroid linear_rational(const RationalMatrix& a) {
    return linear_from_rank(a.cols, a.rows,
                            [&](const std::vector<std::size_t>& cols) { return rational_column_rank(a, cols); });
}

Matroid linear_prime(const PrimeFieldMatrix& a) {
    if (!is_prime(a.p)) throw Error(ErrorCode::BadParameters, "modulus is not prime");
    if (a.p >= (std::int64_t{1} << 31)) throw Error(ErrorCode::BadParameters, "modulus too large");
    return linear_from_rank(a.cols, a.rows,
                            [&](const std::vector<std::size_t>& cols) { return prime_column_rank(a, cols); });
}

Graph triangle() {
    Graph g;
    g.vertex_count = 3;
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 0, 3);
    return g;
}

Graph wheel(int n) {
    if (n < 3) throw Error(ErrorCode::BadParameters, "wheel needs at least 3 rim vertices");
    Graph g;
    g.vertex_count = n + 1; // hub is vertex 0
    for (int i = 0; i < n; ++i) g.add_edge(1 + i, 1 + (i + 1) % n, 1 + i);
    for (int i = 0; i < n; ++i) g.add_edge(0, 1 + i, n + 1 + i);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw Error(ErrorCode::BadParameters, "complete graph needs at least one vertex");
    Graph g;
    g.vertex_count = n;
    int label = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, label++);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorCode::BadParameters, "bipartite parts must be nonempty");
    Graph g;
    g.vertex_count = a + b;
    int label = 1;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j, label++);
    return g;
}

Graph k23_graph() {
    // Vertices: 0,1 = degree-3 pair; 2,3,4 = the other side (3 = middle).
    // The two spokes through the middle vertex are labeled 1 and 2 and form
    // a series class; the rim edges are 3..6.
    Graph g;
    g.vertex_count = 5;
    g.add_edge(0, 3, 1);
    g.add_edge(1, 3, 2);
    g.add_edge(0, 2, 3);
    g.add_edge(0, 4, 4);
    g.add_edge(1, 4, 5);
    g.add_edge(1, 2, 6);
    return g;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>; // sorted, u < v

int vertex_count_of(const EdgeList& edges) {
    int n = 0;
    for (const auto& [u, v] : edges) n = std::max(n, std::max(u, v) + 1);
    return n;
}

// Iterated color refinement: start from degrees, then fold in sorted
// neighbor colors until stable.
std::vector<int> refined_colors(const EdgeList& edges, int n) {
    std::vector<int> color(n, 0);
    {
        std::vector<int> degree(n, 0);
        for (const auto& [u, v] : edges) {
            ++degree[u];
            ++degree[v];
        }
        color = degree;
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> signature(n);
        for (int i = 0; i < n; ++i) signature[i].first = color[i];
        for (const auto& [u, v] : edges) {
            signature[u].second.push_back(color[v]);
            signature[v].second.push_back(color[u]);
        }
        for (int i = 0; i < n; ++i) std::sort(signature[i].second.begin(), signature[i].second.end());
        // Class ids are handed out in sorted-signature order so that the
        // numbering is label-independent.
        std::map<std::pair<int, std::vector<int>>, int> palette;
        for (int i = 0; i < n; ++i) palette.try_emplace(signature[i], 0);
        int next_id = 0;
        for (auto& entry : palette) entry.second = next_id++;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = palette[signature[i]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

EdgeList apply_permutation(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out;
    out.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        int a = perm[u], b = perm[v];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList canonical_edges(const EdgeList& edges) {
    const int n = vertex_count_of(edges);
    std::vector<int> color = refined_colors(edges, n);

    // Vertices grouped by color; only color-preserving relabelings can be
    // isomorphisms, so the search walks the product of within-class
    // permutations.
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[color[i]].push_back(i);

    std::vector<std::vector<int>> groups;
    for (auto& [c, members] : classes) groups.push_back(members);

    EdgeList best;
    std::vector<int> perm(n, -1);
    auto assign = [&](auto&& self, std::size_t group_index) -> void {
        if (group_index == groups.size()) {
            EdgeList candidate = apply_permutation(edges, perm);
            if (best.empty() || candidate < best) best = candidate;
            return;
        }
        // New indices are handed out class by class so that class blocks
        // occupy contiguous ranges; the base offset for this group:
        int base = 0;
        for (std::size_t gi = 0; gi < group_index; ++gi) base += static_cast<int>(groups[gi].size());
        std::vector<int> arrangement = groups[group_index];
        std::sort(arrangement.begin(), arrangement.end());
        do {
            for (std::size_t pos = 0; pos < arrangement.size(); ++pos)
                perm[arrangement[pos]] = base + static_cast<int>(pos);
            self(self, group_index + 1);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    };
    assign(assign, 0);
    return best;
}

} // namespace

std::vector<std::pair<int, int>> canonical_graph_encoding(const Graph& g) {
    EdgeList edges;
    for (const auto& e : g.edges) {
        if (e.u == e.v) throw Error(ErrorCode::BadParameters, "canonical encoding expects loopless graphs");
        edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges.begin(), edges.end());
    return canonical_edges(edges);
}

std::vector<Graph> family_graphs(int max_edges) {
    if (max_edges < 0 || max_edges > static_cast<int>(Matroid::kDefaultMaxElements)) {
        throw Error(ErrorCode::BadParameters, "edge bound outside the desk-scale range");
    }
    // Breadth-first growth: every connected loopless multigraph arises from
    // a smaller one by adding a parallel/chord edge or a pendant vertex.
    std::set<EdgeList> seen;
    std::vector<EdgeList> frontier;
    if (max_edges >= 1) {
        EdgeList single{{0, 1}};
        seen.insert(single);
        frontier.push_back(single);
    }
    std::vector<EdgeList> all(frontier);
    for (int e = 1; e < max_edges; ++e) {
        std::vector<EdgeList> next;
        for (const EdgeList& g : frontier) {
            const int n = vertex_count_of(g);
            std::vector<EdgeList> candidates;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    EdgeList grown = g;
                    grown.push_back({u, v});
                    std::sort(grown.begin(), grown.end());
                    candidates.push_back(std::move(grown));
                }
                EdgeList pendant = g;
                pendant.push_back({u, n});
                std::sort(pendant.begin(), pendant.end());
                candidates.push_back(std::move(pendant));
            }
            for (EdgeList& c : candidates) {
                EdgeList canon = canonical_edges(c);
                if (seen.insert(canon).second) next.push_back(std::move(canon));
            }
        }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    std::sort(all.begin(), all.end(), [](const EdgeList& a, const EdgeList& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Graph> out;
    out.reserve(all.size());
    for (const EdgeList& edges : all) {
        Graph g;
        g.vertex_count = vertex_count_of(edges);
        int label = 1;
        for (const auto& [u, v] : edges) g.add_edge(u, v, label++);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace bcx
