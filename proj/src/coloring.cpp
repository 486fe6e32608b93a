#include "linkq/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "linkq/errors.hpp"

namespace linkq {

namespace {

struct SearchState {
    const std::vector<Relation>& relations;
    const Quandle& quandle;
    std::vector<int> color; // -1 = unassigned
    long long nodes = 0;
    long long budget = 0;
};

// Applies every relation with two assigned arcs until nothing changes.
// Returns false on contradiction.
bool propagate(SearchState& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Relation& r : s.relations) {
            const int a = s.color[r.a];
            const int b = s.color[r.b];
            const int c = s.color[r.c];
            if (a >= 0 && b >= 0) {
                const int v = s.quandle.op(a, b);
                if (c < 0) {
                    s.color[r.c] = v;
                    changed = true;
                } else if (c != v) {
                    return false;
                }
            } else if (b >= 0 && c >= 0) {
                s.color[r.a] = s.quandle.left_divide(c, b);
                changed = true;
            }
        }
    }
    return true;
}

void search(SearchState& s, std::vector<Coloring>& out) {
    if (!propagate(s)) return;
    int arc = -1;
    for (size_t i = 0; i < s.color.size(); ++i) {
        if (s.color[i] < 0) {
            arc = static_cast<int>(i);
            break;
        }
    }
    if (arc < 0) {
        out.push_back(s.color);
        return;
    }
    for (int v = 0; v < s.quandle.order(); ++v) {
        if (++s.nodes > s.budget) {
            throw CapacityError("coloring search exceeded node budget of " +
                                std::to_string(s.budget));
        }
        std::vector<int> snapshot = s.color;
        s.color[arc] = v;
        search(s, out);
        s.color = std::move(snapshot);
    }
}

} // namespace

std::vector<Coloring> enumerate_colorings(const LinkoidDiagram& d, const PointedQuandle& pq,
                                          const SearchOptions& opts) {
    validate_diagram(d);
    if (pq.base.order() == 0) throw std::invalid_argument("quandle order 0");
    const size_t needed = 2 * d.open_components.size();
    if (pq.basepoints.size() != needed) {
        throw std::invalid_argument("basepoint arity mismatch: diagram needs " +
                                    std::to_string(needed) + " basepoints, got " +
                                    std::to_string(pq.basepoints.size()));
    }

    const std::vector<Relation> relations = crossing_relations(d);
    SearchState state{relations, pq.base, std::vector<int>(d.arc_count, -1), 0, opts.node_budget};
    for (size_t i = 0; i < d.open_components.size(); ++i) {
        for (auto [arc, value] : {std::pair{d.open_components[i].leg, pq.basepoints[2 * i]},
                                  std::pair{d.open_components[i].head, pq.basepoints[2 * i + 1]}}) {
            if (state.color[arc] >= 0 && state.color[arc] != value) return {};
            state.color[arc] = value;
        }
    }

    std::vector<Coloring> out;
    search(state, out);
    return out;
}

long long counting_invariant(const LinkoidDiagram& d, const PointedQuandle& pq,
                             const SearchOptions& opts) {
    return static_cast<long long>(enumerate_colorings(d, pq, opts).size());
}

CountingMatrix counting_matrix(const LinkoidDiagram& d, const Quandle& x,
                               const SearchOptions& opts) {
    if (d.open_components.size() != 1) {
        throw std::invalid_argument("counting matrix requires exactly one open component, got " +
                                    std::to_string(d.open_components.size()));
    }
    const int k = x.order();
    CountingMatrix m{k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0))};
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            m.entries[i][j] = counting_invariant(d, PointedQuandle(x, {i, j}), opts);
        }
    }
    return m;
}

std::string colorings_to_json(const std::vector<Coloring>& colorings) {
    return nlohmann::json(colorings).dump();
}

std::string counting_matrix_to_json(const CountingMatrix& m) {
    return nlohmann::json{{"order", m.order}, {"entries", m.entries}}.dump();
}

std::string counting_matrix_to_text(const CountingMatrix& m) {
    std::vector<size_t> width(m.order, 0);
    for (int j = 0; j < m.order; ++j) {
        for (int i = 0; i < m.order; ++i) {
            width[j] = std::max(width[j], std::to_string(m.entries[i][j]).size());
        }
    }
    std::string out;
    for (int i = 0; i < m.order; ++i) {
        for (int j = 0; j < m.order; ++j) {
            std::string cell = std::to_string(m.entries[i][j]);
            if (j > 0) out += ' ';
            out += std::string(width[j] - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

} // namespace linkq
