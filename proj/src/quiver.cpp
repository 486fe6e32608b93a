#include "linkq/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "json.hpp"
#include "linkq/errors.hpp"

namespace linkq {

DirectedMultigraph DirectedMultigraph::with_vertices(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    DirectedMultigraph g;
    g.vertex_count = n;
    g.weights.assign(n, std::vector<int>(n, 0));
    return g;
}

DirectedMultigraph complete_regular(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("complete_regular: arguments must be nonnegative");
    DirectedMultigraph g = DirectedMultigraph::with_vertices(n);
    for (auto& row : g.weights) std::fill(row.begin(), row.end(), k);
    return g;
}

DirectedMultigraph directed_join(const DirectedMultigraph& g, const DirectedMultigraph& h, int n) {
    if (n < 0) throw std::invalid_argument("directed_join: arc count must be nonnegative");
    DirectedMultigraph out = DirectedMultigraph::with_vertices(g.vertex_count + h.vertex_count);
    for (int u = 0; u < g.vertex_count; ++u) {
        for (int v = 0; v < g.vertex_count; ++v) out.weights[u][v] = g.weights[u][v];
        for (int v = 0; v < h.vertex_count; ++v) out.weights[u][g.vertex_count + v] = n;
    }
    for (int u = 0; u < h.vertex_count; ++u) {
        for (int v = 0; v < h.vertex_count; ++v) {
            out.weights[g.vertex_count + u][g.vertex_count + v] = h.weights[u][v];
        }
    }
    return out;
}

namespace {

// Loop weight, degree sums, and sorted row/column multisets; preserved by any
// isomorphism, so mismatches prune the permutation search.
using VertexSignature = std::tuple<int, long long, long long, std::vector<int>, std::vector<int>>;

VertexSignature signature(const DirectedMultigraph& g, int v) {
    long long out_deg = 0;
    long long in_deg = 0;
    std::vector<int> row = g.weights[v];
    std::vector<int> col(g.vertex_count);
    for (int u = 0; u < g.vertex_count; ++u) {
        out_deg += g.weights[v][u];
        in_deg += g.weights[u][v];
        col[u] = g.weights[u][v];
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    return {g.weights[v][v], out_deg, in_deg, std::move(row), std::move(col)};
}

bool extend_mapping(const DirectedMultigraph& g, const DirectedMultigraph& h,
                    const std::vector<VertexSignature>& sig_g,
                    const std::vector<VertexSignature>& sig_h, std::vector<int>& image,
                    std::vector<bool>& used, int v) {
    if (v == g.vertex_count) return true;
    for (int w = 0; w < h.vertex_count; ++w) {
        if (used[w] || sig_g[v] != sig_h[w]) continue;
        bool ok = true;
        for (int u = 0; u <= v && ok; ++u) {
            if (image[u] < 0) continue;
            ok = g.weights[v][u] == h.weights[w][image[u]] &&
                 g.weights[u][v] == h.weights[image[u]][w];
        }
        if (!ok) continue;
        image[v] = w;
        used[w] = true;
        if (extend_mapping(g, h, sig_g, sig_h, image, used, v + 1)) return true;
        image[v] = -1;
        used[w] = false;
    }
    return false;
}

} // namespace

bool are_isomorphic(const DirectedMultigraph& g, const DirectedMultigraph& h, int vertex_cap) {
    if (g.vertex_count > vertex_cap || h.vertex_count > vertex_cap) {
        throw CapacityError("isomorphism test: graph with " +
                            std::to_string(std::max(g.vertex_count, h.vertex_count)) +
                            " vertices exceeds cap " + std::to_string(vertex_cap));
    }
    if (g.vertex_count != h.vertex_count) return false;
    std::vector<VertexSignature> sig_g;
    std::vector<VertexSignature> sig_h;
    for (int v = 0; v < g.vertex_count; ++v) {
        sig_g.push_back(signature(g, v));
        sig_h.push_back(signature(h, v));
    }
    auto sorted_g = sig_g;
    auto sorted_h = sig_h;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return false;

    std::vector<int> image(g.vertex_count, -1);
    std::vector<bool> used(g.vertex_count, false);
    return extend_mapping(g, h, sig_g, sig_h, image, used, 0);
}

void Polynomial::add_term(int exponent, long long coefficient) {
    if (exponent < 0) throw std::invalid_argument("exponent must be nonnegative");
    if (coefficient < 1) throw std::invalid_argument("coefficient must be positive");
    terms_[exponent] += coefficient;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exponent, coefficient] : terms_) {
        if (!out.empty()) out += " + ";
        if (exponent == 0) {
            out += std::to_string(coefficient);
            continue;
        }
        if (coefficient != 1) out += std::to_string(coefficient);
        out += exponent == 1 ? "u" : "u^" + std::to_string(exponent);
    }
    return out;
}

Polynomial in_degree_polynomial(const DirectedMultigraph& g) {
    Polynomial p;
    for (int v = 0; v < g.vertex_count; ++v) {
        int in_deg = 0;
        for (int u = 0; u < g.vertex_count; ++u) in_deg += g.weights[u][v];
        p.add_term(in_deg);
    }
    return p;
}

namespace {

std::string images_text(const std::vector<int>& images) {
    std::string s = "[";
    for (size_t i = 0; i < images.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(images[i]);
    }
    return s + "]";
}

ColoringQuiver quiver_from_endos(const LinkoidDiagram& d, const PointedQuandle& pq,
                                 const std::vector<QuandleMap>& endos,
                                 const SearchOptions& opts) {
    ColoringQuiver q;
    q.vertices = enumerate_colorings(d, pq, opts);
    q.graph = DirectedMultigraph::with_vertices(static_cast<int>(q.vertices.size()));
    std::map<Coloring, int> index;
    for (size_t i = 0; i < q.vertices.size(); ++i) index[q.vertices[i]] = static_cast<int>(i);
    for (size_t a = 0; a < q.vertices.size(); ++a) {
        for (const QuandleMap& phi : endos) {
            Coloring image;
            image.reserve(q.vertices[a].size());
            for (int color : q.vertices[a]) image.push_back(phi.images[color]);
            const auto it = index.find(image);
            if (it == index.end()) {
                throw std::logic_error("endomorphism image of a coloring is not a coloring");
            }
            ++q.graph.weights[a][it->second];
        }
    }
    return q;
}

} // namespace

ColoringQuiver build_quiver(const LinkoidDiagram& d, const PointedQuandle& pq,
                            const SearchOptions& opts) {
    const auto endos = enumerate_pointed_homs(pq, pq, pq.base.order());
    return quiver_from_endos(d, pq, endos, opts);
}

ColoringQuiver build_quiver(const LinkoidDiagram& d, const PointedQuandle& pq,
                            const std::vector<QuandleMap>& endo_subset,
                            const SearchOptions& opts) {
    std::set<std::vector<int>> seen;
    for (const QuandleMap& phi : endo_subset) {
        if (phi.source_order != pq.base.order() || phi.target_order != pq.base.order() ||
            !is_pointed_homomorphism(pq, pq, phi.images)) {
            throw std::invalid_argument("endomorphism subset entry " + images_text(phi.images) +
                                        " is not a pointed endomorphism");
        }
        if (!seen.insert(phi.images).second) {
            throw std::invalid_argument("duplicate endomorphism subset entry " +
                                        images_text(phi.images));
        }
    }
    return quiver_from_endos(d, pq, endo_subset, opts);
}

namespace {

PolynomialMatrix polynomial_matrix_impl(const LinkoidDiagram& d, const Quandle& x,
                                        const EndoSubsetFamily* subset_for,
                                        const SearchOptions& opts) {
    if (d.open_components.size() != 1) {
        throw std::invalid_argument(
            "in-degree polynomial matrix requires exactly one open component, got " +
            std::to_string(d.open_components.size()));
    }
    const int k = x.order();
    PolynomialMatrix m{k, std::vector<std::vector<Polynomial>>(k, std::vector<Polynomial>(k))};
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const PointedQuandle pq(x, {i, j});
            const ColoringQuiver q = subset_for ? build_quiver(d, pq, (*subset_for)(i, j), opts)
                                                : build_quiver(d, pq, opts);
            m.entries[i][j] = in_degree_polynomial(q.graph);
        }
    }
    return m;
}

} // namespace

PolynomialMatrix in_degree_polynomial_matrix(const LinkoidDiagram& d, const Quandle& x,
                                             const SearchOptions& opts) {
    return polynomial_matrix_impl(d, x, nullptr, opts);
}

PolynomialMatrix in_degree_polynomial_matrix(const LinkoidDiagram& d, const Quandle& x,
                                             const EndoSubsetFamily& subset_for,
                                             const SearchOptions& opts) {
    return polynomial_matrix_impl(d, x, &subset_for, opts);
}

namespace {

std::string dot_impl(const DirectedMultigraph& g, const std::vector<Coloring>* labels) {
    std::string out = "digraph {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        out += "  v" + std::to_string(v);
        if (labels) {
            out += " [label=\"(";
            const Coloring& c = (*labels)[v];
            for (size_t i = 0; i < c.size(); ++i) {
                if (i > 0) out += ",";
                out += std::to_string(c[i]);
            }
            out += ")\"]";
        }
        out += ";\n";
    }
    for (int u = 0; u < g.vertex_count; ++u) {
        for (int v = 0; v < g.vertex_count; ++v) {
            for (int i = 0; i < g.weights[u][v]; ++i) {
                out += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + ";\n";
            }
        }
    }
    return out + "}\n";
}

} // namespace

std::string to_dot(const DirectedMultigraph& g) { return dot_impl(g, nullptr); }

std::string to_dot(const DirectedMultigraph& g, const std::vector<Coloring>& labels) {
    if (static_cast<int>(labels.size()) != g.vertex_count) {
        throw std::invalid_argument("label count does not match vertex count");
    }
    return dot_impl(g, &labels);
}

std::string quiver_to_json(const ColoringQuiver& q) {
    return nlohmann::json{{"vertex_count", q.graph.vertex_count},
                          {"weights", q.graph.weights},
                          {"labels", q.vertices}}
        .dump();
}

std::string polynomial_matrix_to_json(const PolynomialMatrix& m) {
    std::vector<std::vector<std::string>> entries(m.order);
    for (int i = 0; i < m.order; ++i) {
        for (int j = 0; j < m.order; ++j) entries[i].push_back(m.entries[i][j].str());
    }
    return nlohmann::json{{"order", m.order}, {"entries", entries}}.dump();
}

std::string polynomial_matrix_to_text(const PolynomialMatrix& m) {
    std::vector<size_t> width(m.order, 0);
    for (int j = 0; j < m.order; ++j) {
        for (int i = 0; i < m.order; ++i) {
            width[j] = std::max(width[j], m.entries[i][j].str().size());
        }
    }
    std::string out;
    for (int i = 0; i < m.order; ++i) {
        for (int j = 0; j < m.order; ++j) {
            const std::string cell = m.entries[i][j].str();
            if (j > 0) out += "  ";
            out += std::string(width[j] - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

} // namespace linkq
