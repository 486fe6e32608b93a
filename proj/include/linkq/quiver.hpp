#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "linkq/coloring.hpp"

namespace linkq {

// Finite directed multigraph: weights[u][v] counts the arcs u -> v.
struct DirectedMultigraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> weights;

    static DirectedMultigraph with_vertices(int n);

    bool operator==(const DirectedMultigraph&) const = default;
};

// K_{n,k}: k arcs between every ordered pair of the n vertices, loops included.
DirectedMultigraph complete_regular(int n, int k);

// Disjoint union (g's vertices first) plus n arcs from every g-vertex to every
// h-vertex and none back.
DirectedMultigraph directed_join(const DirectedMultigraph& g, const DirectedMultigraph& h, int n);

inline constexpr int kDefaultIsoCap = 12;

// Exact weighted isomorphism by invariant pre-screen plus permutation search.
// Throws CapacityError when either graph exceeds vertex_cap vertices.
bool are_isomorphic(const DirectedMultigraph& g, const DirectedMultigraph& h,
                    int vertex_cap = kDefaultIsoCap);

// Polynomial in one formal variable u with nonnegative integer exponents and
// positive integer coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;

    void add_term(int exponent, long long coefficient = 1);

    const std::map<int, long long, std::greater<int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Descending exponents, " + " separated. Coefficient 1 is suppressed,
    // exponent 1 prints "u", exponent 0 prints the bare coefficient; the zero
    // polynomial prints "0".
    std::string str() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::map<int, long long, std::greater<int>> terms_;
};

struct PolynomialMatrix {
    int order = 0;
    std::vector<std::vector<Polynomial>> entries;

    bool operator==(const PolynomialMatrix&) const = default;
};

// A coloring quiver: vertex i of graph is vertices[i], in canonical coloring
// order, so adjacency data is reproducible bit for bit.
struct ColoringQuiver {
    DirectedMultigraph graph;
    std::vector<Coloring> vertices;
};

// Full coloring quiver of d with respect to pq: vertices are the colorings,
// with one arc alpha -> phi . alpha per pointed endomorphism phi.
ColoringQuiver build_quiver(const LinkoidDiagram& d, const PointedQuandle& pq,
                            const SearchOptions& opts = {});

// Same, over a subset of the pointed endomorphisms. Every map is re-verified;
// a non-endomorphism or duplicate raises std::invalid_argument naming it.
ColoringQuiver build_quiver(const LinkoidDiagram& d, const PointedQuandle& pq,
                            const std::vector<QuandleMap>& endo_subset,
                            const SearchOptions& opts = {});

// Sum of u^(in-degree) over the vertices; the empty graph gives 0.
Polynomial in_degree_polynomial(const DirectedMultigraph& g);

// Chooses the endomorphism subset for basepoint pair (i, j).
using EndoSubsetFamily = std::function<std::vector<QuandleMap>(int i, int j)>;

// Entry (i, j) is the in-degree polynomial of the quiver at basepoints (i, j).
// Requires exactly one open component. The family overload lets each entry use
// its own endomorphism subset; the plain overload uses the full set everywhere.
PolynomialMatrix in_degree_polynomial_matrix(const LinkoidDiagram& d, const Quandle& x,
                                             const SearchOptions& opts = {});
PolynomialMatrix in_degree_polynomial_matrix(const LinkoidDiagram& d, const Quandle& x,
                                             const EndoSubsetFamily& subset_for,
                                             const SearchOptions& opts = {});

// DOT digraph with vertices v0..v{n-1}, one edge statement per arc, in
// deterministic order. The label overload attaches coloring labels.
std::string to_dot(const DirectedMultigraph& g);
std::string to_dot(const DirectedMultigraph& g, const std::vector<Coloring>& labels);

// {"labels": [...], "vertex_count": n, "weights": [[...]]}
std::string quiver_to_json(const ColoringQuiver& q);

std::string polynomial_matrix_to_json(const PolynomialMatrix& m);
std::string polynomial_matrix_to_text(const PolynomialMatrix& m);

} // namespace linkq
