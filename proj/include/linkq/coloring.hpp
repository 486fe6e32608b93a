#pragma once

#include <string>
#include <vector>

#include "linkq/linkoid.hpp"
#include "linkq/quandle.hpp"

namespace linkq {

// One quandle element per arc.
using Coloring = std::vector<int>;

struct SearchOptions {
    // Branch nodes tried before the search throws CapacityError.
    long long node_budget = 10'000'000;
};

// All arc colorings of d by pq.base that satisfy every crossing relation and
// pin leg/head of open component i to basepoints 2i and 2i+1. Sorted
// lexicographically by image array. The search seeds the basepointed arcs,
// propagates relations whose third arc is forced, branches on the lowest
// unassigned arc in ascending element order, and backtracks on contradiction.
std::vector<Coloring> enumerate_colorings(const LinkoidDiagram& d, const PointedQuandle& pq,
                                          const SearchOptions& opts = {});

long long counting_invariant(const LinkoidDiagram& d, const PointedQuandle& pq,
                             const SearchOptions& opts = {});

struct CountingMatrix {
    int order = 0;
    std::vector<std::vector<long long>> entries; // entries[i][j]: count at basepoints (i, j)

    bool operator==(const CountingMatrix&) const = default;
};

// Requires exactly one open component.
CountingMatrix counting_matrix(const LinkoidDiagram& d, const Quandle& x,
                               const SearchOptions& opts = {});

// JSON array of integer arrays, canonical order.
std::string colorings_to_json(const std::vector<Coloring>& colorings);

std::string counting_matrix_to_json(const CountingMatrix& m);
std::string counting_matrix_to_text(const CountingMatrix& m);

} // namespace linkq
