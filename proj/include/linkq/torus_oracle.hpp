#pragma once

#include <optional>
#include <vector>

#include "linkq/coloring.hpp"
#include "linkq/quiver.hpp"

// Closed-form predictions for the T(p,2) torus linkoid family colored by
// dihedral quandles, used to cross-check the general machinery.
namespace linkq::oracle {

// Number of colorings of the p-crossing torus linkoid by (Z_n, y1, y2):
// gcd(p, n) when y1 == y2 (mod n), otherwise 0.
long long predicted_count(int p, int n, int y1, int y2);

// The gcd(p, n) colorings for basepoint pair (y, y), one per k in
// [0, gcd(p, n)): arc i - 1 gets (y + ((i - 1) mod p) * k * (n / gcd)) mod n.
std::vector<Coloring> predicted_colorings(int p, int n, int y);

// The n pointed endomorphisms of (Z_n, y, y): map k sends y + i to
// (i * k - (i - 1) * y) mod n.
std::vector<std::vector<int>> predicted_endos(int n, int y);

enum class ShapeKind {
    k1n,           // gcd(p, n) == 1: single vertex with n loops
    join_prime_c,  // gcd(p, n) an odd prime or 2: K_{c-1,d} joined into K_{1,n} by d arcs
    unspecified,   // composite gcd: no closed form
};

struct QuiverShape {
    ShapeKind kind = ShapeKind::unspecified;
    int n = 0;
    int c = 0;
    int d = 0;

    bool operator==(const QuiverShape&) const = default;
};

QuiverShape predicted_quiver_shape(int p, int n);

// Concrete graph for a predicted shape; nullopt when unspecified.
std::optional<DirectedMultigraph> realize_shape(const QuiverShape& shape);

// In-degree polynomial of the quiver at equal basepoints: u^n when the gcd is
// 1, u^(n + (c-1)d) + (c-1) u^((c-1)d) when the gcd c is prime, nullopt
// otherwise.
std::optional<Polynomial> predicted_indegree_polynomial(int p, int n);

} // namespace linkq::oracle
