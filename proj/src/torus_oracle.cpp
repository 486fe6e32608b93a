#include "linkq/torus_oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace linkq::oracle {

namespace {

void check_params(int p, int n) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (n < 1) throw std::invalid_argument("n must be positive");
}

void check_residue(int y, int n) {
    if (y < 0 || y >= n) {
        throw std::invalid_argument("basepoint " + std::to_string(y) + " out of range mod " +
                                    std::to_string(n));
    }
}

int mod(long long value, int n) { return static_cast<int>(((value % n) + n) % n); }

bool is_prime(int c) {
    if (c < 2) return false;
    for (int f = 2; f * f <= c; ++f) {
        if (c % f == 0) return false;
    }
    return true;
}

} // namespace

long long predicted_count(int p, int n, int y1, int y2) {
    check_params(p, n);
    check_residue(y1, n);
    check_residue(y2, n);
    return y1 == y2 ? std::gcd(p, n) : 0;
}

std::vector<Coloring> predicted_colorings(int p, int n, int y) {
    check_params(p, n);
    check_residue(y, n);
    const int c = std::gcd(p, n);
    const int d = n / c;
    std::vector<Coloring> out;
    for (int k = 0; k < c; ++k) {
        Coloring alpha(p + 1);
        for (int i = 1; i <= p + 1; ++i) {
            alpha[i - 1] = mod(y + static_cast<long long>((i - 1) % p) * k * d, n);
        }
        out.push_back(std::move(alpha));
    }
    return out;
}

std::vector<std::vector<int>> predicted_endos(int n, int y) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_residue(y, n);
    std::vector<std::vector<int>> out;
    for (int k = 0; k < n; ++k) {
        std::vector<int> phi(n);
        for (int i = 0; i < n; ++i) {
            phi[(y + i) % n] = mod(static_cast<long long>(i) * k - static_cast<long long>(i - 1) * y, n);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

QuiverShape predicted_quiver_shape(int p, int n) {
    check_params(p, n);
    const int c = std::gcd(p, n);
    const int d = n / c;
    if (c == 1) return {ShapeKind::k1n, n, c, d};
    if (is_prime(c)) return {ShapeKind::join_prime_c, n, c, d};
    return {ShapeKind::unspecified, n, c, d};
}

std::optional<DirectedMultigraph> realize_shape(const QuiverShape& shape) {
    switch (shape.kind) {
    case ShapeKind::k1n:
        return complete_regular(1, shape.n);
    case ShapeKind::join_prime_c:
        return directed_join(complete_regular(shape.c - 1, shape.d), complete_regular(1, shape.n),
                             shape.d);
    case ShapeKind::unspecified:
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Polynomial> predicted_indegree_polynomial(int p, int n) {
    const QuiverShape shape = predicted_quiver_shape(p, n);
    Polynomial poly;
    switch (shape.kind) {
    case ShapeKind::k1n:
        poly.add_term(n);
        return poly;
    case ShapeKind::join_prime_c:
        poly.add_term(n + (shape.c - 1) * shape.d);
        poly.add_term((shape.c - 1) * shape.d, shape.c - 1);
        return poly;
    case ShapeKind::unspecified:
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace linkq::oracle
