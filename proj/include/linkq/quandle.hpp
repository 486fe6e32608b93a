#pragma once

#include <string>
#include <vector>

namespace linkq {

// Operation table of a finite binary structure; table[x][y] is x |> y.
using Table = std::vector<std::vector<int>>;

// One failed quandle axiom together with the elements that witness the failure.
//   axiom 1 (idempotence):            witness {x}
//   axiom 2 (right translations are bijections): witness {y}
//   axiom 3 (right self-distributivity):         witness {x, y, z}
struct AxiomViolation {
    int axiom = 0;
    std::vector<int> witness;

    bool operator==(const AxiomViolation&) const = default;
};

struct ValidationReport {
    bool valid = false;
    std::vector<AxiomViolation> violations;
    // Malformed input (non-square table, out-of-range entry) is reported here,
    // separately from axiom violations; axioms are not evaluated in that case.
    std::vector<std::string> structural_errors;

    bool well_formed() const { return structural_errors.empty(); }
};

ValidationReport validate_quandle(const Table& table);

// A finite quandle on elements {0, ..., k-1}. Immutable once constructed.
class Quandle {
public:
    // Throws std::invalid_argument unless validate_quandle accepts the table.
    static Quandle from_table(Table table);

    int order() const { return static_cast<int>(table_.size()); }

    // x |> y
    int op(int x, int y) const { return table_[x][y]; }

    // The unique x with x |> y = z (inverse of the right translation by y).
    int left_divide(int z, int y) const { return left_div_[z][y]; }

    const Table& table() const { return table_; }

    bool operator==(const Quandle&) const = default;

private:
    explicit Quandle(Table table);

    Table table_;
    Table left_div_; // left_div_[z][y] = x with x |> y = z
};

// Dihedral quandle on Z_n: x |> y = 2y - x (mod n).
Quandle dihedral(int n);

// Trivial quandle: x |> y = x.
Quandle trivial_quandle(int n);

// A quandle with an ordered tuple of basepoints.
struct PointedQuandle {
    Quandle base;
    std::vector<int> basepoints;

    // Range-checks every basepoint against the quandle order.
    PointedQuandle(Quandle base, std::vector<int> basepoints);

    bool operator==(const PointedQuandle&) const = default;
};

// A function between quandles recorded by its image array.
struct QuandleMap {
    int source_order = 0;
    int target_order = 0;
    std::vector<int> images; // images[x] is the image of source element x

    bool operator==(const QuandleMap&) const = default;
};

bool is_homomorphism(const Quandle& source, const Quandle& target,
                     const std::vector<int>& images);

// Homomorphism that additionally sends basepoint i of the source to basepoint i
// of the target.
bool is_pointed_homomorphism(const PointedQuandle& source, const PointedQuandle& target,
                             const std::vector<int>& images);

// outer . inner (apply inner first).
QuandleMap compose(const QuandleMap& outer, const QuandleMap& inner);

inline constexpr int kDefaultHomCap = 8;

// All quandle homomorphisms source -> target, sorted lexicographically by image
// array. Exhaustive search with pruning; throws CapacityError when the source
// order exceeds source_order_cap.
std::vector<QuandleMap> enumerate_quandle_homs(const Quandle& source, const Quandle& target,
                                               int source_order_cap = kDefaultHomCap);

// The pointed homomorphisms, same ordering. Throws std::invalid_argument on a
// basepoint arity mismatch.
std::vector<QuandleMap> enumerate_pointed_homs(const PointedQuandle& source,
                                               const PointedQuandle& target,
                                               int source_order_cap = kDefaultHomCap);

// Text format: line 1 is the order k, lines 2..k+1 hold one table row each
// (row x lists x |> 0 ... x |> k-1). Throws ParseError.
Table parse_quandle_table(const std::string& text);
std::string serialize_quandle_table(const Table& table);

} // namespace linkq
