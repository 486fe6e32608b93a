#pragma once

#include <string>
#include <vector>

namespace linkq {

enum class Sign { positive, negative };

// An arc passing under another: under_in enters, over passes above, under_out
// leaves on the far side.
struct Crossing {
    int under_in = 0;
    int over = 0;
    int under_out = 0;
    Sign sign = Sign::positive;

    bool operator==(const Crossing&) const = default;
};

struct OpenComponent {
    int leg = 0;
    int head = 0;

    bool operator==(const OpenComponent&) const = default;
};

// Combinatorial linkoid diagram: arcs 0..arc_count-1, signed crossings, and an
// ordered list of open components. Planarity is not tracked; the structure is
// exactly what coloring needs.
struct LinkoidDiagram {
    int arc_count = 0;
    std::vector<Crossing> crossings;
    std::vector<OpenComponent> open_components;

    bool operator==(const LinkoidDiagram&) const = default;
};

// Throws std::invalid_argument when any crossing or open-component arc
// reference is out of range.
void validate_diagram(const LinkoidDiagram& d);

// color(a) |> color(b) = color(c)
struct Relation {
    int a = 0;
    int b = 0;
    int c = 0;

    bool operator==(const Relation&) const = default;
};

// One relation per crossing, in crossing order. Sign convention:
// positive crossing: under_in |> over = under_out;
// negative crossing: under_out |> over = under_in.
std::vector<Relation> crossing_relations(const LinkoidDiagram& d);

// The 1-linkoid whose closure is the (p,2) torus link: p+1 arcs, p positive
// crossings, one open component with leg = arc 0 and head = arc p. Arc i-1
// carries generator x_i, so the relations are
//   x_2 |> x_{p+1} = x_p   and   x_{i+2} |> x_{i+1} = x_i  (1 <= i <= p-1).
LinkoidDiagram torus_linkoid(int p);

enum class KinkChirality { over_first, under_first };

// Splits `arc` by a Reidemeister-I kink: adds arc m = arc_count and one
// positive crossing whose relation is arc |> arc = m (over_first) or
// arc |> m = m (under_first). A head basepoint sitting on `arc` migrates to
// the new arc; the leg stays put.
LinkoidDiagram add_r1_kink(const LinkoidDiagram& d, int arc, KinkChirality chirality);

// Line-oriented text format, '#' starts a comment:
//   arcs M
//   open LEG HEAD          (one per open component, in order)
//   xing SIGN UIN OVER UOUT  (SIGN is + or -)
// Throws ParseError with the offending line number.
LinkoidDiagram parse_linkoid(const std::string& text);
std::string serialize_linkoid(const LinkoidDiagram& d);

} // namespace linkq
