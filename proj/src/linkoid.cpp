#include "linkq/linkoid.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "linkq/errors.hpp"

namespace linkq {

namespace {

void check_arc(int arc, int arc_count, const std::string& role) {
    if (arc < 0 || arc >= arc_count) {
        throw std::invalid_argument(role + " arc " + std::to_string(arc) +
                                    " out of range (arc count " + std::to_string(arc_count) + ")");
    }
}

} // namespace

void validate_diagram(const LinkoidDiagram& d) {
    if (d.arc_count < 0) throw std::invalid_argument("arc count must be nonnegative");
    for (const Crossing& c : d.crossings) {
        check_arc(c.under_in, d.arc_count, "crossing under_in");
        check_arc(c.over, d.arc_count, "crossing over");
        check_arc(c.under_out, d.arc_count, "crossing under_out");
    }
    std::set<int> endpoint_arcs;
    for (const OpenComponent& oc : d.open_components) {
        check_arc(oc.leg, d.arc_count, "open component leg");
        check_arc(oc.head, d.arc_count, "open component head");
        for (int arc : std::set<int>{oc.leg, oc.head}) {
            if (!endpoint_arcs.insert(arc).second) {
                throw std::invalid_argument("arc " + std::to_string(arc) +
                                            " used by more than one open component");
            }
        }
    }
}

std::vector<Relation> crossing_relations(const LinkoidDiagram& d) {
    validate_diagram(d);
    std::vector<Relation> relations;
    relations.reserve(d.crossings.size());
    for (const Crossing& c : d.crossings) {
        if (c.sign == Sign::positive) {
            relations.push_back({c.under_in, c.over, c.under_out});
        } else {
            relations.push_back({c.under_out, c.over, c.under_in});
        }
    }
    return relations;
}

LinkoidDiagram torus_linkoid(int p) {
    if (p < 1) throw std::invalid_argument("torus_linkoid: p must be positive");
    LinkoidDiagram d;
    d.arc_count = p + 1;
    d.crossings.push_back({1, p, p - 1, Sign::positive});
    for (int i = 1; i <= p - 1; ++i) {
        d.crossings.push_back({i + 1, i, i - 1, Sign::positive});
    }
    d.open_components.push_back({0, p});
    return d;
}

LinkoidDiagram add_r1_kink(const LinkoidDiagram& d, int arc, KinkChirality chirality) {
    validate_diagram(d);
    check_arc(arc, d.arc_count, "kink");
    LinkoidDiagram out = d;
    const int fresh = d.arc_count;
    out.arc_count = d.arc_count + 1;
    if (chirality == KinkChirality::over_first) {
        out.crossings.push_back({arc, arc, fresh, Sign::positive});
    } else {
        out.crossings.push_back({arc, fresh, fresh, Sign::positive});
    }
    for (OpenComponent& oc : out.open_components) {
        if (oc.head == arc) oc.head = fresh;
    }
    return out;
}

namespace {

int parse_int(const std::string& token, int line_no) {
    try {
        size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, "invalid integer '" + token + "'");
    }
}

int parse_arc(const std::string& token, int arc_count, int line_no) {
    const int arc = parse_int(token, line_no);
    if (arc < 0 || arc >= arc_count) {
        throw ParseError(line_no, "arc " + std::to_string(arc) + " out of range (arc count " +
                                      std::to_string(arc_count) + ")");
    }
    return arc;
}

} // namespace

LinkoidDiagram parse_linkoid(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    bool have_arcs = false;
    LinkoidDiagram d;
    std::set<int> endpoint_arcs;

    while (std::getline(stream, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        if (!have_arcs) {
            if (tokens[0] != "arcs") throw ParseError(line_no, "expected 'arcs' line first");
            if (tokens.size() != 2) throw ParseError(line_no, "expected 'arcs M'");
            d.arc_count = parse_int(tokens[1], line_no);
            if (d.arc_count < 0) throw ParseError(line_no, "arc count must be nonnegative");
            have_arcs = true;
            continue;
        }
        if (tokens[0] == "arcs") {
            throw ParseError(line_no, "duplicate 'arcs' line");
        } else if (tokens[0] == "open") {
            if (tokens.size() != 3) throw ParseError(line_no, "expected 'open LEG HEAD'");
            OpenComponent oc;
            oc.leg = parse_arc(tokens[1], d.arc_count, line_no);
            oc.head = parse_arc(tokens[2], d.arc_count, line_no);
            for (int arc : std::set<int>{oc.leg, oc.head}) {
                if (!endpoint_arcs.insert(arc).second) {
                    throw ParseError(line_no, "arc " + std::to_string(arc) +
                                                  " already used by an open component");
                }
            }
            d.open_components.push_back(oc);
        } else if (tokens[0] == "xing") {
            if (tokens.size() != 5) {
                throw ParseError(line_no, "expected 'xing SIGN UNDER_IN OVER UNDER_OUT'");
            }
            Crossing c;
            if (tokens[1] == "+") {
                c.sign = Sign::positive;
            } else if (tokens[1] == "-") {
                c.sign = Sign::negative;
            } else {
                throw ParseError(line_no, "sign must be '+' or '-'");
            }
            c.under_in = parse_arc(tokens[2], d.arc_count, line_no);
            c.over = parse_arc(tokens[3], d.arc_count, line_no);
            c.under_out = parse_arc(tokens[4], d.arc_count, line_no);
            d.crossings.push_back(c);
        } else {
            throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (!have_arcs) throw ParseError(line_no + 1, "expected 'arcs' line first");
    return d;
}

std::string serialize_linkoid(const LinkoidDiagram& d) {
    std::string out = "arcs " + std::to_string(d.arc_count) + "\n";
    for (const OpenComponent& oc : d.open_components) {
        out += "open " + std::to_string(oc.leg) + " " + std::to_string(oc.head) + "\n";
    }
    for (const Crossing& c : d.crossings) {
        out += std::string("xing ") + (c.sign == Sign::positive ? "+" : "-") + " " +
               std::to_string(c.under_in) + " " + std::to_string(c.over) + " " +
               std::to_string(c.under_out) + "\n";
    }
    return out;
}

} // namespace linkq
