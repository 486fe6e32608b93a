#include "linkq/quandle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "linkq/errors.hpp"

namespace linkq {

namespace {

std::string violation_text(const AxiomViolation& v) {
    std::string s = "axiom " + std::to_string(v.axiom) + " violated at ";
    const char* names[] = {"x", "y", "z"};
    if (v.axiom == 2) {
        s += "y=" + std::to_string(v.witness.at(0));
        return s;
    }
    for (size_t i = 0; i < v.witness.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::string(names[i]) + "=" + std::to_string(v.witness[i]);
    }
    return s;
}

} // namespace

ValidationReport validate_quandle(const Table& table) {
    ValidationReport report;
    const int k = static_cast<int>(table.size());
    if (k == 0) {
        report.structural_errors.push_back("table is empty");
        return report;
    }
    for (int x = 0; x < k; ++x) {
        if (static_cast<int>(table[x].size()) != k) {
            report.structural_errors.push_back(
                "row " + std::to_string(x) + " has " + std::to_string(table[x].size()) +
                " entries, expected " + std::to_string(k));
        }
    }
    if (!report.structural_errors.empty()) return report;

    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
            if (table[x][y] < 0 || table[x][y] >= k) {
                report.structural_errors.push_back(
                    "entry (" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                    std::to_string(table[x][y]) + " out of range");
            }
        }
    }
    if (!report.structural_errors.empty()) return report;

    for (int x = 0; x < k; ++x) {
        if (table[x][x] != x) report.violations.push_back({1, {x}});
    }
    for (int y = 0; y < k; ++y) {
        std::vector<int> seen(k, 0);
        for (int x = 0; x < k; ++x) ++seen[table[x][y]];
        if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
            report.violations.push_back({2, {y}});
        }
    }
    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
            for (int z = 0; z < k; ++z) {
                if (table[table[x][y]][z] != table[table[x][z]][table[y][z]]) {
                    report.violations.push_back({3, {x, y, z}});
                }
            }
        }
    }
    report.valid = report.violations.empty();
    return report;
}

Quandle::Quandle(Table table) : table_(std::move(table)) {
    const int k = order();
    left_div_.assign(k, std::vector<int>(k, -1));
    for (int y = 0; y < k; ++y) {
        for (int x = 0; x < k; ++x) left_div_[table_[x][y]][y] = x;
    }
}

Quandle Quandle::from_table(Table table) {
    ValidationReport report = validate_quandle(table);
    if (!report.well_formed()) {
        throw std::invalid_argument("invalid quandle: " + report.structural_errors.front());
    }
    if (!report.valid) {
        throw std::invalid_argument("invalid quandle: " + violation_text(report.violations.front()));
    }
    return Quandle(std::move(table));
}

Quandle dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: order must be positive");
    Table table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) table[x][y] = ((2 * y - x) % n + n) % n;
    }
    return Quandle::from_table(std::move(table));
}

Quandle trivial_quandle(int n) {
    if (n < 1) throw std::invalid_argument("trivial_quandle: order must be positive");
    Table table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) table[x][y] = x;
    }
    return Quandle::from_table(std::move(table));
}

PointedQuandle::PointedQuandle(Quandle base_in, std::vector<int> basepoints_in)
    : base(std::move(base_in)), basepoints(std::move(basepoints_in)) {
    for (int b : basepoints) {
        if (b < 0 || b >= base.order()) {
            throw std::invalid_argument("basepoint " + std::to_string(b) +
                                        " out of range for quandle of order " +
                                        std::to_string(base.order()));
        }
    }
}

bool is_homomorphism(const Quandle& source, const Quandle& target,
                     const std::vector<int>& images) {
    const int k = source.order();
    if (static_cast<int>(images.size()) != k) return false;
    for (int v : images) {
        if (v < 0 || v >= target.order()) return false;
    }
    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
            if (images[source.op(x, y)] != target.op(images[x], images[y])) return false;
        }
    }
    return true;
}

bool is_pointed_homomorphism(const PointedQuandle& source, const PointedQuandle& target,
                             const std::vector<int>& images) {
    if (source.basepoints.size() != target.basepoints.size()) return false;
    if (!is_homomorphism(source.base, target.base, images)) return false;
    for (size_t i = 0; i < source.basepoints.size(); ++i) {
        if (images[source.basepoints[i]] != target.basepoints[i]) return false;
    }
    return true;
}

QuandleMap compose(const QuandleMap& outer, const QuandleMap& inner) {
    if (inner.target_order != outer.source_order) {
        throw std::invalid_argument("compose: inner target order " +
                                    std::to_string(inner.target_order) +
                                    " differs from outer source order " +
                                    std::to_string(outer.source_order));
    }
    QuandleMap result{inner.source_order, outer.target_order, {}};
    result.images.reserve(inner.images.size());
    for (int v : inner.images) result.images.push_back(outer.images.at(v));
    return result;
}

namespace {

// True when every law instance whose three participants are assigned holds.
// Only instances that involve position `pos` (as operand or result) can be
// newly checkable, so the scan is restricted to those.
bool prefix_consistent(const Quandle& source, const Quandle& target,
                       const std::vector<int>& images, int pos) {
    for (int a = 0; a <= pos; ++a) {
        for (int b = 0; b <= pos; ++b) {
            const int t = source.op(a, b);
            if (t > pos) continue;
            if (a != pos && b != pos && t != pos) continue;
            if (target.op(images[a], images[b]) != images[t]) return false;
        }
    }
    return true;
}

void hom_search(const Quandle& source, const Quandle& target, const std::vector<int>& forced,
                std::vector<int>& images, int pos, std::vector<QuandleMap>& out) {
    const int k = source.order();
    if (pos == k) {
        out.push_back({k, target.order(), images});
        return;
    }
    for (int v = 0; v < target.order(); ++v) {
        if (forced[pos] >= 0 && forced[pos] != v) continue;
        images[pos] = v;
        if (prefix_consistent(source, target, images, pos)) {
            hom_search(source, target, forced, images, pos + 1, out);
        }
    }
}

std::vector<QuandleMap> enumerate_homs_forced(const Quandle& source, const Quandle& target,
                                              const std::vector<int>& forced, int cap) {
    if (source.order() > cap) {
        throw CapacityError("hom enumeration: source order " + std::to_string(source.order()) +
                            " exceeds cap " + std::to_string(cap));
    }
    std::vector<QuandleMap> out;
    std::vector<int> images(source.order(), -1);
    hom_search(source, target, forced, images, 0, out);
    return out;
}

} // namespace

std::vector<QuandleMap> enumerate_quandle_homs(const Quandle& source, const Quandle& target,
                                               int source_order_cap) {
    std::vector<int> forced(source.order(), -1);
    return enumerate_homs_forced(source, target, forced, source_order_cap);
}

std::vector<QuandleMap> enumerate_pointed_homs(const PointedQuandle& source,
                                               const PointedQuandle& target,
                                               int source_order_cap) {
    if (source.basepoints.size() != target.basepoints.size()) {
        throw std::invalid_argument("pointed hom enumeration: source has " +
                                    std::to_string(source.basepoints.size()) +
                                    " basepoints, target has " +
                                    std::to_string(target.basepoints.size()));
    }
    std::vector<int> forced(source.base.order(), -1);
    for (size_t i = 0; i < source.basepoints.size(); ++i) {
        const int p = source.basepoints[i];
        const int q = target.basepoints[i];
        if (forced[p] >= 0 && forced[p] != q) return {};
        forced[p] = q;
    }
    return enumerate_homs_forced(source.base, target.base, forced, source_order_cap);
}

Table parse_quandle_table(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    int order = -1;
    Table table;

    while (std::getline(stream, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        if (order < 0) {
            if (tokens.size() != 1) throw ParseError(line_no, "expected a single integer order");
            try {
                size_t used = 0;
                order = std::stoi(tokens[0], &used);
                if (used != tokens[0].size()) throw std::invalid_argument(tokens[0]);
            } catch (const std::exception&) {
                throw ParseError(line_no, "invalid integer '" + tokens[0] + "'");
            }
            if (order < 1) throw ParseError(line_no, "order must be positive");
            continue;
        }
        if (static_cast<int>(table.size()) == order) {
            throw ParseError(line_no, "unexpected content after table");
        }
        if (static_cast<int>(tokens.size()) != order) {
            throw ParseError(line_no, "expected " + std::to_string(order) + " entries, got " +
                                          std::to_string(tokens.size()));
        }
        std::vector<int> row;
        row.reserve(order);
        for (const std::string& t : tokens) {
            try {
                size_t used = 0;
                row.push_back(std::stoi(t, &used));
                if (used != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                throw ParseError(line_no, "invalid integer '" + t + "'");
            }
        }
        table.push_back(std::move(row));
    }

    if (order < 0) throw ParseError(line_no + 1, "expected a quandle order");
    if (static_cast<int>(table.size()) != order) {
        throw ParseError(line_no + 1, "expected " + std::to_string(order) + " rows, got " +
                                          std::to_string(table.size()));
    }
    return table;
}

std::string serialize_quandle_table(const Table& table) {
    std::string out = std::to_string(table.size()) + "\n";
    for (const auto& row : table) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace linkq
