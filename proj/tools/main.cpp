#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkq/coloring.hpp"
#include "linkq/errors.hpp"
#include "linkq/linkoid.hpp"
#include "linkq/quandle.hpp"
#include "linkq/quiver.hpp"
#include "linkq/torus_oracle.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

linkq::Quandle load_quandle(const std::string& path) {
    return linkq::Quandle::from_table(linkq::parse_quandle_table(read_input(path)));
}

linkq::LinkoidDiagram load_linkoid(const std::string& path) {
    return linkq::parse_linkoid(read_input(path));
}

// One image array per line, k space-separated integers, '#' comments.
std::vector<linkq::QuandleMap> load_endos(const std::string& path, int order) {
    const std::string text = read_input(path);
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    std::vector<linkq::QuandleMap> maps;
    while (std::getline(stream, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<int> images;
        std::string tok;
        while (fields >> tok) {
            try {
                size_t used = 0;
                images.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw linkq::ParseError(line_no, "invalid integer '" + tok + "'");
            }
        }
        if (images.empty()) continue;
        if (static_cast<int>(images.size()) != order) {
            throw linkq::ParseError(line_no, "expected " + std::to_string(order) +
                                                 " images, got " + std::to_string(images.size()));
        }
        maps.push_back({order, order, std::move(images)});
    }
    return maps;
}

std::string violation_text(const linkq::AxiomViolation& v) {
    std::string s = "axiom " + std::to_string(v.axiom) + " violated at ";
    const char* names[] = {"x", "y", "z"};
    if (v.axiom == 2) return s + "y=" + std::to_string(v.witness.at(0));
    for (size_t i = 0; i < v.witness.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::string(names[i]) + "=" + std::to_string(v.witness[i]);
    }
    return s;
}

std::string shape_text(const linkq::oracle::QuiverShape& shape) {
    using linkq::oracle::ShapeKind;
    if (shape.kind == ShapeKind::k1n) return "K_{1," + std::to_string(shape.n) + "}";
    if (shape.kind == ShapeKind::join_prime_c) {
        return "K_{" + std::to_string(shape.c - 1) + "," + std::to_string(shape.d) + "} join_" +
               std::to_string(shape.d) + " K_{1," + std::to_string(shape.n) + "}";
    }
    return "none (no closed form for composite gcd " + std::to_string(shape.c) + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int run_oracle(int p, int n, int y, const linkq::SearchOptions& opts) {
    namespace oracle = linkq::oracle;
    const int c = std::gcd(p, n);
    std::cout << "p = " << p << ", n = " << n << ", y = " << y << ", gcd = " << c << "\n";

    const linkq::LinkoidDiagram diagram = linkq::torus_linkoid(p);
    const linkq::PointedQuandle pq(linkq::dihedral(n), {y, y});
    bool all_ok = true;

    const long long predicted = oracle::predicted_count(p, n, y, y);
    const long long counted = linkq::counting_invariant(diagram, pq, opts);
    std::cout << "predicted count: " << predicted << "\n";
    std::cout << "engine count: " << counted << "\n";
    all_ok = all_ok && predicted == counted;

    std::vector<linkq::Coloring> predicted_cols = oracle::predicted_colorings(p, n, y);
    std::sort(predicted_cols.begin(), predicted_cols.end());
    const bool cols_match = predicted_cols == linkq::enumerate_colorings(diagram, pq, opts);
    std::cout << "coloring sets match: " << yes_no(cols_match) << "\n";
    all_ok = all_ok && cols_match;

    std::vector<std::vector<int>> predicted_endos = oracle::predicted_endos(n, y);
    std::sort(predicted_endos.begin(), predicted_endos.end());
    std::vector<std::vector<int>> engine_endos;
    for (const linkq::QuandleMap& m : linkq::enumerate_pointed_homs(pq, pq, n)) {
        engine_endos.push_back(m.images);
    }
    const bool endos_match = predicted_endos == engine_endos;
    std::cout << "endomorphism sets match: " << yes_no(endos_match) << "\n";
    all_ok = all_ok && endos_match;

    const oracle::QuiverShape shape = oracle::predicted_quiver_shape(p, n);
    std::cout << "predicted shape: " << shape_text(shape) << "\n";
    const linkq::ColoringQuiver quiver = linkq::build_quiver(diagram, pq, opts);
    if (const auto realized = oracle::realize_shape(shape)) {
        if (quiver.graph.vertex_count <= linkq::kDefaultIsoCap) {
            const bool iso = linkq::are_isomorphic(quiver.graph, *realized);
            std::cout << "shape match: " << yes_no(iso) << "\n";
            all_ok = all_ok && iso;
        } else {
            std::cout << "shape check skipped (quiver has " << quiver.graph.vertex_count
                      << " vertices)\n";
        }
    }
    const linkq::Polynomial engine_poly = linkq::in_degree_polynomial(quiver.graph);
    if (const auto predicted_poly = oracle::predicted_indegree_polynomial(p, n)) {
        std::cout << "predicted in-degree polynomial: " << predicted_poly->str() << "\n";
        std::cout << "engine in-degree polynomial: " << engine_poly.str() << "\n";
        const bool poly_match = *predicted_poly == engine_poly;
        std::cout << "polynomial match: " << yes_no(poly_match) << "\n";
        all_ok = all_ok && poly_match;
    } else {
        std::cout << "engine in-degree polynomial: " << engine_poly.str() << "\n";
    }

    std::cout << "verdict: " << (all_ok ? "agree" : "MISMATCH") << "\n";
    return all_ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pointed-quandle invariants of linkoid diagrams", "linkq"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string quandle_path;
    std::string linkoid_path;
    std::string endos_path;
    std::vector<int> base;
    long long node_budget = linkq::SearchOptions{}.node_budget;
    bool as_json = false;
    bool as_dot = false;

    auto add_quandle = [&](CLI::App* cmd) {
        cmd->add_option("-q,--quandle", quandle_path, "quandle table file ('-' for stdin)")
            ->required();
    };
    auto add_linkoid = [&](CLI::App* cmd) {
        cmd->add_option("-l,--linkoid", linkoid_path, "linkoid diagram file ('-' for stdin)")
            ->required();
    };
    auto add_base = [&](CLI::App* cmd) {
        cmd->add_option("--base", base, "comma-separated basepoints, two per open component")
            ->required()
            ->delimiter(',');
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--node-budget", node_budget, "search node budget")
            ->check(CLI::PositiveNumber);
    };
    auto options = [&] { return linkq::SearchOptions{node_budget}; };

    CLI::App* validate = app.add_subcommand("validate-quandle", "check the quandle axioms");
    std::string validate_path;
    validate->add_option("file", validate_path, "quandle table file ('-' for stdin)")->required();
    validate->callback([&] {
        const linkq::Table table = linkq::parse_quandle_table(read_input(validate_path));
        const linkq::ValidationReport report = linkq::validate_quandle(table);
        if (report.valid) {
            std::cout << "valid quandle of order " << table.size() << "\n";
            return;
        }
        std::cout << "invalid quandle\n";
        for (const std::string& e : report.structural_errors) std::cout << "structural: " << e << "\n";
        for (const linkq::AxiomViolation& v : report.violations) {
            std::cout << violation_text(v) << "\n";
        }
        exit_code = 2;
    });

    CLI::App* gen = app.add_subcommand("gen", "emit generated inputs");
    gen->require_subcommand(1);
    CLI::App* gen_torus = gen->add_subcommand("torus", "p-crossing torus linkoid diagram");
    int p = 0;
    std::vector<std::string> kink;
    gen_torus->add_option("-p", p, "crossing count")->required()->check(CLI::PositiveNumber);
    gen_torus->add_option("--kink", kink, "add one R1 kink: ARC over_first|under_first")
        ->expected(2);
    gen_torus->callback([&] {
        linkq::LinkoidDiagram d = linkq::torus_linkoid(p);
        if (!kink.empty()) {
            int arc = 0;
            try {
                size_t used = 0;
                arc = std::stoi(kink[0], &used);
                if (used != kink[0].size()) throw std::invalid_argument(kink[0]);
            } catch (const std::exception&) {
                throw std::invalid_argument("kink arc must be an integer, got '" + kink[0] + "'");
            }
            linkq::KinkChirality chirality;
            if (kink[1] == "over_first") {
                chirality = linkq::KinkChirality::over_first;
            } else if (kink[1] == "under_first") {
                chirality = linkq::KinkChirality::under_first;
            } else {
                throw std::invalid_argument("kink chirality must be over_first or under_first");
            }
            d = linkq::add_r1_kink(d, arc, chirality);
        }
        std::cout << linkq::serialize_linkoid(d);
    });
    CLI::App* gen_dihedral = gen->add_subcommand("dihedral", "dihedral quandle table");
    int dihedral_n = 0;
    gen_dihedral->add_option("-n", dihedral_n, "order")->required()->check(CLI::PositiveNumber);
    gen_dihedral->callback(
        [&] { std::cout << linkq::serialize_quandle_table(linkq::dihedral(dihedral_n).table()); });

    CLI::App* colorings = app.add_subcommand("colorings", "enumerate colorings as JSON");
    add_quandle(colorings);
    add_linkoid(colorings);
    add_base(colorings);
    add_budget(colorings);
    colorings->callback([&] {
        const linkq::PointedQuandle pq(load_quandle(quandle_path), base);
        std::cout << linkq::colorings_to_json(
                         linkq::enumerate_colorings(load_linkoid(linkoid_path), pq, options()))
                  << "\n";
    });

    CLI::App* count = app.add_subcommand("count", "coloring count");
    add_quandle(count);
    add_linkoid(count);
    add_base(count);
    add_budget(count);
    count->callback([&] {
        const linkq::PointedQuandle pq(load_quandle(quandle_path), base);
        std::cout << linkq::counting_invariant(load_linkoid(linkoid_path), pq, options()) << "\n";
    });

    CLI::App* count_matrix = app.add_subcommand("count-matrix", "counting matrix over all basepoint pairs");
    add_quandle(count_matrix);
    add_linkoid(count_matrix);
    add_budget(count_matrix);
    count_matrix->add_flag("--json", as_json, "emit JSON instead of a text grid");
    count_matrix->callback([&] {
        const linkq::CountingMatrix m =
            linkq::counting_matrix(load_linkoid(linkoid_path), load_quandle(quandle_path), options());
        std::cout << (as_json ? linkq::counting_matrix_to_json(m) + "\n"
                              : linkq::counting_matrix_to_text(m));
    });

    CLI::App* quiver = app.add_subcommand("quiver", "coloring quiver (JSON by default)");
    add_quandle(quiver);
    add_linkoid(quiver);
    add_base(quiver);
    add_budget(quiver);
    quiver->add_option("--endos", endos_path, "endomorphism subset file (one image array per line)");
    CLI::Option* dot_flag = quiver->add_flag("--dot", as_dot, "emit DOT");
    quiver->add_flag("--json", as_json, "emit JSON (the default)")->excludes(dot_flag);
    quiver->callback([&] {
        const linkq::Quandle x = load_quandle(quandle_path);
        const linkq::PointedQuandle pq(x, base);
        const linkq::LinkoidDiagram d = load_linkoid(linkoid_path);
        const linkq::ColoringQuiver q =
            endos_path.empty() ? linkq::build_quiver(d, pq, options())
                               : linkq::build_quiver(d, pq, load_endos(endos_path, x.order()),
                                                     options());
        if (as_dot) {
            std::cout << linkq::to_dot(q.graph, q.vertices);
        } else {
            std::cout << linkq::quiver_to_json(q) << "\n";
        }
    });

    CLI::App* indeg_poly = app.add_subcommand("indeg-poly", "in-degree quiver polynomial");
    add_quandle(indeg_poly);
    add_linkoid(indeg_poly);
    add_base(indeg_poly);
    add_budget(indeg_poly);
    indeg_poly->add_option("--endos", endos_path,
                           "endomorphism subset file (one image array per line)");
    indeg_poly->callback([&] {
        const linkq::Quandle x = load_quandle(quandle_path);
        const linkq::PointedQuandle pq(x, base);
        const linkq::LinkoidDiagram d = load_linkoid(linkoid_path);
        const linkq::ColoringQuiver q =
            endos_path.empty() ? linkq::build_quiver(d, pq, options())
                               : linkq::build_quiver(d, pq, load_endos(endos_path, x.order()),
                                                     options());
        std::cout << linkq::in_degree_polynomial(q.graph).str() << "\n";
    });

    CLI::App* indeg_matrix =
        app.add_subcommand("indeg-matrix", "in-degree polynomial matrix over all basepoint pairs");
    add_quandle(indeg_matrix);
    add_linkoid(indeg_matrix);
    add_budget(indeg_matrix);
    indeg_matrix->add_flag("--json", as_json, "emit JSON instead of a text grid");
    indeg_matrix->callback([&] {
        const linkq::PolynomialMatrix m = linkq::in_degree_polynomial_matrix(
            load_linkoid(linkoid_path), load_quandle(quandle_path), options());
        std::cout << (as_json ? linkq::polynomial_matrix_to_json(m) + "\n"
                              : linkq::polynomial_matrix_to_text(m));
    });

    CLI::App* oracle = app.add_subcommand(
        "oracle", "compare closed-form torus-linkoid predictions against the engine");
    int oracle_p = 0;
    int oracle_n = 0;
    int oracle_y = 0;
    oracle->add_option("-p", oracle_p, "crossing count")->required()->check(CLI::PositiveNumber);
    oracle->add_option("-n", oracle_n, "dihedral quandle order")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--y", oracle_y, "common basepoint (default 0)");
    add_budget(oracle);
    oracle->callback([&] { exit_code = run_oracle(oracle_p, oracle_n, oracle_y, options()); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const linkq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const linkq::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
