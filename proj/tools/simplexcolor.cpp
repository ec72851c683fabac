// Command-line front end. Exit codes: 0 ok, 2 input error, 3 unrealizable
// complex, 4 invalid coloring.

#include "simplexcolor/chromatic.hpp"
#include "simplexcolor/coloring.hpp"
#include "simplexcolor/dual_graph.hpp"
#include "simplexcolor/error.hpp"
#include "simplexcolor/generators.hpp"
#include "simplexcolor/io.hpp"
#include "simplexcolor/render.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

namespace sc = simplexcolor;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_unrealizable = 3;
constexpr int exit_bad_coloring = 4;

void emit(const std::string& content, const std::string& path)
{
    if (path.empty() || path == "-") std::cout << content;
    else sc::write_file(path, content);
}

std::string certificate_path_for(const std::string& coloring_path)
{
    fs::path p(coloring_path);
    p.replace_extension();
    return p.string() + ".cert.json";
}

json analyze(const sc::Complex& c)
{
    const std::size_t d = c.dimension();
    const sc::DualGraph g = sc::build_dual(c);
    const sc::GraphStats s = sc::stats(g, d);
    json report{{"dimension", d},
                {"simplices", c.size()},
                {"dual_edges", g.edge_count()},
                {"max_degree", s.max_degree},
                {"components", s.component_count},
                {"chromatic_upper_bound", s.chromatic_upper_bound},
                {"clique_bound_applies", s.clique_bound_applies}};

    const auto big = sc::find_clique(g, d + 2);
    report["k_d2"] = big ? json(*big) : json(nullptr);

    json cliques = json::array();
    for (const auto& clique : sc::find_all_cliques(g, d + 1)) {
        const auto r = sc::analyze_kd1_configuration(c, clique);
        json entry{{"simplices", r.clique_nodes},
                   {"distinct_vertex_ids", r.distinct_vertex_ids},
                   {"vertex_count_ok", r.vertex_count_ok},
                   {"halfspace_condition_ok", r.halfspace_condition_ok}};
        if (r.root) {
            entry["root"] = *r.root;
            entry["apex"] = *r.apex;
            entry["base"] = r.base;
        }
        cliques.push_back(std::move(entry));
    }
    report["k_d1"] = std::move(cliques);
    return report;
}

std::string analyze_text(const json& r)
{
    const auto d = r["dimension"].get<std::size_t>();
    std::ostringstream out;
    out << "dimension: " << d << "\n"
        << "simplices: " << r["simplices"] << "\n"
        << "dual edges: " << r["dual_edges"] << "\n"
        << "max degree: " << r["max_degree"] << "\n"
        << "components: " << r["components"] << "\n"
        << "chromatic upper bound: " << r["chromatic_upper_bound"]
        << (r["clique_bound_applies"].get<bool>() ? " (clique-exclusion bound)" : " (greedy bound)") << "\n"
        << "K_" << d + 2 << ": " << (r["k_d2"].is_null() ? "absent" : "PRESENT " + r["k_d2"].dump()) << "\n"
        << "K_" << d + 1 << " configurations: " << r["k_d1"].size() << "\n";
    for (const auto& k : r["k_d1"]) {
        out << "  simplices " << k["simplices"].dump() << ": " << k["distinct_vertex_ids"].size()
            << " vertices (" << (k["vertex_count_ok"].get<bool>() ? "ok" : "FAIL") << "), halfspace "
            << (k["halfspace_condition_ok"].get<bool>() ? "ok" : "FAIL") << "\n";
    }
    return out.str();
}

std::vector<std::string> split_palette(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build, check, and (d+1)-color pure d-simplex complexes"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a generated complex");
    std::string kind = "fan", gen_out, gen_format;
    std::size_t dim = 2, size = 0;
    std::uint64_t seed = 0;
    gen->add_option("--kind", kind, "fan | closed-fan | tri-tiling | delaunay2d | freudenthal | path | boundary-abstract")
        ->required();
    gen->add_option("--dim", dim, "Ambient dimension d");
    gen->add_option("--size,--cells", size, "Size parameter (meaning depends on kind)");
    gen->add_option("--seed", seed, "Random seed (delaunay2d)");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
    gen->add_option("--format", gen_format, "json | off (default from extension)");

    // validate
    auto* val = app.add_subcommand("validate", "Check complex invariants");
    std::string val_in, level = "combinatorial";
    val->add_option("input", val_in)->required();
    val->add_option("--level", level, "combinatorial | geometric-strict");

    // color
    auto* col = app.add_subcommand("color", "Peel and (d+1)-color a complex");
    std::string col_in, col_out, cert_out, method = "combinatorial";
    col->add_option("input", col_in)->required();
    col->add_option("--method", method, "combinatorial | geometric");
    col->add_option("-o,--output", col_out, "Coloring JSON (default stdout)");
    col->add_option("--certificate", cert_out, "Peel certificate JSON (default <output>.cert.json)");

    // verify
    auto* ver = app.add_subcommand("verify", "Check a coloring");
    std::string ver_in, ver_col;
    ver->add_option("input", ver_in)->required();
    ver->add_option("coloring", ver_col)->required();

    // analyze
    auto* ana = app.add_subcommand("analyze", "Dual-graph statistics and clique configurations");
    std::string ana_in;
    bool ana_json = false;
    ana->add_option("input", ana_in)->required();
    ana->add_flag("--json", ana_json, "Print JSON instead of text");

    // chromatic
    auto* chr = app.add_subcommand("chromatic", "Exact chromatic number of the dual graph");
    std::string chr_in, chr_out;
    std::size_t limit = sc::default_node_limit;
    chr->add_option("input", chr_in)->required();
    chr->add_option("--limit", limit, "Refuse graphs with more nodes than this");
    chr->add_option("-o,--output", chr_out, "Write the optimal coloring here");

    // render
    auto* ren = app.add_subcommand("render", "Draw a d=2 complex as SVG");
    std::string ren_in, ren_col, ren_out, palette;
    sc::RenderOptions options;
    ren->add_option("input", ren_in)->required();
    ren->add_option("coloring", ren_col, "Optional coloring JSON");
    ren->add_option("-o,--output", ren_out, "SVG file (default stdout)");
    ren->add_option("--width", options.width);
    ren->add_option("--height", options.height);
    ren->add_option("--palette", palette, "Comma-separated fill colors");
    ren->add_flag("--show-dual", options.show_dual, "Overlay the dual graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*gen) {
            const sc::GeneratorSpec spec{sc::parse_generator_kind(kind), dim, size, seed};
            const sc::Complex c = sc::generate(spec);
            sc::FileFormat format = gen_out.empty() ? sc::FileFormat::json : sc::format_for_path(gen_out);
            if (!gen_format.empty()) {
                if (gen_format != "json" && gen_format != "off") throw sc::InputError("unknown format " + gen_format);
                format = gen_format == "off" ? sc::FileFormat::off : sc::FileFormat::json;
            }
            emit(sc::write_complex(c, format), gen_out);
            if (!gen_out.empty())
                std::cerr << "wrote " << c.size() << " simplices (d=" << c.dimension() << ") to " << gen_out << "\n";
            return exit_ok;
        }
        if (*val) {
            const sc::Complex c = sc::load_complex(val_in);
            if (level != "combinatorial" && level != "geometric-strict")
                throw sc::InputError("unknown level " + level);
            const auto lvl = level == "combinatorial" ? sc::ValidationLevel::combinatorial
                                                      : sc::ValidationLevel::geometric_strict;
            const auto report = sc::validate(c, lvl);
            for (const auto& v : report.violations) std::cout << sc::to_string(v.kind) << ": " << v.message << "\n";
            if (lvl == sc::ValidationLevel::geometric_strict && !report.overlap_checked)
                std::cout << "note: overlap check skipped for d > 3\n";
            std::cout << (report.ok() ? "valid" : "invalid") << " (" << sc::to_string(lvl) << ")\n";
            return report.ok() ? exit_ok : exit_input;
        }
        if (*col) {
            const sc::Complex c = sc::load_complex(col_in);
            const auto cert = sc::peel(c, sc::parse_peel_method(method));
            const auto coloring = sc::color(c, cert);
            emit(sc::coloring_to_json(coloring).dump() + "\n", col_out);
            if (cert_out.empty() && !col_out.empty() && col_out != "-") cert_out = certificate_path_for(col_out);
            if (!cert_out.empty()) sc::write_file(cert_out, sc::certificate_to_json(cert).dump() + "\n");
            std::cerr << "colors used: " << sc::colors_used(coloring) << "\n";
            return exit_ok;
        }
        if (*ver) {
            const sc::Complex c = sc::load_complex(ver_in);
            const auto coloring = sc::coloring_from_json(sc::parse_json(sc::read_file(ver_col)));
            const auto result = sc::verify_coloring(c, coloring);
            for (const auto& v : result.violations) std::cout << v.message << "\n";
            std::cout << (result.ok ? "coloring valid" : "coloring INVALID") << "\n";
            return result.ok ? exit_ok : exit_bad_coloring;
        }
        if (*ana) {
            const auto report = analyze(sc::load_complex(ana_in));
            std::cout << (ana_json ? report.dump(2) + "\n" : analyze_text(report));
            return exit_ok;
        }
        if (*chr) {
            const sc::Complex c = sc::load_complex(chr_in);
            const auto result = sc::exact_chromatic(sc::build_dual(c), limit);
            std::cout << "chromatic number: " << result.chromatic_number << "\n";
            if (!chr_out.empty()) sc::write_file(chr_out, sc::coloring_to_json(result.optimal_coloring).dump() + "\n");
            return exit_ok;
        }
        if (*ren) {
            const sc::Complex c = sc::load_complex(ren_in);
            std::optional<sc::Coloring> coloring;
            if (!ren_col.empty()) coloring = sc::coloring_from_json(sc::parse_json(sc::read_file(ren_col)));
            if (!palette.empty()) options.palette = split_palette(palette);
            emit(sc::render_svg(c, coloring, options), ren_out);
            return exit_ok;
        }
    } catch (const sc::UnrealizableComplexError& e) {
        std::cerr << "unrealizable complex: " << e.what() << " (residual size " << e.residual_size() << ")\n";
        return exit_unrealizable;
    } catch (const sc::GeometryInvariantError& e) {
        std::cerr << "not a valid geometric complex: " << e.what() << "\n";
        return exit_unrealizable;
    } catch (const sc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const sc::InvalidComplexError& e) {
        std::cerr << "invalid complex: " << e.what() << "\n";
        return exit_input;
    } catch (const sc::LimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
