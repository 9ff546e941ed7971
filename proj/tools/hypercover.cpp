#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hcov/covering.hpp"
#include "hcov/geometry.hpp"
#include "hcov/hypergraph.hpp"
#include "hcov/matchpoly.hpp"
#include "hcov/ramanujan.hpp"
#include "hcov/search.hpp"
#include "hcov/spectra.hpp"
#include "hcov/util.hpp"

namespace fs = std::filesystem;
using namespace hcov;

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

Side parse_side(const std::string& s) {
    if (s == "right") return Side::Right;
    if (s == "left") return Side::Left;
    return Side::Full;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

struct Options {
    std::string family, input, output, matrix = "adjacency";
    std::string side = "right", mode = "exhaustive", check;
    std::string signing_file, voltage_file;
    int d = 0, q = 0, levels = 0;
    std::vector<int> folds;
    std::uint64_t trials = 100000, seed = 0;
    int jobs = 1;
};

int run_construct(const Options& opt) {
    Hypergraph h;
    if (opt.family == "complete-uniform") h = complete_uniform(opt.d);
    else if (opt.family == "projective-plane") h = projective_plane(opt.q);
    else h = affine_plane(opt.q);
    save_hypergraph(h, opt.output);
    return 0;
}

int run_spectrum(const Options& opt) {
    Hypergraph h = load_hypergraph(opt.input);
    SymMatrix m;
    if (opt.matrix == "adjacency") m = adjacency_matrix(h);
    else if (opt.matrix == "laplacian") m = signless_laplacian(h);
    else m = incidence_adjacency(h);
    std::cout << format_spectrum(sym_eigenvalues(m));
    return 0;
}

int run_certify(const Options& opt) {
    Hypergraph h = load_hypergraph(opt.input);
    std::cout << format_certificate(certify(h));
    return 0;
}

int run_cover(const Options& opt) {
    Hypergraph h = load_hypergraph(opt.input);
    if (opt.signing_file.empty() == opt.voltage_file.empty())
        throw std::runtime_error("cover requires exactly one of --voltage or --signing");
    VoltageAssignment phi;
    bool from_signing = !opt.signing_file.empty();
    Signing s;
    if (from_signing) {
        s = load_signing(opt.signing_file);
        phi = signing_to_voltage(s);
    } else {
        phi = load_voltage(opt.voltage_file);
        if (phi.k == 2) {
            s = voltage_to_signing(phi);
            from_signing = true;
        }
    }
    auto result = derived_cover(h, phi);
    save_hypergraph(result.cover, opt.output);
    std::cout << "inclusion " << bool_str(verify_spectral_inclusion(h, phi)) << "\n";
    if (from_signing) std::cout << "union " << bool_str(verify_spectral_union(h, s)) << "\n";
    return 0;
}

int run_search(const Options& opt) {
    Hypergraph h = load_hypergraph(opt.input);
    SearchConfig cfg;
    cfg.side = parse_side(opt.side);
    cfg.mode = opt.mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.jobs = opt.jobs;
    auto res = search_cover(h, cfg);
    std::cout << "explored " << res.explored << "\n";
    std::cout << "exhausted " << bool_str(res.exhausted) << "\n";
    std::cout << "witness " << (res.witness ? "found" : "none") << "\n";
    if (res.witness) {
        const auto& [s, cert] = *res.witness;
        if (!opt.output.empty())
            save_signing(s, opt.output);
        else
            std::cout << serialize_signing(s);
        std::cout << format_covering_certificate(cert);
    }
    return res.witness ? 0 : 1;
}

int run_tower(const Options& opt) {
    Hypergraph h = load_hypergraph(opt.input);
    auto levels = build_tower(h, opt.levels, parse_side(opt.side));
    fs::create_directories(opt.output);
    for (size_t t = 0; t < levels.size(); ++t) {
        const auto& lvl = levels[t];
        fs::path dir = fs::path(opt.output) / ("level_" + std::to_string(t + 1));
        fs::create_directories(dir);
        save_hypergraph(lvl.cover, (dir / "cover.hg").string());
        save_signing(lvl.signing, (dir / "signing.sg").string());
        write_text(dir / "certificate.txt", format_covering_certificate(lvl.cert));
        std::cout << "level " << t + 1 << " vertices " << lvl.cover.vertex_count()
                  << " right_sided " << bool_str(lvl.cert.right_sided) << " left_sided "
                  << bool_str(lvl.cert.left_sided) << "\n";
    }
    return 0;
}

int run_abelian(const Options& opt) {
    auto reports = abelian_tower(opt.q, opt.folds);
    fs::create_directories(opt.output);
    for (const auto& level : reports) {
        fs::path dir = fs::path(opt.output) / ("k_" + std::to_string(level.k));
        fs::create_directories(dir);
        save_hypergraph(level.lift.cover, (dir / "lift.hg").string());
        std::ostringstream rep;
        rep << "k " << level.k << "\n";
        rep << "block_union " << bool_str(level.block_union_ok) << "\n";
        rep << "lambda_incidence " << fixed9(level.lambda_incidence) << "\n";
        rep << "bound_incidence " << fixed9(level.bound_incidence) << "\n";
        rep << "lambda_adjacency " << fixed9(level.lambda_adjacency) << "\n";
        rep << "bound_adjacency " << fixed9(level.bound_adjacency) << "\n";
        write_text(dir / "report.txt", rep.str());
        std::cout << "k " << level.k << " block_union " << bool_str(level.block_union_ok)
                  << " lambda_incidence " << fixed9(level.lambda_incidence)
                  << " lambda_adjacency " << fixed9(level.lambda_adjacency) << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    Hypergraph h = load_hypergraph(opt.input);
    if (opt.check == "polyrel") {
        std::cout << "check polyrel " << bool_str(verify_poly_relation(h)) << "\n";
    } else if (opt.check == "godsil-gutman") {
        // 2-uniform input is used directly as a graph, otherwise B_H
        auto rep = validate(h);
        Graph g;
        if (rep.is_uniform && rep.r == 2) {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : h.edges()) edges.emplace_back(e[0], e[1]);
            g = Graph(h.vertex_count(), std::move(edges));
        } else {
            g = Graph::from_incidence(incidence_graph(h));
        }
        std::cout << "check godsil-gutman " << bool_str(verify_godsil_gutman(g)) << "\n";
    } else if (opt.check == "expected-laplacian") {
        std::cout << "check expected-laplacian " << bool_str(verify_expected_laplacian(h)) << "\n";
    } else if (opt.check == "union") {
        if (opt.signing_file.empty())
            throw std::runtime_error("verify --check union requires --signing");
        std::cout << "check union "
                  << bool_str(verify_spectral_union(h, load_signing(opt.signing_file))) << "\n";
    } else if (opt.check == "inclusion") {
        VoltageAssignment phi;
        if (!opt.voltage_file.empty()) phi = load_voltage(opt.voltage_file);
        else if (!opt.signing_file.empty())
            phi = signing_to_voltage(load_signing(opt.signing_file));
        else
            throw std::runtime_error("verify --check inclusion requires --voltage or --signing");
        std::cout << "check inclusion " << bool_str(verify_spectral_inclusion(h, phi)) << "\n";
    } else if (opt.check == "left-condition") {
        auto lc = left_condition(h);
        std::cout << "check left-condition " << bool_str(lc.holds) << " mu_tau "
                  << fixed9(lc.mu_tau) << " threshold " << fixed9(lc.threshold) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph coverings, spectra and Ramanujan certificates"};
    app.require_subcommand(1);
    Options opt;

    auto* construct = app.add_subcommand("construct", "generate a named hypergraph family");
    construct->add_option("--family", opt.family)
        ->required()
        ->check(CLI::IsMember({"complete-uniform", "projective-plane", "affine-plane"}));
    construct->add_option("--d", opt.d);
    construct->add_option("--q", opt.q);
    construct->add_option("-o,--output", opt.output)->required();

    auto* spectrum = app.add_subcommand("spectrum", "print grouped eigenvalues");
    spectrum->add_option("file", opt.input)->required();
    spectrum->add_option("--matrix", opt.matrix)
        ->check(CLI::IsMember({"adjacency", "laplacian", "incidence"}));

    auto* certify_cmd = app.add_subcommand("certify", "Ramanujan certificate");
    certify_cmd->add_option("file", opt.input)->required();

    auto* cover = app.add_subcommand("cover", "derived cover from a voltage or signing");
    cover->add_option("file", opt.input)->required();
    cover->add_option("--voltage", opt.voltage_file);
    cover->add_option("--signing", opt.signing_file);
    cover->add_option("-o,--output", opt.output)->required();

    auto* search = app.add_subcommand("search", "search for a Ramanujan 2-covering");
    search->add_option("file", opt.input)->required();
    search->add_option("--side", opt.side)
        ->required()
        ->check(CLI::IsMember({"right", "left", "full"}));
    search->add_option("--mode", opt.mode)
        ->required()
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--trials", opt.trials);
    search->add_option("--seed", opt.seed);
    search->add_option("--jobs", opt.jobs);
    search->add_option("-o,--output", opt.output);

    auto* tower = app.add_subcommand("tower", "iterated 2-covering tower");
    tower->add_option("file", opt.input)->required();
    tower->add_option("--levels", opt.levels)->required();
    tower->add_option("--side", opt.side)->required()->check(CLI::IsMember({"right", "left"}));
    tower->add_option("-o,--output", opt.output)->required();

    auto* abelian = app.add_subcommand("abelian", "cyclic pivot lifts of an affine plane");
    abelian->add_option("--q", opt.q)->required();
    abelian->add_option("--k", opt.folds)->required();
    abelian->add_option("-o,--output", opt.output)->required();

    auto* verify = app.add_subcommand("verify", "run a named identity or bound check");
    verify->add_option("file", opt.input)->required();
    verify->add_option("--check", opt.check)
        ->required()
        ->check(CLI::IsMember({"polyrel", "godsil-gutman", "expected-laplacian", "union",
                               "inclusion", "left-condition"}));
    verify->add_option("--signing", opt.signing_file);
    verify->add_option("--voltage", opt.voltage_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (spectrum->parsed()) return run_spectrum(opt);
        if (certify_cmd->parsed()) return run_certify(opt);
        if (cover->parsed()) return run_cover(opt);
        if (search->parsed()) return run_search(opt);
        if (tower->parsed()) return run_tower(opt);
        if (abelian->parsed()) return run_abelian(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
