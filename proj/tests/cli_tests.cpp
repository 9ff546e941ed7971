// End-to-end checks of the hypercover binary: file formats, exit codes and
// byte-stable stdout.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hcov/covering.hpp"
#include "hcov/geometry.hpp"
#include "hcov/hypergraph.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

fs::path work_dir;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    fs::path out = work_dir / "stdout.txt", err = work_dir / "stderr.txt";
    std::string cmd = std::string(HYPERCOVER_BIN) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int raw = std::system(cmd.c_str());
    int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out), slurp(err)};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
    work_dir = fs::temp_directory_path() / ("hypercover_cli_" + std::to_string(::getpid()));
    fs::create_directories(work_dir);
    fs::path k34 = work_dir / "k34.hg";
    fs::path ag23 = work_dir / "ag23.hg";

    // construct writes the canonical serialization
    auto r = run("construct --family complete-uniform --d 3 -o " + k34.string());
    expect(r.code == 0, "construct exit code");
    expect(slurp(k34) == hcov::serialize_hypergraph(hcov::complete_uniform(3)),
           "construct file content");

    run("construct --family affine-plane --q 3 -o " + ag23.string());
    expect(slurp(ag23) == hcov::serialize_hypergraph(hcov::affine_plane(3)),
           "affine plane file content");

    // certify: full verdict, byte-identical across runs
    auto c1 = run("certify " + k34.string());
    auto c2 = run("certify " + k34.string());
    expect(c1.code == 0, "certify exit code");
    expect(contains(c1.out, "verdict full"), "certify verdict");
    expect(c1.out == c2.out, "certify deterministic output");

    // spectrum round trip
    auto sp = run("spectrum " + ag23.string());
    expect(sp.out == "eig 8.000000000 x1\neig -1.000000000 x8\n", "AG(2,3) spectrum text");
    auto spb = run("spectrum " + ag23.string() + " --matrix incidence");
    expect(contains(spb.out, "eig 3.464101615 x1"), "AG(2,3) incidence spectrum head");
    auto spq = run("spectrum " + k34.string() + " --matrix laplacian");
    expect(spq.out == "eig 9.000000000 x1\neig 1.000000000 x3\n", "K34 laplacian spectrum");

    // cover from the all-plus signing: disjoint double, inclusion and union
    fs::path sg = work_dir / "allplus.sg";
    {
        hcov::Signing s;
        s.signs.assign(12, 1);
        hcov::save_signing(s, sg.string());
    }
    fs::path cov = work_dir / "cover.hg";
    auto cv = run("cover " + k34.string() + " --signing " + sg.string() + " -o " + cov.string());
    expect(cv.code == 0, "cover exit code");
    expect(contains(cv.out, "inclusion true"), "cover inclusion line");
    expect(contains(cv.out, "union true"), "cover union line");
    expect(hcov::load_hypergraph(cov.string()).vertex_count() == 8, "cover vertex count");

    // search: witness with certificate, reproducible
    auto se = run("search " + k34.string() + " --side right --mode exhaustive");
    expect(se.code == 0, "search exit code");
    expect(contains(se.out, "witness found"), "search witness");
    expect(contains(se.out, "sg 1"), "search emits signing");
    expect(contains(se.out, "right_sided true"), "search certificate");
    auto se2 = run("search " + k34.string() + " --side right --mode exhaustive");
    expect(se.out == se2.out, "search deterministic output");

    // search with -o writes the witness file
    fs::path wit = work_dir / "witness.sg";
    run("search " + k34.string() + " --side right --mode exhaustive -o " + wit.string());
    expect(fs::exists(wit), "witness file written");
    auto loaded = hcov::load_signing(wit.string());
    expect(static_cast<int>(loaded.signs.size()) == 12, "witness signing length");

    // verify checks
    auto vp = run("verify " + k34.string() + " --check polyrel");
    expect(vp.out == "check polyrel true\n", "verify polyrel");
    auto vg = run("verify " + k34.string() + " --check godsil-gutman");
    expect(vg.out == "check godsil-gutman true\n", "verify godsil-gutman on B_H");
    auto vl = run("verify " + ag23.string() + " --check left-condition");
    expect(contains(vl.out, "check left-condition true"), "verify left-condition");
    expect(contains(vl.out, "mu_tau 0.599437"), "left-condition mu_tau value");
    auto vu = run("verify " + k34.string() + " --check union --signing " + sg.string());
    expect(vu.out == "check union true\n", "verify union");

    // tower: one level of right-sided covering
    fs::path tdir = work_dir / "tower";
    auto tw = run("tower " + k34.string() + " --levels 1 --side right -o " + tdir.string());
    expect(tw.code == 0, "tower exit code");
    expect(contains(tw.out, "level 1 vertices 8"), "tower stdout");
    expect(fs::exists(tdir / "level_1" / "cover.hg"), "tower cover file");
    expect(fs::exists(tdir / "level_1" / "signing.sg"), "tower signing file");
    expect(fs::exists(tdir / "level_1" / "certificate.txt"), "tower certificate file");

    // abelian: k = 1 baseline
    fs::path adir = work_dir / "abelian";
    auto ab = run("abelian --q 5 --k 1 -o " + adir.string());
    expect(ab.code == 0, "abelian exit code");
    expect(contains(ab.out, "k 1 block_union true"), "abelian stdout");
    expect(fs::exists(adir / "k_1" / "lift.hg"), "abelian lift file");

    // usage errors exit with 2
    expect(run("nonsense").code == 2, "unknown subcommand exit code");
    expect(run("certify").code == 2, "missing argument exit code");
    expect(run("spectrum " + k34.string() + " --bogus 1").code == 2, "unknown flag exit code");

    // domain errors exit with 1
    expect(run("certify " + work_dir.string() + "/missing.hg").code == 1,
           "missing file exit code");
    fs::path bad = work_dir / "bad.hg";
    std::ofstream(bad) << "hg 1\nn 2\ne 0 0\n";
    expect(run("certify " + bad.string()).code == 1, "parse error exit code");

    fs::remove_all(work_dir);
    if (failures) {
        std::cerr << failures << " cli test(s) failed\n";
        return 1;
    }
    std::cout << "cli tests passed\n";
    return 0;
}
