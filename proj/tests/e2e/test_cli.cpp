#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunOutput {
    int code;
    std::string text;  // stdout + stderr
};

RunOutput run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path log =
        fs::temp_directory_path() / ("jumprec_cli_" + std::to_string(counter++) + ".log");
    const std::string cmd =
        env + (env.empty() ? "" : " ") + JUMPREC_CLI_PATH " " + args + " > " +
        log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunOutput out;
    out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    out.text = ss.str();
    fs::remove(log);
    return out;
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("jumprec_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::size_t line_count(const fs::path& file) {
    std::ifstream in(file);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++n;
    return n;
}

std::string read_file(const fs::path& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("forward: indicator catalog entry") {
    const auto dir = fresh_dir("forward");
    const auto out = run_cli("forward --problem F3 --outdir " + dir.string());
    CHECK(out.code == 0);
    const auto csv = dir / "coefficients.csv";
    REQUIRE(fs::exists(csv));
    CHECK(line_count(csv) == 32);  // header + 31 coefficients

    std::ifstream in(csv);
    std::string header, first;
    std::getline(in, header);
    CHECK(header == "n,a_n,a_n_noisy");
    std::getline(in, first);
    double n, a, an;
    CHECK(std::sscanf(first.c_str(), "%lf,%lf,%lf", &n, &a, &an) == 3);
    CHECK(a == doctest::Approx(std::log(10.0)).epsilon(1e-14));
    CHECK(an == a);  // eps = 0
}

TEST_CASE("forward: unknown problem id is a usage error") {
    const auto out = run_cli("forward --problem F9");
    CHECK(out.code == 2);
}

TEST_CASE("reconstruct: fig2 preset writes the full artifact set") {
    const auto dir = fresh_dir("fig2");
    const auto out = run_cli("reconstruct --preset fig2 --problem F2 --outdir " +
                             dir.string());
    CHECK(out.code == 0);
    CHECK(fs::exists(dir / "spectral.csv"));
    CHECK(fs::exists(dir / "plateau_report.txt"));
    CHECK(fs::exists(dir / "plateau_report.csv"));
    CHECK(fs::exists(dir / "reconstruction.csv"));
    CHECK(fs::exists(dir / "cauchy_comparison.csv"));
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(line_count(dir / "spectral.csv") == 152);       // header + m = 0..150
    CHECK(line_count(dir / "reconstruction.csv") == 513); // header + 512 points
    const std::string report = read_file(dir / "report.txt");
    CHECK(report.find("k0_used:") != std::string::npos);
    CHECK(report.find("rel_l2:") != std::string::npos);
}

TEST_CASE("reconstruct: csv output is deterministic for a fixed config") {
    const auto d1 = fresh_dir("det1");
    const auto d2 = fresh_dir("det2");
    const std::string args = "reconstruct --preset fig1 --problem F1 --outdir ";
    CHECK(run_cli(args + d1.string()).code == 0);
    CHECK(run_cli(args + d2.string()).code == 0);
    CHECK(read_file(d1 / "spectral.csv") == read_file(d2 / "spectral.csv"));
    CHECK(read_file(d1 / "reconstruction.csv") ==
          read_file(d2 / "reconstruction.csv"));
}

TEST_CASE("reconstruct: heavy noise reports no plateau with a distinct exit code") {
    const auto dir = fresh_dir("noplateau");
    const auto out = run_cli(
        "reconstruct --problem F2 --eps 1e-2 --seed 1 --outdir " + dir.string());
    CHECK(out.code == 3);
    CHECK(out.text.find("no plateau") != std::string::npos);
    CHECK(fs::exists(dir / "spectral.csv"));  // partial outputs still written
    const std::string report = read_file(dir / "plateau_report.txt");
    CHECK(report.find("no-plateau") != std::string::npos);

    // the documented fallback succeeds
    const auto fallback = run_cli(
        "reconstruct --problem F2 --eps 1e-2 --seed 1 --k0-mode norm --outdir " +
        dir.string());
    CHECK(fallback.code == 0);
}

TEST_CASE("reconstruct: forced k0") {
    const auto dir = fresh_dir("forced");
    const auto out = run_cli(
        "reconstruct --preset fig1 --problem F1 --k0 75 --outdir " + dir.string());
    CHECK(out.code == 0);
    CHECK(out.text.find("k0=75") != std::string::npos);
}

TEST_CASE("noise-sweep: summary files and fit line") {
    const auto dir = fresh_dir("sweep");
    const auto out = run_cli(
        "noise-sweep --problem F2 --eps-list 1e-2 1e-4 1e-6 --realizations 3 "
        "--outdir " +
        dir.string());
    CHECK(out.code == 0);
    CHECK(line_count(dir / "noise_sweep.csv") == 10);         // header + 9 rows
    CHECK(line_count(dir / "noise_sweep_summary.csv") == 4);  // header + 3
    const std::string rep = read_file(dir / "sweep_report.txt");
    CHECK(rep.find("r2=") != std::string::npos);
}

TEST_CASE("list-problems") {
    const auto out = run_cli("list-problems");
    CHECK(out.code == 0);
    CHECK(out.text.find("F1") != std::string::npos);
    CHECK(out.text.find("F2") != std::string::npos);
    CHECK(out.text.find("F3") != std::string::npos);
    CHECK(out.text.find("custom") != std::string::npos);
}

TEST_CASE("verify suites pass") {
    const auto dir = fresh_dir("verify");
    const auto out = run_cli("verify --outdir " + dir.string());
    CHECK(out.code == 0);
    CHECK(out.text.find("verification passed") != std::string::npos);
    CHECK(fs::exists(dir / "asymptotic_ratios.csv"));
}

TEST_CASE("config file supplies defaults, flags override") {
    const auto dir = fresh_dir("config");
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "n=20\nproblem=F3\n";
    }
    const auto out = run_cli("forward --config " + (dir / "run.cfg").string() +
                             " --outdir " + dir.string());
    CHECK(out.code == 0);
    CHECK(line_count(dir / "coefficients.csv") == 22);  // header + 21

    const auto over = run_cli("forward --config " + (dir / "run.cfg").string() +
                              " --n 5 --outdir " + dir.string());
    CHECK(over.code == 0);
    CHECK(line_count(dir / "coefficients.csv") == 7);
}

TEST_CASE("JUMPREC_OUTDIR supplies the default output directory") {
    const auto dir = fresh_dir("envvar");
    const auto out =
        run_cli("forward --problem F3", "JUMPREC_OUTDIR=" + dir.string());
    CHECK(out.code == 0);
    CHECK(fs::exists(dir / "coefficients.csv"));
}
