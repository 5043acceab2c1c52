// Drives the installed CLI binary end to end. The test runner passes the
// binary location in QBANK_CLI.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const std::string& cli() {
    static const std::string path = [] {
        const char* env = std::getenv("QBANK_CLI");
        REQUIRE_MESSAGE(env != nullptr, "QBANK_CLI must point at the binary under test");
        return std::string(env);
    }();
    return path;
}

const fs::path& scratch() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "qbank_cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = scratch() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in, ("missing file: " + path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out);
    out << content;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path out_file = scratch() / ("stdout" + std::to_string(counter));
    const fs::path err_file = scratch() / ("stderr" + std::to_string(counter));
    ++counter;
    const std::string cmd = env_prefix + "\"" + cli() + "\" " + args + " > \"" +
                            out_file.string() + "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

} // namespace

TEST_CASE("families lists the registry in order") {
    const auto r = run("families");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "Qcorr\nTrapezoidArea\nTrapezoidPerimeter\nLinEqIntCffIntSol\nLinEqRatCffRatAns\n"
          "FactorQuad\nExpandBinomial\nExpandBinomialMC\nDiceSum\nZScore\nHistogramShape\n");
}

TEST_CASE("generate is deterministic for a fixed seed and clock") {
    const fs::path a = fresh_dir("gen_a");
    const fs::path b = fresh_dir("gen_b");
    const std::string tail = " --count 2 --seed 42 --clock \"Mon 13 Jan 2014 15:30:04\"";

    const auto ra = run("generate --family Qcorr --format both --out \"" + a.string() + "\"" + tail);
    const auto rb = run("generate --family Qcorr --format both --out \"" + b.string() + "\"" + tail);
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(!ra.out.empty());

    // Manifest names the HTML document and one figure per question; every
    // listed file exists with identical bytes in both directories.
    std::istringstream manifest(ra.out);
    std::string line;
    std::vector<std::string> names;
    while (std::getline(manifest, line))
        names.push_back(line.substr(0, line.find('\t')));
    CHECK(names == std::vector<std::string>{"Qcorr.html", "correlation0001.svg",
                                            "correlation0002.svg"});
    for (const auto& name : names) CHECK(slurp(a / name) == slurp(b / name));

    const auto rc = run("generate --family Qcorr --format both --out \"" +
                        fresh_dir("gen_c").string() + "\" --count 2 --seed 43" +
                        " --clock \"Mon 13 Jan 2014 15:30:04\"");
    REQUIRE(rc.code == 0);
    CHECK(rc.out != ra.out);
}

TEST_CASE("the seed comes from QBANK_SEED when the flag is absent") {
    const fs::path a = fresh_dir("seed_flag");
    const fs::path b = fresh_dir("seed_env");
    const std::string tail = " --family ZScore --format txt --count 3 --clock fixed";
    const auto flag = run("generate --seed 42 --out \"" + a.string() + "\"" + tail);
    const auto env = run("generate --out \"" + b.string() + "\"" + tail, "QBANK_SEED=42 ");
    REQUIRE(flag.code == 0);
    REQUIRE(env.code == 0);
    CHECK(flag.out == env.out);
    CHECK(slurp(a / "ZScore.txt") == slurp(b / "ZScore.txt"));
}

TEST_CASE("start-index shifts the question titles") {
    const fs::path dir = fresh_dir("start_index");
    const auto r = run("generate --family ZScore --format txt --count 2 --seed 1"
                       " --start-index 29 --out \"" + dir.string() + "\"");
    REQUIRE(r.code == 0);
    const std::string text = slurp(dir / "ZScore.txt");
    CHECK(text.find("Title: ZScore-0029") != std::string::npos);
    CHECK(text.find("Title: ZScore-0030") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("generate --family Nope --count 1").code == 2);
    CHECK(run("generate --family ZScore --count 0").code == 2);
    CHECK(run("generate --family ZScore --format pdf").code == 2);
    CHECK(run("generate --count 1").code == 2); // --family is required
    CHECK(run("bogus-subcommand").code == 2);
    CHECK(run("assess grades.csv --line-intercept 50").code == 2); // needs --line-slope

    const auto help = run("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("generate") != std::string::npos);
}

TEST_CASE("runtime failures exit with 1 and explain on stderr") {
    // A multiple-choice family cannot be forced into the fill-in TXT format.
    const auto mc_txt = run("generate --family Qcorr --format txt --count 1 --seed 1 --out \"" +
                            fresh_dir("mc_txt").string() + "\"");
    CHECK(mc_txt.code == 1);
    CHECK(mc_txt.err.find("error:") != std::string::npos);

    const auto missing = run("validate does-not-exist.txt");
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("validate accepts emitted pools and pins corruption to a line") {
    const fs::path dir = fresh_dir("validate");
    const auto gen = run("generate --family LinEqIntCffIntSol --format txt --count 2 --seed 9"
                         " --out \"" + dir.string() + "\"");
    REQUIRE(gen.code == 0);
    const std::string pool_file = (dir / "LinEqIntCffIntSol.txt").string();

    const auto ok = run("validate \"" + pool_file + "\"");
    CHECK(ok.code == 0);
    CHECK(ok.out == pool_file + ": 2 questions, clean\n");

    const fs::path corrupted = dir / "corrupted.txt";
    std::string text = slurp(pool_file);
    text.replace(text.find("Type: FMB"), 9, "Type: XYZ");
    spit(corrupted, text);
    const auto bad = run("validate \"" + corrupted.string() + "\"");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error: line 1: expected 'Type: FMB'") != std::string::npos);

    const fs::path duplicated = dir / "duplicated.txt";
    spit(duplicated,
         "Type: FMB\nTitle: A\n1. s\n\nx = [1]\n\nType: FMB\nTitle: A\n2. s\n\ny = [2]\n");
    const auto lint = run("validate \"" + duplicated.string() + "\"");
    CHECK(lint.code == 1);
    CHECK(lint.err.find("duplicate title: A") != std::string::npos);
}

TEST_CASE("assess reports fits, exclusions, and floor violations") {
    const fs::path dir = fresh_dir("assess");
    const fs::path csv = dir / "grades.csv";
    spit(csv,
         "student_id,hw_pct,course_pct\n"
         "s1,10,21\n"
         "s2,20,41\n"
         "s3,30,61\n"
         "s4,40,81\n");

    const auto fit = run("assess \"" + csv.string() + "\"");
    CHECK(fit.code == 0);
    CHECK(fit.out == "full fit: n=4 slope=2.0000 intercept=1.0000 R^2=1.0000\n");

    const auto excl = run("assess \"" + csv.string() + "\" --exclude s4");
    CHECK(excl.code == 0);
    CHECK(excl.out ==
          "full fit: n=4 slope=2.0000 intercept=1.0000 R^2=1.0000\n"
          "excluding: n=3 slope=2.0000 intercept=1.0000 R^2=1.0000\n"
          "excluded ids: s4\n");

    const auto floor = run("assess \"" + csv.string() + "\" --line-slope 0 --line-intercept 30");
    CHECK(floor.code == 0);
    CHECK(floor.out ==
          "full fit: n=4 slope=2.0000 intercept=1.0000 R^2=1.0000\n"
          "floor line: course = 0.0000*hw + 30.0000\n"
          "violations: 1\n"
          "  s1 hw=10.0000 course=21.0000\n");

    const fs::path bad_csv = dir / "bad.csv";
    spit(bad_csv, "student_id,hw_pct,course_pct\ns1,oops,60\n");
    const auto bad = run("assess \"" + bad_csv.string() + "\"");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error: row at line 2: non-numeric hw_pct value 'oops'") !=
          std::string::npos);
}

TEST_CASE("a config file can stand in for generate flags") {
    const fs::path dir = fresh_dir("config");
    const fs::path cfg = dir / "gen.ini";
    spit(cfg,
         "[generate]\n"
         "family=ZScore\n"
         "count=3\n"
         "seed=7\n"
         "format=txt\n"
         "out=" + dir.string() + "\n");
    const auto from_config = run("--config \"" + cfg.string() + "\" generate");
    REQUIRE(from_config.code == 0);

    const fs::path flags_dir = fresh_dir("config_flags");
    const auto from_flags = run("generate --family ZScore --count 3 --seed 7 --format txt"
                                " --out \"" + flags_dir.string() + "\"");
    REQUIRE(from_flags.code == 0);
    CHECK(from_config.out == from_flags.out);
    CHECK(slurp(dir / "ZScore.txt") == slurp(flags_dir / "ZScore.txt"));
}
