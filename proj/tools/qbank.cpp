// qbank: generate question pools, validate pool files, and run the grade
// regression report. Exit codes: 0 success, 1 runtime or data failure,
// 2 usage error.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qbank/assess.hpp"
#include "qbank/emit.hpp"
#include "qbank/parse_error.hpp"
#include "qbank/render.hpp"
#include "qbank/templates.hpp"

namespace {

std::string default_clock() {
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    localtime_r(&now, &parts);
    char buffer[64];
    std::strftime(buffer, sizeof buffer, "%a %d %b %Y %H:%M:%S", &parts);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::string fixed4(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", v);
    return buffer;
}

int run_generate(const std::string& family, int count, std::uint64_t seed, int start_index,
                 const std::string& out_dir, const std::string& format, std::string clock,
                 const qbank::GenBounds& bounds) {
    if (clock.empty()) clock = default_clock();
    qbank::GeneratedPool generated =
        qbank::assemble_pool(family, count, seed, start_index, bounds);
    qbank::PoolDocument pool;
    pool.pool_name = generated.pool_name;
    pool.questions = std::move(generated.questions);
    pool.assets = qbank::render_assets(generated.asset_jobs);
    pool.clock = std::move(clock);

    const qbank::PoolFormat pool_format = format == "txt"  ? qbank::PoolFormat::Txt
                                          : format == "html" ? qbank::PoolFormat::Html
                                                             : qbank::PoolFormat::Both;
    const auto manifest = qbank::write_pool(pool, out_dir, pool_format);
    std::cout << qbank::manifest_to_string(manifest);
    return 0;
}

int run_validate(const std::string& path) {
    const qbank::PoolDocument pool = qbank::parse_txt(read_file(path));
    const auto problems = qbank::pool_lint(pool);
    for (const auto& p : problems) std::cerr << path << ": " << p << "\n";
    if (!problems.empty()) return 1;
    std::cout << path << ": " << pool.questions.size() << " questions, clean\n";
    return 0;
}

int run_assess(const std::string& csv_path, const std::vector<std::string>& exclude,
               bool has_line, double line_slope, double line_intercept) {
    const auto records = qbank::load_grades(read_file(csv_path));
    const auto [full, reduced] = qbank::refit_excluding(records, exclude);

    const auto print_fit = [](const char* name, const qbank::RegressionFit& fit) {
        std::cout << name << ": n=" << fit.n << " slope=" << fixed4(fit.slope)
                  << " intercept=" << fixed4(fit.intercept) << " R^2=" << fixed4(fit.r_squared)
                  << "\n";
    };
    print_fit("full fit", full);
    if (!exclude.empty()) {
        print_fit("excluding", reduced);
        std::cout << "excluded ids:";
        for (const auto& id : exclude) std::cout << " " << id;
        std::cout << "\n";
    }
    if (has_line) {
        const auto below = qbank::floor_violations(records, line_slope, line_intercept);
        std::cout << "floor line: course = " << fixed4(line_slope) << "*hw + "
                  << fixed4(line_intercept) << "\n";
        std::cout << "violations: " << below.size() << "\n";
        for (const auto& r : below)
            std::cout << "  " << r.student_id << " hw=" << fixed4(r.hw_pct)
                      << " course=" << fixed4(r.course_pct) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Question-pool generator with exact answer keys"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value config file mirroring the flag names");

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a question pool and write its files");
    std::string family;
    int count = 10;
    std::uint64_t seed = 0;
    int start_index = 1;
    std::string out_dir = ".";
    std::string format = "both";
    std::string clock;
    qbank::GenBounds bounds;
    gen->add_option("--family", family, "Question family name")
        ->required()
        ->check(CLI::IsMember(qbank::family_names()));
    gen->add_option("--count", count, "Questions to generate")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Master seed")->envname("QBANK_SEED");
    gen->add_option("--start-index", start_index, "Index of the first question title")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--out", out_dir, "Output directory");
    gen->add_option("--format", format, "Which document files to write")
        ->check(CLI::IsMember({"txt", "html", "both"}));
    gen->add_option("--clock", clock, "Timestamp text for the HTML TITLE (default: now)");
    gen->add_option("--coef-min", bounds.int_linear.coef_min, "Integer-equation coefficient floor");
    gen->add_option("--coef-max", bounds.int_linear.coef_max, "Integer-equation coefficient cap");
    gen->add_option("--solution-min", bounds.int_linear.solution_min,
                    "Integer-equation solution floor");
    gen->add_option("--solution-max", bounds.int_linear.solution_max,
                    "Integer-equation solution cap");
    gen->add_option("--grid-extent", bounds.trapezoid.grid_extent, "Trapezoid grid size");
    gen->add_option("--root-min", bounds.quadratic.root_min, "Quadratic root floor");
    gen->add_option("--root-max", bounds.quadratic.root_max, "Quadratic root cap");

    // families
    auto* fam = app.add_subcommand("families", "List the registered question families");

    // validate
    auto* val = app.add_subcommand("validate", "Parse and check a TXT pool file");
    std::string validate_path;
    val->add_option("file", validate_path, "Pool file to check")->required();

    // assess
    auto* ass = app.add_subcommand("assess", "Fit course grade against homework grade");
    std::string csv_path;
    std::vector<std::string> exclude;
    double line_slope = 0.0, line_intercept = 0.0;
    ass->add_option("csv", csv_path, "Grades CSV (student_id,hw_pct,course_pct)")->required();
    ass->add_option("--exclude", exclude, "Student ids to drop in the second fit");
    auto* slope_opt = ass->add_option("--line-slope", line_slope, "Floor-line slope");
    auto* intercept_opt =
        ass->add_option("--line-intercept", line_intercept, "Floor-line intercept");
    intercept_opt->needs(slope_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_generate(family, count, seed, start_index, out_dir, format, clock, bounds);
        if (fam->parsed()) {
            for (const auto& name : qbank::family_names()) std::cout << name << "\n";
            return 0;
        }
        if (val->parsed()) return run_validate(validate_path);
        if (ass->parsed())
            return run_assess(csv_path, exclude, slope_opt->count() > 0, line_slope,
                              line_intercept);
    } catch (const qbank::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
