#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "qbank/format.hpp"
#include "qbank/stats.hpp"
#include "qbank/templates.hpp"

#include "oracles.hpp"

using namespace qbank;

namespace {

void check_labels_in_order(const Question& q) {
    REQUIRE(q.kind == QuestionKind::MC);
    int correct = 0;
    std::set<std::string> displays;
    for (std::size_t i = 0; i < q.mc_options.size(); ++i) {
        CHECK(q.mc_options[i].label == std::string(1, static_cast<char>('a' + i)));
        correct += q.mc_options[i].is_correct ? 1 : 0;
        displays.insert(q.mc_options[i].display);
    }
    CHECK(correct == 1);
    CHECK(displays.size() == q.mc_options.size());
}

const McOption& correct_option(const Question& q) {
    for (const auto& opt : q.mc_options)
        if (opt.is_correct) return opt;
    FAIL("no correct option");
    return q.mc_options.front();
}

// "(y + x)^2" somewhere in the text -> ('y', 'x')
std::pair<char, char> symbols_from(const std::string& text) {
    const auto at = text.find('(');
    REQUIRE(at != std::string::npos);
    return {text[at + 1], text[at + 5]};
}

} // namespace

TEST_CASE("integer linear assembly renders and balances known coefficients") {
    const Question q = make_int_linear_question(
        "z", {{17, true}, {842, false}}, {{-5, true}, {-16, false}}, -39);
    REQUIRE(q.stem_lines.size() == 3);
    CHECK(q.stem_lines[0] == "Solve for the value of z that makes the following equation true.");
    CHECK(q.stem_lines[1].empty());
    CHECK(q.stem_lines[2] == "17z + 842 = -5z - 16");
    CHECK(q.fitb_answer_label == "z");
    CHECK(q.fitb_accepted == std::vector<std::string>{"-39", "-39.", "-39.0", "-39.00"});

    // Constant-first and three-term shapes.
    CHECK(make_int_linear_question("z", {{-2, false}, {-13, true}}, {{10, true}, {90, false}}, -4)
              .stem_lines[2] == "-2 - 13z = 10z + 90");
    CHECK(make_int_linear_question("y", {{-18, true}, {1066, false}},
                                   {{16, true}, {8, false}, {12, true}}, 23)
              .stem_lines[2] == "-18y + 1066 = 16y + 8 + 12y");
    // Unit coefficients drop the digit.
    CHECK(make_int_linear_question("x", {{1, true}, {5, false}}, {{-1, true}, {9, false}}, 2)
              .stem_lines[2] == "x + 5 = -x + 9");

    CHECK_THROWS_AS(
        make_int_linear_question("z", {{17, true}, {842, false}}, {{-5, true}, {-16, false}}, 5),
        std::invalid_argument);
    CHECK_THROWS_AS(make_int_linear_question("", {{1, true}}, {{1, false}}, 1),
                    std::invalid_argument);
}

TEST_CASE("rational linear assembly renders and keys known coefficients") {
    const Question q = make_rat_linear_question("x", 2, 3, 3, 4);
    REQUIRE(q.stem_lines.size() == 4);
    CHECK(q.stem_lines[0] == "Solve for the value of x that makes the following equation true.");
    CHECK(q.stem_lines[1] == "Enter your answer as a rational number.");
    CHECK(q.stem_lines[2].empty());
    CHECK(q.stem_lines[3] == "2x/3 = 3/4");
    CHECK(q.fitb_accepted == std::vector<std::string>{"9/8"});

    CHECK(make_rat_linear_question("y", 4, 3, -5, 3).fitb_accepted ==
          std::vector<std::string>{"-5/4", "-15/12"});
    CHECK(make_rat_linear_question("e", 7, 6, 3, 4).fitb_accepted ==
          std::vector<std::string>{"9/14", "18/28"});
    CHECK(make_rat_linear_question("x", 1, 2, 1, 3).stem_lines[3] == "x/2 = 1/3");
    CHECK(make_rat_linear_question("x", -1, 2, 1, 3).stem_lines[3] == "-x/2 = 1/3");

    CHECK_THROWS_AS(make_rat_linear_question("x", 2, 4, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_rat_linear_question("x", 0, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_rat_linear_question("x", 2, 3, 3, 0), std::invalid_argument);
}

TEST_CASE("generated integer equations always accept exactly their solution") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_linear_int_int(stream);
        REQUIRE(q.kind == QuestionKind::FITB);
        REQUIRE(q.stem_lines.size() == 3);
        REQUIRE(q.fitb_answer_label.size() == 1);
        const char var = q.fitb_answer_label[0];
        CHECK(std::string("xyze").find(var) != std::string::npos);

        const oracle::Frac solution = oracle::solve_linear(q.stem_lines[2], var);
        CHECK(solution.d == 1); // integer by construction
        REQUIRE(q.fitb_accepted.size() == 4);
        for (const auto& form : q.fitb_accepted) {
            oracle::Frac parsed;
            REQUIRE(oracle::parse_decimal(form, parsed));
            CHECK(oracle::feq(parsed, solution));
            CHECK(oracle::equation_balances(q.stem_lines[2], var, parsed));
        }
    }
}

TEST_CASE("generated rational equations accept exactly their solution") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_linear_rat_rat(stream);
        REQUIRE(q.stem_lines.size() == 4);
        const char var = q.fitb_answer_label[0];
        const oracle::Frac solution = oracle::solve_linear(q.stem_lines[3], var);
        CHECK(solution.d > 1); // never an integer
        REQUIRE(!q.fitb_accepted.empty());
        REQUIRE(q.fitb_accepted.size() <= 2);
        for (const auto& form : q.fitb_accepted) {
            oracle::Frac parsed;
            REQUIRE(oracle::parse_answer_form(form, parsed));
            CHECK(oracle::feq(parsed, solution));
        }
    }
}

TEST_CASE("correlation questions key the sample correlation of their data") {
    int negatives = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        RngStream stream(seed, 0);
        const auto [q, data] = gen_correlation_mc(stream);
        check_labels_in_order(q);
        REQUIRE(q.mc_options.size() == 5);

        const double r = oracle::pearson(data.x, data.y);
        const std::string expected = oracle::round2_text(r);
        CHECK(correct_option(q).display == expected);
        negatives += r < 0 ? 1 : 0;

        // Displayed magnitude keeps away from 0 and 1.
        const double mag = std::abs(r);
        CHECK(mag > 0.35);
        CHECK(mag < 0.95);
        // The sign-flipped twin is among the distractors.
        bool has_flip = false;
        for (const auto& opt : q.mc_options)
            has_flip = has_flip || (!opt.is_correct && opt.display == oracle::round2_text(-r));
        CHECK(has_flip);
    }
    CHECK(negatives > 30);
    CHECK(negatives < 120);
}

TEST_CASE("trapezoid questions carry consistent geometry and options") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        RngStream area_stream(seed, 0);
        RngStream perim_stream(seed, 0);
        const auto [qa, ta] = gen_trapezoid_mc(area_stream, TrapezoidAsk::Area);
        const auto [qp, tp] = gen_trapezoid_mc(perim_stream, TrapezoidAsk::Perimeter);
        check_labels_in_order(qa);
        check_labels_in_order(qp);
        REQUIRE(qa.mc_options.size() == 4);

        // Same stream, same figure; only the asked quantity changes.
        CHECK(ta.vertices == tp.vertices);

        const double area = 0.5 * static_cast<double>(ta.base1 + ta.base2) *
                            static_cast<double>(ta.height);
        double perimeter = 0.0;
        for (int i = 0; i < 4; ++i) {
            const auto& p = ta.vertices[static_cast<std::size_t>(i)];
            const auto& q2 = ta.vertices[static_cast<std::size_t>((i + 1) % 4)];
            const double dx = static_cast<double>(q2.x - p.x);
            const double dy = static_cast<double>(q2.y - p.y);
            perimeter += std::sqrt(dx * dx + dy * dy);
        }
        CHECK(oracle::eval_radical_text(correct_option(qa).display) ==
              doctest::Approx(area).epsilon(1e-9));
        CHECK(oracle::eval_radical_text(correct_option(qp).display) ==
              doctest::Approx(perimeter).epsilon(1e-9));
        for (const auto& opt : qa.mc_options)
            if (!opt.is_correct)
                CHECK(std::abs(oracle::eval_radical_text(opt.display) - area) > 1e-6);
        for (const auto& opt : qp.mc_options)
            if (!opt.is_correct)
                CHECK(std::abs(oracle::eval_radical_text(opt.display) - perimeter) > 1e-6);

        CHECK(qa.stem_lines[0] ==
              "Which of the following choices is the area of the figure shown below?");
        CHECK(qp.stem_lines[0] ==
              "Which of the following choices is the perimeter of the figure shown below?");
    }
}

TEST_CASE("trapezoid option values are area, perimeter, and the two misreads") {
    RngStream stream(11, 0);
    const auto [q, t] = gen_trapezoid_mc(stream, TrapezoidAsk::Area);
    (void)q;
    const auto values = trapezoid_option_values(t);
    REQUIRE(values.size() == 4);
    CHECK(values[0] == RadicalSum(t.area));
    CHECK(values[1] == t.perimeter);
    CHECK(values[2].value() < t.perimeter.value());
    CHECK(values[3] == RadicalSum(Rational(t.base1 * t.height)));
}

TEST_CASE("factored quadratics key their true roots and only those") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_factor_quadratic(stream);
        check_labels_in_order(q);
        REQUIRE(q.mc_options.size() == 4);

        long long c2 = 0, c1 = 0, c0 = 0;
        oracle::parse_quadratic(q.stem_lines[0], c2, c1, c0);
        CHECK(c2 >= 1);
        CHECK(c2 <= 3);
        const auto value_at = [&](long long x) { return c2 * x * x + c1 * x + c0; };

        for (const auto& opt : q.mc_options) {
            long long lo = 0, hi = 0;
            REQUIRE(oracle::parse_root_pair(opt.display, lo, hi));
            CHECK(lo < hi);
            const bool both_roots = value_at(lo) == 0 && value_at(hi) == 0;
            CHECK(both_roots == opt.is_correct);
        }
    }
}

TEST_CASE("binomial expansion questions accept all orderings") {
    std::set<std::string> labels_seen;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_expand_binomial(stream);
        REQUIRE(q.kind == QuestionKind::FITB);
        REQUIRE(q.fitb_accepted.size() == 12);
        const auto [first, second] = symbols_from(q.fitb_answer_label);
        CHECK(q.stem_lines[0] == std::string("Expand (") + first + " + " + second + ")^2.");
        labels_seen.insert(q.fitb_answer_label);
        for (const auto& form : q.fitb_accepted) {
            for (const auto& probe :
                 {std::pair{2LL, 3LL}, std::pair{-1LL, 4LL}, std::pair{5LL, 7LL}}) {
                CHECK(oracle::eval_monomial_sum(form, first, probe.first, second, probe.second) ==
                      (probe.first + probe.second) * (probe.first + probe.second));
            }
        }
    }
    CHECK(labels_seen.size() == 4); // both symbol pairs in both orders
}

TEST_CASE("expansion MC distractors all fail a probe the key passes") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_expand_binomial_mc(stream);
        check_labels_in_order(q);
        REQUIRE(q.mc_options.size() == 4);
        const auto [first, second] = symbols_from(q.stem_lines[0]);
        for (const auto& opt : q.mc_options) {
            bool matches_all = true;
            for (const auto& probe :
                 {std::pair{2LL, 3LL}, std::pair{-1LL, 4LL}, std::pair{5LL, 7LL}}) {
                matches_all =
                    matches_all &&
                    oracle::eval_monomial_sum(opt.display, first, probe.first, second,
                                              probe.second) ==
                        (probe.first + probe.second) * (probe.first + probe.second);
            }
            CHECK(matches_all == opt.is_correct);
        }
    }
}

TEST_CASE("dice questions key the exact probability display") {
    std::set<long long> targets;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_dice_sum_mc(stream);
        check_labels_in_order(q);
        REQUIRE(q.mc_options.size() == 4);
        const long long target = oracle::integer_after(q.stem_lines[0], "dice is ");
        targets.insert(target);
        REQUIRE(target >= 2);
        REQUIRE(target <= 12);
        const std::string expected =
            oracle::round2_text(oracle::fval(oracle::dice_probability(static_cast<int>(target))));
        CHECK(correct_option(q).display == expected);
        for (const auto& opt : q.mc_options)
            if (!opt.is_correct) CHECK(opt.display != expected);
    }
    CHECK(targets.size() == 11);
}

TEST_CASE("z-score questions accept every spelling of the rounded value") {
    bool saw_zero = false;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        RngStream stream(seed, 0);
        const Question q = gen_zscore(stream);
        REQUIRE(q.stem_lines.size() == 2);
        CHECK(q.stem_lines[1] == "Give your answer to two decimal places.");
        CHECK(q.fitb_answer_label == "z");

        const long long x = oracle::integer_after(q.stem_lines[0], "x = ");
        const long long mu = oracle::integer_after(q.stem_lines[0], "mean ");
        const long long sd = oracle::integer_after(q.stem_lines[0], "standard deviation ");
        REQUIRE(sd > 0);
        // x is built from quarter-sigma steps, so z is exact in hundredths.
        const oracle::Frac z = oracle::frac(x - mu, sd);
        CHECK((100 * (x - mu)) % sd == 0);
        for (const auto& form : q.fitb_accepted) {
            oracle::Frac parsed;
            REQUIRE(oracle::parse_decimal(form, parsed));
            CHECK(oracle::feq(parsed, z));
        }
        if (x == mu) {
            saw_zero = true;
            CHECK(q.fitb_accepted == std::vector<std::string>{"0.00", "0.0", "0", ".00"});
        }
    }
    CHECK(saw_zero);
}

TEST_CASE("histogram questions match the skewness of their sample") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RngStream stream(seed, 0);
        const auto [q, draw] = gen_histogram_shape(stream);
        check_labels_in_order(q);
        REQUIRE(q.mc_options.size() == 3);
        CHECK(draw.values.size() >= 80);
        CHECK(draw.values.size() <= 150);
        CHECK(draw.bin_count >= 8);
        CHECK(draw.bin_count <= 12);

        const double g1 = oracle::skewness(draw.values);
        const std::string& key = correct_option(q).display;
        if (key == "symmetric") CHECK(std::abs(g1) <= 0.3);
        if (key == "skewed right") CHECK(g1 >= 0.9);
        if (key == "skewed left") CHECK(g1 <= -0.9);
    }
}

TEST_CASE("degenerate bounds fail loudly instead of looping") {
    RngStream stream(1, 0);
    RatLinearBounds impossible;
    impossible.num_min = 2;
    impossible.num_max = 2;
    impossible.den_min = 2;
    impossible.den_max = 2; // gcd(2, 2) > 1 always
    CHECK_THROWS_AS(gen_linear_rat_rat(stream, impossible), std::runtime_error);

    TrapezoidBounds tiny;
    tiny.grid_extent = 3;
    CHECK_THROWS_AS(gen_trapezoid_mc(stream, TrapezoidAsk::Area, tiny), std::runtime_error);
}

TEST_CASE("titles follow the family numbering schemes") {
    CHECK(make_title("Qcorr", 29) == "Qcorr0029");
    CHECK(make_title("LinEqIntCffIntSol", 31) == "LinEqIntCffIntSol-0031");
    CHECK(make_title("FactorQuad", 1) == "FactorQuad-0001");
    CHECK(make_title("TrapezoidArea", 12345) == "TrapezoidArea-12345");
}

TEST_CASE("the family registry is complete and checkable") {
    const auto& names = family_names();
    CHECK(names.size() == 11);
    for (const auto& name : names) CHECK(is_registered_family(name));
    CHECK_FALSE(is_registered_family("NoSuchFamily"));
}

TEST_CASE("assemble_pool is deterministic and extension-stable") {
    const GeneratedPool a = assemble_pool("Qcorr", 4, 2024, 29);
    const GeneratedPool b = assemble_pool("Qcorr", 4, 2024, 29);
    CHECK(a.pool_name == "Qcorr");
    CHECK(a.questions == b.questions);
    CHECK(a.asset_jobs.size() == b.asset_jobs.size());
    CHECK(a.questions[0].title == "Qcorr0029");
    CHECK(a.questions[3].title == "Qcorr0032");

    // Growing the pool must not disturb the questions already generated.
    const GeneratedPool longer = assemble_pool("Qcorr", 6, 2024, 29);
    for (std::size_t i = 0; i < 4; ++i) CHECK(longer.questions[i] == a.questions[i]);

    const GeneratedPool other_seed = assemble_pool("Qcorr", 4, 2025, 29);
    CHECK(other_seed.questions != a.questions);

    CHECK_THROWS_AS(assemble_pool("NoSuchFamily", 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(assemble_pool("Qcorr", 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(assemble_pool("Qcorr", 1, 0, -1), std::invalid_argument);
}

TEST_CASE("assemble_pool wires asset references to rendering jobs") {
    const GeneratedPool scatter = assemble_pool("Qcorr", 3, 7, 1);
    REQUIRE(scatter.asset_jobs.size() == 3);
    CHECK(scatter.questions[0].asset_ref == "correlation0001.svg");
    CHECK(scatter.questions[2].asset_ref == "correlation0003.svg");

    const GeneratedPool trap = assemble_pool("TrapezoidPerimeter", 2, 7, 5);
    // One figure plus four typeset options per question.
    REQUIRE(trap.asset_jobs.size() == 10);
    CHECK(trap.questions[0].asset_ref == "trapezoidperimeter0005.svg");
    CHECK(trap.questions[1].asset_ref == "trapezoidperimeter0006.svg");
    for (const auto& q : trap.questions)
        for (const auto& opt : q.mc_options) {
            CHECK(!opt.asset_ref.empty());
            CHECK(opt.asset_ref.find("opt" + opt.label) != std::string::npos);
        }

    const GeneratedPool hist = assemble_pool("HistogramShape", 2, 7, 1);
    REQUIRE(hist.asset_jobs.size() == 2);
    CHECK(hist.questions[1].asset_ref == "histogram0002.svg");

    const GeneratedPool plain = assemble_pool("ZScore", 2, 7, 1);
    CHECK(plain.asset_jobs.empty());
    CHECK(plain.questions[0].asset_ref.empty());
}
