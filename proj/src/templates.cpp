#include "qbank/templates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qbank/checked_int.hpp"
#include "qbank/expansion.hpp"
#include "qbank/format.hpp"
#include "qbank/polynomial.hpp"
#include "qbank/radical.hpp"
#include "qbank/rational.hpp"

namespace qbank {

namespace {

constexpr int kMaxRetries = 100;

[[noreturn]] void degenerate(const char* family) {
    throw std::runtime_error(std::string("generator bounds degenerate for ") + family);
}

std::int64_t draw_nonzero(RngStream& stream, std::int64_t lo, std::int64_t hi) {
    for (int i = 0; i < kMaxRetries; ++i) {
        const std::int64_t v = stream.uniform_int(lo, hi);
        if (v != 0) return v;
    }
    throw std::runtime_error("draw_nonzero: range admits only zero");
}

const std::array<std::string, 4> kVariables = {"x", "y", "z", "e"};

// Seeded Fisher-Yates, then labels assigned in final order.
void shuffle_and_label(std::vector<McOption>& options, RngStream& stream) {
    for (std::size_t i = options.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(stream.uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(options[i - 1], options[j]);
    }
    for (std::size_t i = 0; i < options.size(); ++i)
        options[i].label = std::string(1, static_cast<char>('a' + i));
}

std::string render_side(const std::vector<EquationTerm>& terms, const std::string& var) {
    std::string out;
    for (const auto& t : terms) {
        const std::int64_t mag = t.coef < 0 ? checked_negate(t.coef) : t.coef;
        if (out.empty())
            out += t.coef < 0 ? "-" : "";
        else
            out += t.coef < 0 ? " - " : " + ";
        if (t.is_var) {
            if (mag != 1) out += std::to_string(mag);
            out += var;
        } else {
            out += std::to_string(mag);
        }
    }
    return out;
}

// Exact round-half-away-from-zero of 100*p for a nonnegative rational p.
std::int64_t rational_hundredths(const Rational& p) {
    const std::int64_t n = p.num();
    const std::int64_t d = p.den();
    return (checked_add(checked_mul(200, n), d)) / (2 * d);
}

double sample_skewness(const std::vector<double>& values) {
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    return m3 / std::pow(m2, 1.5);
}

std::string pad4(int index) {
    std::string digits = std::to_string(index);
    while (digits.size() < 4) digits.insert(digits.begin(), '0');
    return digits;
}

std::string lowercase(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

Question make_int_linear_question(const std::string& variable,
                                  const std::vector<EquationTerm>& left,
                                  const std::vector<EquationTerm>& right, std::int64_t solution) {
    if (variable.empty() || left.empty() || right.empty())
        throw std::invalid_argument("make_int_linear_question: empty variable or side");
    const auto side_value = [solution](const std::vector<EquationTerm>& terms) {
        std::int64_t total = 0;
        for (const auto& t : terms)
            total = checked_add(total, t.is_var ? checked_mul(t.coef, solution) : t.coef);
        return total;
    };
    if (side_value(left) != side_value(right))
        throw std::invalid_argument("make_int_linear_question: solution does not balance equation");

    Question q;
    q.kind = QuestionKind::FITB;
    q.stem_lines = {"Solve for the value of " + variable + " that makes the following equation true.",
                    "",
                    render_side(left, variable) + " = " + render_side(right, variable)};
    q.fitb_answer_label = variable;
    q.fitb_accepted = decimal_forms(solution);
    return q;
}

Question gen_linear_int_int(RngStream& stream, const IntLinearBounds& bounds) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const std::int64_t s = stream.uniform_int(bounds.solution_min, bounds.solution_max);
        const std::int64_t shape = stream.uniform_int(0, 2); // 0: az+b, 1: b+az, 2: three-term right
        const std::int64_t a = draw_nonzero(stream, bounds.coef_min, bounds.coef_max);
        const std::int64_t c = draw_nonzero(stream, bounds.coef_min, bounds.coef_max);
        const std::int64_t e = shape == 2 ? draw_nonzero(stream, bounds.coef_min, bounds.coef_max) : 0;
        if (shape == 2 && c + e == 0) continue;
        if (a - (c + e) == 0) continue;
        const std::int64_t d = draw_nonzero(stream, bounds.free_const_min, bounds.free_const_max);
        // Solution first; the left constant is whatever makes it come true.
        const std::int64_t b = checked_add(checked_mul(checked_sub(c + e, a), s), d);
        if (b == 0 || b > bounds.solved_const_limit || b < -bounds.solved_const_limit) continue;

        const std::string& v = kVariables[static_cast<std::size_t>(stream.uniform_int(0, 3))];
        std::vector<EquationTerm> left, right;
        if (shape == 1)
            left = {{b, false}, {a, true}};
        else
            left = {{a, true}, {b, false}};
        right = {{c, true}, {d, false}};
        if (shape == 2) right.push_back({e, true});
        return make_int_linear_question(v, left, right, s);
    }
    degenerate("LinEqIntCffIntSol");
}

Question make_rat_linear_question(const std::string& variable, std::int64_t a, std::int64_t b,
                                  std::int64_t c, std::int64_t d) {
    if (variable.empty() || a == 0 || c == 0 || b < 1 || d < 1)
        throw std::invalid_argument("make_rat_linear_question: degenerate equation");
    if (std::gcd(a < 0 ? -a : a, b) != 1 || std::gcd(c < 0 ? -c : c, d) != 1)
        throw std::invalid_argument("make_rat_linear_question: fractions must be in lowest terms");
    const Rational solution = rational_reduce(checked_mul(c, b), checked_mul(d, a));

    std::string lhs;
    if (a == -1)
        lhs = "-";
    else if (a != 1)
        lhs = std::to_string(a);
    lhs += variable + "/" + std::to_string(b);
    const std::string rhs = std::to_string(c) + "/" + std::to_string(d);

    // A student may clear denominators with the least common multiple or with
    // the plain product b*d; both resulting spellings are accepted.
    const std::int64_t k = std::gcd(b, d);
    std::vector<std::int64_t> multipliers = {1};
    if (k > 1) multipliers.push_back(k);

    Question q;
    q.kind = QuestionKind::FITB;
    q.stem_lines = {"Solve for the value of " + variable + " that makes the following equation true.",
                    "Enter your answer as a rational number.",
                    "",
                    lhs + " = " + rhs};
    q.fitb_answer_label = variable;
    q.fitb_accepted = rational_equivalents(solution, multipliers);
    return q;
}

Question gen_linear_rat_rat(RngStream& stream, const RatLinearBounds& bounds) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const std::int64_t a = draw_nonzero(stream, bounds.num_min, bounds.num_max);
        const std::int64_t b = stream.uniform_int(bounds.den_min, bounds.den_max);
        const std::int64_t c = draw_nonzero(stream, bounds.num_min, bounds.num_max);
        const std::int64_t d = stream.uniform_int(bounds.den_min, bounds.den_max);
        if (b < 1 || d < 1) continue;
        if (std::gcd(a < 0 ? -a : a, b) != 1 || std::gcd(c < 0 ? -c : c, d) != 1) continue;
        if (rational_reduce(checked_mul(c, b), checked_mul(d, a)).is_integer()) continue;

        const std::string& v = kVariables[static_cast<std::size_t>(stream.uniform_int(0, 3))];
        return make_rat_linear_question(v, a, b, c, d);
    }
    degenerate("LinEqRatCffRatAns");
}

std::pair<Question, SampleXY> gen_correlation_mc(RngStream& stream) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const CorrelationDraw draw = draw_correlation_params(stream);
        const SampleXY sample = sample_bivariate_normal(draw, stream);
        const std::int64_t rh = round_to_hundredths(sample_correlation(sample));
        const std::int64_t mag = rh < 0 ? -rh : rh;
        // Keep displayed correlations unambiguous: away from 0 and +-1.
        if (mag <= 35 || mag >= 95) continue;

        std::int64_t near_one = 0;
        do {
            near_one = round_to_hundredths(stream.uniform(0.90, 0.99));
        } while (near_one == mag);
        const std::int64_t near_zero = round_to_hundredths(stream.uniform(-0.08, 0.08));

        std::vector<McOption> options;
        for (const std::int64_t value : {rh, -rh, near_one, near_zero, -near_one}) {
            McOption opt;
            opt.display = format_hundredths(value);
            opt.is_correct = value == rh && options.empty();
            options.push_back(opt);
        }
        shuffle_and_label(options, stream);

        Question q;
        q.kind = QuestionKind::MC;
        q.stem_lines = {
            "Which of the following choices best describes the correlation of the scatterplot below?"};
        q.mc_options = std::move(options);
        return {std::move(q), sample};
    }
    degenerate("Qcorr");
}

std::vector<RadicalSum> trapezoid_option_values(const LatticeTrapezoid& t) {
    return {RadicalSum(t.area),
            t.perimeter,
            t.perimeter - edge_length(t.vertices, 3),
            RadicalSum(Rational(checked_mul(t.base1, t.height)))};
}

std::pair<Question, LatticeTrapezoid> gen_trapezoid_mc(RngStream& stream, TrapezoidAsk ask,
                                                       const TrapezoidBounds& bounds) {
    if (bounds.grid_extent < 4 || bounds.height_max < 2)
        throw std::runtime_error("generator bounds degenerate for trapezoid families");
    const std::int64_t h_max = std::min(bounds.height_max, bounds.grid_extent);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::array<Point, 4> vertices;
        if (stream.coin_flip()) {
            // Right trapezoid: vertical left leg, slanted right leg.
            const std::int64_t b1 = stream.uniform_int(3, bounds.grid_extent);
            const std::int64_t b2 = stream.uniform_int(2, b1 - 1);
            const std::int64_t h = stream.uniform_int(2, h_max);
            if (is_perfect_square((b1 - b2) * (b1 - b2) + h * h)) continue;
            vertices = {Point{0, 0}, Point{b1, 0}, Point{b2, h}, Point{0, h}};
        } else {
            // Isosceles trapezoid: both legs slanted, mirror images.
            const std::int64_t b1 = stream.uniform_int(4, bounds.grid_extent);
            const std::int64_t k_max = (b1 - 2) / 2;
            if (k_max < 1) continue;
            const std::int64_t k = stream.uniform_int(1, k_max);
            const std::int64_t h = stream.uniform_int(2, h_max);
            if (is_perfect_square(k * k + h * h)) continue;
            vertices = {Point{0, 0}, Point{b1, 0}, Point{b1 - k, h}, Point{k, h}};
        }
        const LatticeTrapezoid t = make_lattice_trapezoid(vertices);

        const std::vector<RadicalSum> values = trapezoid_option_values(t);
        bool collision = false;
        for (std::size_t i = 0; i < values.size() && !collision; ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (values[i] == values[j]) { collision = true; break; }
        if (collision) continue;

        const std::size_t correct = ask == TrapezoidAsk::Area ? 0 : 1;
        std::vector<McOption> options;
        for (std::size_t i = 0; i < values.size(); ++i) {
            McOption opt;
            opt.display = radical_to_string(values[i]);
            opt.is_correct = i == correct;
            options.push_back(opt);
        }
        shuffle_and_label(options, stream);

        Question q;
        q.kind = QuestionKind::MC;
        q.stem_lines = {std::string("Which of the following choices is the ") +
                        (ask == TrapezoidAsk::Area ? "area" : "perimeter") +
                        " of the figure shown below?"};
        q.mc_options = std::move(options);
        return {std::move(q), t};
    }
    degenerate("trapezoid families");
}

Question gen_factor_quadratic(RngStream& stream, const QuadBounds& bounds) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const std::int64_t r1 = draw_nonzero(stream, bounds.root_min, bounds.root_max);
        const std::int64_t r2 = draw_nonzero(stream, bounds.root_min, bounds.root_max);
        if (r2 == r1 || r2 == -r1) continue;
        const std::int64_t lead = stream.uniform_int(bounds.lead_min, bounds.lead_max);
        if (lead == 0) continue;
        const IntPolynomial poly = quadratic_from_roots(Rational(r1), Rational(r2), lead);

        // Option values as root pairs; distractors follow familiar mistakes:
        // reading (x-r)(x-s) with flipped signs, flipping just one sign, and
        // reading the roots straight off the coefficients.
        const bool flip_first = stream.coin_flip();
        const std::array<std::pair<std::int64_t, std::int64_t>, 4> pairs = {
            std::pair{r1, r2},
            std::pair{-r1, -r2},
            flip_first ? std::pair{-r1, r2} : std::pair{r1, -r2},
            std::pair{-poly.coefficients[1], poly.coefficients[0]}};

        auto sorted = [](std::pair<std::int64_t, std::int64_t> p) {
            if (p.first > p.second) std::swap(p.first, p.second);
            return p;
        };
        bool collision = false;
        for (std::size_t i = 0; i < pairs.size() && !collision; ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j)
                if (sorted(pairs[i]) == sorted(pairs[j])) { collision = true; break; }
        if (collision) continue;

        std::vector<McOption> options;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto [lo, hi] = sorted(pairs[i]);
            McOption opt;
            opt.display = "x = " + std::to_string(lo) + " or x = " + std::to_string(hi);
            opt.is_correct = i == 0;
            options.push_back(opt);
        }
        shuffle_and_label(options, stream);

        Question q;
        q.kind = QuestionKind::MC;
        q.stem_lines = {"Solve " + polynomial_to_string(poly, "x") + " = 0."};
        q.mc_options = std::move(options);
        return q;
    }
    degenerate("FactorQuad");
}

namespace {

std::pair<std::string, std::string> draw_symbol_pair(RngStream& stream) {
    static const std::array<std::pair<std::string, std::string>, 4> kPairs = {
        std::pair<std::string, std::string>{"b", "a"},
        {"a", "b"},
        {"y", "x"},
        {"x", "y"}};
    return kPairs[static_cast<std::size_t>(stream.uniform_int(0, 3))];
}

} // namespace

Question gen_expand_binomial(RngStream& stream) {
    const auto [first, second] = draw_symbol_pair(stream);
    const std::string lo = std::min(first, second);
    const std::string hi = std::max(first, second);

    Question q;
    q.kind = QuestionKind::FITB;
    q.stem_lines = {"Expand (" + first + " + " + second + ")^2."};
    q.fitb_answer_label = "(" + first + " + " + second + ")^2";
    q.fitb_accepted = enumerate_expansion_forms(lo, hi);
    return q;
}

Question gen_expand_binomial_mc(RngStream& stream) {
    const auto [first, second] = draw_symbol_pair(stream);
    const std::string lo = std::min(first, second);
    const std::string hi = std::max(first, second);
    const std::string cross = "2" + lo + hi;

    std::vector<McOption> options;
    const std::array<std::string, 4> displays = {
        lo + "^2 + " + cross + " + " + hi + "^2",
        buggy_expansion_form(lo, hi),
        lo + "^2 + " + lo + hi + " + " + hi + "^2",
        lo + "^2 - " + cross + " + " + hi + "^2"};
    for (std::size_t i = 0; i < displays.size(); ++i) {
        McOption opt;
        opt.display = displays[i];
        opt.is_correct = i == 0;
        options.push_back(opt);
    }
    shuffle_and_label(options, stream);

    Question q;
    q.kind = QuestionKind::MC;
    q.stem_lines = {"Which of the following is the expansion of (" + first + " + " + second +
                    ")^2?"};
    q.mc_options = std::move(options);
    return q;
}

Question gen_dice_sum_mc(RngStream& stream) {
    const int target = static_cast<int>(stream.uniform_int(2, 12));
    const std::int64_t correct = rational_hundredths(dice_sum_probability(target));

    std::vector<std::int64_t> values = {correct};
    auto try_add = [&values](std::int64_t candidate) {
        if (values.size() >= 4) return;
        for (const std::int64_t v : values)
            if (v == candidate) return;
        values.push_back(candidate);
    };
    // The "target over 36" misread first, then probabilities of neighboring
    // targets, reaching outward until four distinct displays exist.
    try_add(rational_hundredths(rational_reduce(target, 36)));
    for (int distance = 1; distance <= 10 && values.size() < 4; ++distance) {
        if (target - distance >= 2) try_add(rational_hundredths(dice_sum_probability(target - distance)));
        if (target + distance <= 12) try_add(rational_hundredths(dice_sum_probability(target + distance)));
    }

    std::vector<McOption> options;
    for (std::size_t i = 0; i < values.size(); ++i) {
        McOption opt;
        opt.display = format_hundredths(values[i]);
        opt.is_correct = i == 0;
        options.push_back(opt);
    }
    shuffle_and_label(options, stream);

    Question q;
    q.kind = QuestionKind::MC;
    q.stem_lines = {"What is the probability that the sum of two dice is " +
                    std::to_string(target) + "?"};
    q.mc_options = std::move(options);
    return q;
}

Question gen_zscore(RngStream& stream, const ZScoreBounds& bounds) {
    const std::int64_t mu = 10 * stream.uniform_int(3, 12);
    const std::int64_t sigma = 4 * stream.uniform_int(1, 5);
    const std::int64_t quarters = stream.uniform_int(bounds.quarter_min, bounds.quarter_max);
    const std::int64_t x = mu + sigma * quarters / 4; // sigma is a multiple of 4

    Question q;
    q.kind = QuestionKind::FITB;
    q.stem_lines = {"Compute the z-score of x = " + std::to_string(x) +
                        " for a distribution with mean " + std::to_string(mu) +
                        " and standard deviation " + std::to_string(sigma) + ".",
                    "Give your answer to two decimal places."};
    q.fitb_answer_label = "z";
    q.fitb_accepted = rounded_answer_forms(25 * quarters);
    return q;
}

std::pair<Question, HistogramDraw> gen_histogram_shape(RngStream& stream) {
    const std::int64_t shape = stream.uniform_int(0, 2); // 0 symmetric, 1 right, 2 left
    const int n = static_cast<int>(stream.uniform_int(80, 150));
    const int bins = static_cast<int>(stream.uniform_int(8, 12));

    std::vector<double> values;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        values.clear();
        values.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (shape == 0) {
                values.push_back(stream.normal());
            } else {
                const double draw = -std::log(1.0 - stream.uniform01());
                values.push_back(shape == 1 ? draw : -draw);
            }
        }
        // Keep each sample well inside its class so the shape is visually and
        // numerically unambiguous.
        const double g1 = sample_skewness(values);
        if (shape == 0 && std::abs(g1) <= 0.3) break;
        if (shape == 1 && g1 >= 0.9) break;
        if (shape == 2 && g1 <= -0.9) break;
        if (attempt == kMaxRetries - 1) degenerate("HistogramShape");
    }

    static const std::array<std::string, 3> kShapeNames = {"symmetric", "skewed right",
                                                           "skewed left"};
    std::vector<McOption> options;
    for (std::size_t i = 0; i < kShapeNames.size(); ++i) {
        McOption opt;
        opt.display = kShapeNames[i];
        opt.is_correct = static_cast<std::int64_t>(i) == shape;
        options.push_back(opt);
    }
    shuffle_and_label(options, stream);

    Question q;
    q.kind = QuestionKind::MC;
    q.stem_lines = {"Which of the following best describes the shape of the histogram shown below?"};
    q.mc_options = std::move(options);
    return {std::move(q), HistogramDraw{std::move(values), bins}};
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> kNames = {
        "Qcorr",         "TrapezoidArea",  "TrapezoidPerimeter", "LinEqIntCffIntSol",
        "LinEqRatCffRatAns", "FactorQuad", "ExpandBinomial",     "ExpandBinomialMC",
        "DiceSum",       "ZScore",         "HistogramShape"};
    return kNames;
}

bool is_registered_family(const std::string& name) {
    const auto& names = family_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string make_title(const std::string& family, int index) {
    // The correlation family writes its index directly after the name; the
    // equation families put a dash first. Both appear in uploaded pools.
    if (family == "Qcorr") return family + pad4(index);
    return family + "-" + pad4(index);
}

GeneratedPool assemble_pool(const std::string& family, int count, std::uint64_t master_seed,
                            int start_index, const GenBounds& bounds) {
    if (!is_registered_family(family))
        throw std::invalid_argument("unknown family: " + family);
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    if (start_index < 0) throw std::invalid_argument("start index must be nonnegative");

    GeneratedPool pool;
    pool.pool_name = family;
    for (int ordinal = 0; ordinal < count; ++ordinal) {
        RngStream stream(master_seed, static_cast<std::uint64_t>(ordinal));
        const int index = start_index + ordinal;
        const std::string suffix = pad4(index);

        if (family == "Qcorr") {
            auto [q, data] = gen_correlation_mc(stream);
            const std::string filename = "correlation" + suffix + ".svg";
            q.asset_ref = filename;
            pool.asset_jobs.push_back(ScatterplotJob{shift_to_first_quadrant(data), filename, 500});
            q.title = make_title(family, index);
            pool.questions.push_back(std::move(q));
        } else if (family == "TrapezoidArea" || family == "TrapezoidPerimeter") {
            const TrapezoidAsk ask =
                family == "TrapezoidArea" ? TrapezoidAsk::Area : TrapezoidAsk::Perimeter;
            auto [q, t] = gen_trapezoid_mc(stream, ask, bounds.trapezoid);
            const std::string base = lowercase(family) + suffix;
            q.asset_ref = base + ".svg";
            pool.asset_jobs.push_back(
                LatticeFigureJob{t, bounds.trapezoid.grid_extent, q.asset_ref});
            const std::vector<RadicalSum> values = trapezoid_option_values(t);
            for (auto& opt : q.mc_options) {
                for (const auto& value : values) {
                    if (radical_to_string(value) == opt.display) {
                        opt.asset_ref = base + "opt" + opt.label + ".svg";
                        pool.asset_jobs.push_back(TypesetJob{value, opt.asset_ref});
                        break;
                    }
                }
            }
            q.title = make_title(family, index);
            pool.questions.push_back(std::move(q));
        } else if (family == "HistogramShape") {
            auto [q, draw] = gen_histogram_shape(stream);
            const std::string filename = "histogram" + suffix + ".svg";
            q.asset_ref = filename;
            pool.asset_jobs.push_back(
                HistogramJob{std::move(draw.values), draw.bin_count, filename, 500});
            q.title = make_title(family, index);
            pool.questions.push_back(std::move(q));
        } else {
            Question q;
            if (family == "LinEqIntCffIntSol")
                q = gen_linear_int_int(stream, bounds.int_linear);
            else if (family == "LinEqRatCffRatAns")
                q = gen_linear_rat_rat(stream, bounds.rat_linear);
            else if (family == "FactorQuad")
                q = gen_factor_quadratic(stream, bounds.quadratic);
            else if (family == "ExpandBinomial")
                q = gen_expand_binomial(stream);
            else if (family == "ExpandBinomialMC")
                q = gen_expand_binomial_mc(stream);
            else if (family == "DiceSum")
                q = gen_dice_sum_mc(stream);
            else
                q = gen_zscore(stream, bounds.zscore);
            q.title = make_title(family, index);
            pool.questions.push_back(std::move(q));
        }
    }
    return pool;
}

} // namespace qbank
