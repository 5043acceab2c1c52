#pragma once

/// Question-family generators. Each family turns a seeded stream into a
/// Question (stem, answer key, distractors) plus whatever figure-rendering
/// work the question needs. assemble_pool maps a family name and a count to a
/// deterministic, titled question list.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qbank/question.hpp"
#include "qbank/rng.hpp"
#include "qbank/stats.hpp"
#include "qbank/trapezoid.hpp"

namespace qbank {

// Draw bounds. Defaults follow the magnitudes the source formats exhibit;
// every field is overridable from the CLI.
struct IntLinearBounds {
    std::int64_t coef_min = -20, coef_max = 20;        // variable coefficients, zero excluded
    std::int64_t solution_min = -50, solution_max = 50;
    std::int64_t free_const_min = -99, free_const_max = 99;
    std::int64_t solved_const_limit = 1100;            // |derived constant| cap
};

struct RatLinearBounds {
    std::int64_t num_min = -9, num_max = 9; // numerators, zero excluded
    std::int64_t den_min = 2, den_max = 9;
};

struct QuadBounds {
    std::int64_t root_min = -9, root_max = 9; // zero roots excluded
    std::int64_t lead_min = 1, lead_max = 3;
};

struct TrapezoidBounds {
    std::int64_t grid_extent = 8;
    std::int64_t height_max = 6;
};

struct ZScoreBounds {
    std::int64_t quarter_min = -12, quarter_max = 12; // z in quarter units
};

struct GenBounds {
    IntLinearBounds int_linear;
    RatLinearBounds rat_linear;
    QuadBounds quadratic;
    TrapezoidBounds trapezoid;
    ZScoreBounds zscore;
};

// Figure-rendering work orders, produced by generators and consumed by the
// render module.
struct ScatterplotJob {
    SampleXY data; // already first-quadrant shifted
    std::string filename;
    int width_px = 500;
};
struct LatticeFigureJob {
    LatticeTrapezoid trapezoid;
    std::int64_t grid_extent = 8;
    std::string filename;
};
struct TypesetJob {
    RadicalSum value;
    std::string filename;
};
struct HistogramJob {
    std::vector<double> values;
    int bin_count = 10;
    std::string filename;
    int width_px = 500;
};
using AssetJob = std::variant<ScatterplotJob, LatticeFigureJob, TypesetJob, HistogramJob>;

struct GeneratedPool {
    std::string pool_name;
    std::vector<Question> questions;
    std::vector<AssetJob> asset_jobs;
};

enum class TrapezoidAsk { Area, Perimeter };

struct HistogramDraw {
    std::vector<double> values;
    int bin_count = 10;
};

// One additive term of a linear equation side: a bare constant, or
// coefficient times the variable.
struct EquationTerm {
    std::int64_t coef = 0;
    bool is_var = false;
};

/// Assembles the fill-in-the-blank question for a concrete integer linear
/// equation with the given solution, exactly as the integer family emits it.
/// Terms render in the order given. Throws std::invalid_argument if the
/// solution does not actually balance the equation.
Question make_int_linear_question(const std::string& variable,
                                  const std::vector<EquationTerm>& left,
                                  const std::vector<EquationTerm>& right, std::int64_t solution);

/// Assembles the fill-in-the-blank question for (a/b) * variable = c/d with
/// both fractions in lowest terms and positive denominators, exactly as the
/// rational family emits it. Throws std::invalid_argument on unreduced or
/// degenerate inputs.
Question make_rat_linear_question(const std::string& variable, std::int64_t a, std::int64_t b,
                                  std::int64_t c, std::int64_t d);

// Family generators. Questions come back untitled and without asset
// filenames; assemble_pool assigns both.
Question gen_linear_int_int(RngStream& stream, const IntLinearBounds& bounds = {});
Question gen_linear_rat_rat(RngStream& stream, const RatLinearBounds& bounds = {});
std::pair<Question, SampleXY> gen_correlation_mc(RngStream& stream);
std::pair<Question, LatticeTrapezoid> gen_trapezoid_mc(RngStream& stream, TrapezoidAsk ask,
                                                       const TrapezoidBounds& bounds = {});
Question gen_factor_quadratic(RngStream& stream, const QuadBounds& bounds = {});
Question gen_expand_binomial(RngStream& stream);
Question gen_expand_binomial_mc(RngStream& stream);
Question gen_dice_sum_mc(RngStream& stream);
Question gen_zscore(RngStream& stream, const ZScoreBounds& bounds = {});
std::pair<Question, HistogramDraw> gen_histogram_shape(RngStream& stream);

/// The four option values of a trapezoid question, in a fixed internal order:
/// area, perimeter, perimeter minus the closing edge, bottom base times
/// height. Options are matched to these by their plain-text rendering.
std::vector<RadicalSum> trapezoid_option_values(const LatticeTrapezoid& t);

/// Registered family names, in registry order.
const std::vector<std::string>& family_names();
bool is_registered_family(const std::string& name);

/// Title for the pool position: "Qcorr0029" (bare style) or
/// "LinEqIntCffIntSol-0031" (dashed style), four-digit zero-padded.
std::string make_title(const std::string& family, int index);

/// Generates `count` questions for a registered family, titled from
/// start_index, one stream per question ordinal. Pure function of its
/// arguments. Throws std::invalid_argument for unknown families or count < 1.
GeneratedPool assemble_pool(const std::string& family, int count, std::uint64_t master_seed,
                            int start_index, const GenBounds& bounds = {});

} // namespace qbank
