#include "qbank/assess.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qbank {

namespace {

[[noreturn]] void row_error(int line, const std::string& what) {
    throw std::runtime_error("row at line " + std::to_string(line) + ": " + what);
}

double parse_pct(const std::string& field, int line, const char* name) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &consumed);
    } catch (const std::exception&) {
        row_error(line, std::string("non-numeric ") + name + " value '" + field + "'");
    }
    if (consumed != field.size())
        row_error(line, std::string("non-numeric ") + name + " value '" + field + "'");
    if (!std::isfinite(value) || value < 0.0 || value > 100.0)
        row_error(line, std::string(name) + " out of range [0, 100]: '" + field + "'");
    return value;
}

} // namespace

std::vector<GradeRecord> load_grades(const std::string& csv_text) {
    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start < csv_text.size()) {
        auto end = csv_text.find('\n', start);
        if (end == std::string::npos) end = csv_text.size();
        lines.push_back(csv_text.substr(start, end - start));
        start = end + 1;
    }
    if (lines.empty() || lines[0] != "student_id,hw_pct,course_pct")
        throw std::runtime_error("line 1: expected header 'student_id,hw_pct,course_pct'");

    std::vector<GradeRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        const int line_no = static_cast<int>(i) + 1;
        if (line.empty()) {
            if (i + 1 == lines.size()) break; // tolerate one trailing newline artifact
            row_error(line_no, "blank line");
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos ||
            line.find(',', c2 + 1) != std::string::npos)
            row_error(line_no, "expected exactly three comma-separated fields");
        GradeRecord r;
        r.student_id = line.substr(0, c1);
        if (r.student_id.empty()) row_error(line_no, "empty student_id");
        r.hw_pct = parse_pct(line.substr(c1 + 1, c2 - c1 - 1), line_no, "hw_pct");
        r.course_pct = parse_pct(line.substr(c2 + 1), line_no, "course_pct");
        records.push_back(std::move(r));
    }
    return records;
}

RegressionFit ols_fit(const std::vector<GradeRecord>& records) {
    const std::size_t n = records.size();
    if (n < 2) throw std::runtime_error("regression needs at least two records");
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& r : records) {
        mean_x += r.hw_pct;
        mean_y += r.course_pct;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& r : records) {
        const double dx = r.hw_pct - mean_x;
        const double dy = r.course_pct - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::runtime_error("regression predictor has zero variance");

    RegressionFit fit;
    fit.n = static_cast<int>(n);
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (syy == 0.0) {
        fit.r_squared = 0.0;
        return fit;
    }
    double ss_res = 0.0;
    for (const auto& r : records) {
        const double resid = r.course_pct - (fit.slope * r.hw_pct + fit.intercept);
        ss_res += resid * resid;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return fit;
}

std::pair<RegressionFit, RegressionFit> refit_excluding(
    const std::vector<GradeRecord>& records, const std::vector<std::string>& excluded_ids) {
    const RegressionFit full = ols_fit(records);
    const std::set<std::string> excluded(excluded_ids.begin(), excluded_ids.end());
    std::vector<GradeRecord> kept;
    kept.reserve(records.size());
    for (const auto& r : records)
        if (!excluded.contains(r.student_id)) kept.push_back(r);
    if (kept.size() < 2) throw std::runtime_error("exclusion leaves fewer than two records");
    return {full, ols_fit(kept)};
}

std::vector<GradeRecord> floor_violations(const std::vector<GradeRecord>& records, double slope,
                                          double intercept) {
    std::vector<GradeRecord> below;
    for (const auto& r : records)
        if (r.course_pct < slope * r.hw_pct + intercept) below.push_back(r);
    return below;
}

} // namespace qbank
