#pragma once

/// Grade-versus-homework analysis: CSV ingestion, ordinary least squares with
/// R^2, refitting after excluding named students, and the strict
/// "no one below the floor line" check.

#include <string>
#include <utility>
#include <vector>

namespace qbank {

struct GradeRecord {
    std::string student_id;
    double hw_pct = 0.0;     // online homework grade, 0..100
    double course_pct = 0.0; // course grade, 0..100
};

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n = 0;
};

/// Parses "student_id,hw_pct,course_pct" CSV text. Errors carry the 1-based
/// file line of the offending row.
std::vector<GradeRecord> load_grades(const std::string& csv_text);

/// Least-squares course_pct on hw_pct. R^2 = 1 - SSres/SStot, defined as 0
/// when course_pct has no variance. Requires n >= 2 and hw_pct variance > 0.
RegressionFit ols_fit(const std::vector<GradeRecord>& records);

/// (fit on everything, fit without the excluded ids). Unknown ids are
/// ignored; the exclusion must leave at least two records.
std::pair<RegressionFit, RegressionFit> refit_excluding(
    const std::vector<GradeRecord>& records, const std::vector<std::string>& excluded_ids);

/// Records strictly below course = slope * hw + intercept; points on the line
/// do not count.
std::vector<GradeRecord> floor_violations(const std::vector<GradeRecord>& records, double slope,
                                          double intercept);

} // namespace qbank
