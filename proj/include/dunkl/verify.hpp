#ifndef DUNKL_VERIFY_HPP
#define DUNKL_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "dunkl/bimodgr.hpp"

namespace dunkl {

enum class CheckStatus { pass, fail, skip };

struct Check {
    std::string name;
    CheckStatus status;
    std::string detail;
    long ms = 0;
};

struct CheckReport {
    std::string suite;
    int n = 0;
    std::optional<Rational> c_value; // empty = formal parameter
    std::vector<Check> checks;

    bool passed() const;
    std::string to_json() const; // schema-stable; ms is the only varying field
    std::string to_text() const;
};

struct SuiteOptions {
    std::optional<Rational> c_value; // empty = formal
    int m = 1;
    GrBounds bounds{4, 4};
    int slack = 2;
    std::ostream* progress = nullptr; // per-step progress lines, if set
};

/// Registered suites: dunkl_commute, pbw_slices, heckman, cm_appendix,
/// sc5_radial, twist_lemma, qgr_main, pgr_main, good_values.
CheckReport run_suite(const std::string& name, int n, const SuiteOptions& options = {});

std::vector<std::string> suite_names();

} // namespace dunkl

#endif
