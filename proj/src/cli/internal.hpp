#ifndef EDSENSE_SRC_CLI_INTERNAL_HPP
#define EDSENSE_SRC_CLI_INTERNAL_HPP

#include <ostream>
#include <string>

#include "edsense/mc.hpp"

namespace edsense::cli {

// Shortest-unambiguous is not required; every float is written with 17
// significant digits so rows round-trip exactly.
std::string format_double(double v);

struct CurveRow {
    double snr_db = 0.0;
    double q = 0.0;
    double u = 0.0;
    std::string metric;
    std::string method;
    double value = 0.0;
    double est_error = 0.0;
};

void write_curve_header(std::ostream& out);
void write_curve_row(std::ostream& out, const CurveRow& row);

class Checker {
public:
    explicit Checker(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& name, const std::string& detail);
    void section(const std::string& title);

    int passed() const { return passed_; }
    int failed() const { return failed_; }

private:
    std::ostream& out_;
    int passed_ = 0;
    int failed_ = 0;
};

struct ValidateOptions {
    McConfig mc;
};

// Runs one named suite (or "all"); returns false on unknown names.
bool run_suite(const std::string& suite, std::ostream& out, const ValidateOptions& options, Checker& checker);

void run_errata(std::ostream& out, Checker& checker);

}  // namespace edsense::cli

#endif  // EDSENSE_SRC_CLI_INTERNAL_HPP
