#include <cmath>
#include <cstdio>

#include "internal.hpp"

namespace edsense::cli {

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_curve_header(std::ostream& out) { out << "snr_db,q,u,metric,method,value,est_error\n"; }

void write_curve_row(std::ostream& out, const CurveRow& row)
{
    out << format_double(row.snr_db) << ',' << format_double(row.q) << ',' << format_double(row.u) << ','
        << row.metric << ',' << row.method << ',' << format_double(row.value) << ','
        << format_double(row.est_error) << '\n';
}

void Checker::check(bool ok, const std::string& name, const std::string& detail)
{
    (ok ? passed_ : failed_)++;
    out_ << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) out_ << "  [" << detail << "]";
    out_ << '\n';
}

void Checker::section(const std::string& title) { out_ << "\n== " << title << " ==\n"; }

}  // namespace edsense::cli
