#include "edg/report.hpp"

#include <cstdio>
#include <ostream>

namespace edg {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string rate_cell(const std::optional<double>& r, const char* missing) {
  return r ? fmt("%.3f", *r) : std::string(missing);
}

}  // namespace

void write_csv(std::ostream& out, const ConvergenceReport& report, bool header) {
  if (header) out << "method,k,mesh,n,h,dofs,err_u,rate_u,err_sigma,rate_sigma\n";
  const auto ru = report.rates_u();
  const auto rs = report.rates_sigma();
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const ErrorRecord& r = report.records[i];
    out << to_string(report.method) << ',' << report.k << ',' << report.mesh << ',' << r.n << ','
        << fmt("%.17g", r.h) << ',' << r.n_dofs << ',' << fmt("%.6e", r.err_u) << ','
        << (i > 0 && ru[i - 1] ? fmt("%.4f", *ru[i - 1]) : "") << ',' << fmt("%.6e", r.err_sigma) << ','
        << (i > 0 && rs[i - 1] ? fmt("%.4f", *rs[i - 1]) : "") << '\n';
  }
}

void write_markdown(std::ostream& out, const ConvergenceReport& report) {
  const auto ru = report.rates_u();
  const auto rs = report.rates_sigma();
  out << "### " << (report.method == Method::EDG ? "EDG" : "HDG") << ", k = " << report.k << ", mesh = " << report.mesh
      << "\n\n";
  out << "| k | Mesh | dofs | ‖u−u_h‖ | rate | ‖σ−σ_h‖ | rate |\n";
  out << "|---|------|-----:|--------:|-----:|--------:|-----:|\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const ErrorRecord& r = report.records[i];
    out << "| " << (i == 0 ? std::to_string(report.k) : "") << " | " << r.n << "×" << r.n << " | " << r.n_dofs
        << " | " << fmt("%.3e", r.err_u) << " | " << (i > 0 ? rate_cell(ru[i - 1], "n/a") : "-") << " | "
        << fmt("%.3e", r.err_sigma) << " | " << (i > 0 ? rate_cell(rs[i - 1], "n/a") : "-") << " |\n";
  }
  out << '\n';
}

}  // namespace edg
