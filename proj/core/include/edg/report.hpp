#pragma once

#include <iosfwd>

#include "edg/convergence.hpp"

namespace edg {

/// CSV with header method,k,mesh,n,h,dofs,err_u,rate_u,err_sigma,rate_sigma.
/// Undefined rates are left empty.
void write_csv(std::ostream& out, const ConvergenceReport& report, bool header = true);

/// Markdown table: k | Mesh | ||u-u_h|| | rate | ||sigma-sigma_h|| | rate.
void write_markdown(std::ostream& out, const ConvergenceReport& report);

}  // namespace edg
