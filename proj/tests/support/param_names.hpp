#pragma once

#include <string>
#include <tuple>

#include <gtest/gtest.h>

#include "edg/types.hpp"

namespace edg::testing {

// Readable names such as "k1_edg_quad" for (k, method, quadrilateral) suites.
inline std::string config_name(const ::testing::TestParamInfo<std::tuple<int, Method, bool>>& info) {
  const auto [k, method, quads] = info.param;
  return "k" + std::to_string(k) + "_" + to_string(method) + (quads ? "_quad" : "_tri");
}

}  // namespace edg::testing
