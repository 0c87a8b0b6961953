#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trace_census::cli {

struct VerifyOptions {
  std::uint64_t n_max = 20000;
  bool strict = false;
  double tol = 1e-9;  // Gauss-orbit relative tolerance
  unsigned threads = 1;
  double c2_offset = 0.0;  // negative control: perturbs c2 in the ratio check
};

enum class CheckStatus { pass, fail, info };

struct CheckRow {
  std::string name;
  CheckStatus status;
  std::string detail;
};

/// Runs the desk-scale checks. Rows marked info are reported but do not
/// affect all_pass().
std::vector<CheckRow> run_verify(const VerifyOptions& opts);

bool all_pass(const std::vector<CheckRow>& rows);

const char* status_name(CheckStatus s);

}  // namespace trace_census::cli
