#pragma once

#include <string>
#include <vector>

namespace bellpf {

// One cross-oracle check: value is the measured residual (or mismatch count
// for exact checks), dim the truncation/order/grid size involved.
struct VerifyRecord {
  std::string check;
  int dim = 0;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class VerifySuite { Fast, All };

std::vector<VerifyRecord> run_verification(VerifySuite suite);

}  // namespace bellpf
