#ifndef CACTUS_SELFTEST_HPP
#define CACTUS_SELFTEST_HPP

#include <string>
#include <vector>

namespace cactus {

struct SelfTestCase {
  std::string name;
  bool pass = false;
  std::string detail;  // observed value, or the exception text
};

/// Runs the published worked examples end to end.
std::vector<SelfTestCase> run_selftest(int threads = 1);

}  // namespace cactus

#endif  // CACTUS_SELFTEST_HPP
