#include <cstdio>
#include <iostream>

#include "irrbase/verify.hpp"

int main() {
  int failed = 0;
  for (int i = 1; i <= 10; ++i) {
    irrbase::verify::CheckResult r;
    try {
      r = irrbase::verify::criterion(i);
    } catch (const std::exception& e) {
      r.id = "C" + std::to_string(i);
      r.detail = std::string("exception: ") + e.what();
    }
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << i << ": " << r.title << " [" << r.detail
              << "] (" << r.seconds << " s)" << std::endl;
    failed += !r.passed;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed ? 1 : 0;
}
