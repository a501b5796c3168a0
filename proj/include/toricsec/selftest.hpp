// Built-in suite of worked examples with known answers.

#ifndef TORICSEC_SELFTEST_HPP
#define TORICSEC_SELFTEST_HPP

#include <string>
#include <vector>

namespace toricsec {

struct SelfTestResult
{
    std::string name;
    bool passed = false;
    std::string detail;  // "got ..., expected ..." on failure
};

std::vector<SelfTestResult> run_selftest();

}  // namespace toricsec

#endif
