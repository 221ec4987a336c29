#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cycinv {

// Built-in verification catalog mirroring the worked examples: the d=3,4,5
// generator tables, the relation identities, the series/bruteforce
// cross-checks and the S-algebra identities.  Every check is exact.
struct SelftestCase {
    std::string name;
    std::function<bool()> run;
};

std::vector<SelftestCase> selftest_catalog();

}  // namespace cycinv
