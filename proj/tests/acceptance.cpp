// Acceptance battery: one pass/fail line per criterion. Exits nonzero if
// any criterion fails. Run with an optional seed argument (default 0).
#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "kfg/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    auto results = kfg::verify::run_all(seed);
    bool all = true;
    int id = 0;
    for (const auto& r : results) {
        ++id;
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << " ["
                  << r.name << "]" << (r.detail.empty() ? "" : ": " + r.detail)
                  << "\n";
    }
    std::cout << (all ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " (" << id
              << " criteria)\n";
    return all ? 0 : 1;
}
