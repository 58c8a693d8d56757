#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kfg/cochain.hpp"

namespace kfg::verify {

struct Result {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// The full battery, in a fixed order. Seed feeds the randomized suites.
std::vector<Result> run_all(std::uint64_t seed = 0);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// One named suite. When a signature is given, suites that can be scoped
/// to a single algebra run only there; otherwise they sweep their full
/// default range.
Result run_suite(const std::string& name, const std::optional<Signature>& sig,
                 std::uint64_t seed = 0);

}  // namespace kfg::verify
