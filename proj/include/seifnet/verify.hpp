/**
 * @file verify.hpp
 * @brief Built-in regression suite: every published value the engine
 * reproduces, runnable as a whole or filtered by claim id.
 */
#pragma once

#include <string>
#include <vector>

namespace seifnet {

struct ClaimResult {
    std::string id;
    std::string description;
    std::string computed;
    std::string expected;
    bool pass = false;
};

/// Ids of the registered claims, in run order.
std::vector<std::string> claim_ids();

/// Runs all claims, or just the one with the given id. Throws
/// std::invalid_argument for an unknown id.
std::vector<ClaimResult> run_claims(const std::string& filter = "");

} // namespace seifnet
