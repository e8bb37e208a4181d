#pragma once

#include <string>
#include <vector>

namespace zorbit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceConfig {
    int threads = 0;
    unsigned long seed = 20240601;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

}  // namespace zorbit
