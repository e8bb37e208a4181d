#include <cstdio>

#include "zorbit/acceptance.hpp"

int main() {
    bool all = true;
    for (const auto& r : zorbit::run_acceptance()) {
        std::printf("%s %2d  %s  (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
