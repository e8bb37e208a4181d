#pragma once

#include <string>
#include <vector>

#include "zorbit/weyl.hpp"

namespace zorbit {

using Weight = std::vector<long>;

// Classical root system in epsilon coordinates; A_{k-1} lives on k coordinates.
struct RootSystem {
    Family type = Family::A;
    int rank = 0;
    int dim = 0;  // number of coordinates

    static RootSystem make(Family t, int rank);
    int coords() const { return dim; }
    std::vector<Weight> positive_roots() const;
    std::vector<Weight> simple_roots() const;
    std::string str() const;
};

enum class GroupPart { G, H };

RootSystem root_system(GroupPart g, const ModelSpec& s);

// Doubled rho, as the sum of positive roots.
Weight two_rho(const RootSystem& rs);
// Doubled rho as 2 * sum of fundamental weights, through the inverse Cartan matrix.
Weight two_rho_fundamental(const RootSystem& rs);
Weight two_rho(GroupPart g, const ModelSpec& s);
// Closed forms: B, D: n - 2i; C: n - 2i + 2; H: r - 2i + 1 (A), r - 2i + 2 (B, D), r - 2i (C).
Weight two_rho_closed(GroupPart g, const ModelSpec& s);

// Restriction from the torus of G to the torus of H.
Weight restrict_weight(const Weight& lambda, const ModelSpec& s);

// <lambda, alpha^vee> for every simple root, from the root data.
std::vector<long> coroot_pairings(const Weight& lambda, const RootSystem& rs);
bool dominant_by_coroots(const Weight& lambda, const RootSystem& rs);
bool dominant_by_inequalities(const Weight& lambda, const RootSystem& rs);

struct DominanceResult {
    Weight weight;
    bool dominant = false;
};
// 2 rho_H - rho_G restricted to T_H.
DominanceResult dominance_character(const ModelSpec& s);

}  // namespace zorbit
