#pragma once

#include <string>
#include <vector>

#include "zorbit/perm.hpp"

namespace zorbit {

// Two-column standard tableau with n boxes, stored by its second column p_1 < ... < p_r.
struct TwoColTableau {
    int n = 0;
    std::vector<int> p;

    int r() const { return static_cast<int>(p.size()); }
    std::vector<int> first_column() const;  // increasing
    bool valid() const;
    static TwoColTableau make(int n, std::vector<int> p);
    bool operator==(const TwoColTableau&) const = default;
};

std::vector<TwoColTableau> enumerate_tableaux(int n, int r);

struct TableauWord {
    std::vector<int> q, s;
    Perm w;
};
TableauWord tableau_to_w(const TwoColTableau& t);

struct TableauDims {
    long dim_HB = 0;
    long len_w = 0;
};
TableauDims tableau_dims(const TwoColTableau& t);

// p_{i+1} > p_i + 1 for all i.
bool separated(const TwoColTableau& t);

// Rows top to bottom, entries decreasing.
std::string render(const TwoColTableau& t);

}  // namespace zorbit
