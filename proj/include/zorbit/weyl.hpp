#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zorbit/perm.hpp"

namespace zorbit {

struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, D };

Family parse_family(const std::string& s);
char family_letter(Family f);

// eps == 0 is the symmetric group S_m; eps = +1 / -1 the permutations of {1..m} commuting with i -> m+1-i
// (with the Dickson parity condition when eps = 1 and m is even).
struct WeylKind {
    int eps = 0;
    int m = 0;
    static WeylKind make(int eps, int m);
};

struct ModelSpec {
    Family family = Family::A;
    int n = 1;
    int r = 0;

    static ModelSpec make(Family f, int n, int r);
    int eps() const;
    int ambient() const { return family == Family::B ? n + 1 : n; }
    int half() const { return n / 2; }
    int middle() const { return n - 2 * r; }
    WeylKind weyl() const { return WeylKind{eps(), n}; }
    WeylKind middle_weyl() const { return WeylKind{eps(), n - 2 * r}; }
    std::string str() const;
    bool operator==(const ModelSpec&) const = default;
};

inline int bar(int i, int m) { return m + 1 - i; }

Perm check_of(const Perm& p);
bool in_weyl(const Perm& p, WeylKind k);
int type_length(const Perm& p, WeylKind k);
std::vector<Perm> simple_reflections(WeylKind k);
int coxeter_length(const Perm& p, WeylKind k);
bool bruhat_leq(const Perm& u, const Perm& w, WeylKind k);
Perm longest_element(WeylKind k);
std::vector<Perm> enumerate_weyl(WeylKind k);

Perm u0(const ModelSpec& s);
bool in_WP(const Perm& t, const ModelSpec& s);
bool in_min_WP(const Perm& u, const ModelSpec& s);

struct CosetDecomposition {
    Perm tau;
    Perm nu;
};

// w = tau * nu with tau in W_P and nu^{-1} in W^P.
CosetDecomposition coset_decompose(const Perm& w, const ModelSpec& s);
Perm theta_on_WP(const Perm& tau, const ModelSpec& s);

// v(i) < v(j) or v(bar i) > v(bar j) for all i < j.
bool sigma_alternative(const Perm& v);
// #{i < j : v(i) > v(j) and v(bar i) < v(bar j)}
int crossed_pairs(const Perm& v);

// Relative order of p on the window {k+1..k+m}, as an element of S_m.
Perm induced_perm(const Perm& p, int k, int m);

}  // namespace zorbit
