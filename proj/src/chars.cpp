#include "zorbit/chars.hpp"

#include <stdexcept>

#include "zorbit/exact.hpp"

namespace zorbit {

namespace {

Weight unit(int k, int i, long c = 1) {
    Weight w(k, 0);
    w[i] = c;
    return w;
}

Weight add(Weight a, const Weight& b, long c = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<Weight> RootSystem::positive_roots() const {
    int k = coords();
    std::vector<Weight> out;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            out.push_back(add(unit(k, i), unit(k, j), -1));
            if (type != Family::A) out.push_back(add(unit(k, i), unit(k, j)));
        }
    if (type == Family::B)
        for (int i = 0; i < k; ++i) out.push_back(unit(k, i));
    if (type == Family::C)
        for (int i = 0; i < k; ++i) out.push_back(unit(k, i, 2));
    return out;
}

std::vector<Weight> RootSystem::simple_roots() const {
    int k = coords();
    std::vector<Weight> out;
    if (rank == 0) return out;
    for (int i = 0; i + 1 < k; ++i) out.push_back(add(unit(k, i), unit(k, i + 1), -1));
    switch (type) {
    case Family::A: break;
    case Family::B: out.push_back(unit(k, k - 1)); break;
    case Family::C: out.push_back(unit(k, k - 1, 2)); break;
    case Family::D:
        if (k == 1) out.clear();
        else out.push_back(add(unit(k, k - 2), unit(k, k - 1)));
        break;
    }
    return out;
}

RootSystem RootSystem::make(Family t, int rank) { return {t, rank, t == Family::A ? rank + 1 : rank}; }

std::string RootSystem::str() const { return std::string(1, family_letter(type)) + std::to_string(rank); }

RootSystem root_system(GroupPart g, const ModelSpec& s) {
    if (g == GroupPart::G) {
        if (s.family == Family::A) return RootSystem::make(Family::A, s.n - 1);
        return RootSystem::make(s.family, s.n / 2);
    }
    switch (s.family) {
    case Family::A: return s.r > 0 ? RootSystem::make(Family::A, s.r - 1) : RootSystem{Family::A, 0, 0};
    case Family::C: return RootSystem::make(Family::B, (s.r - 1) / 2);
    default: return RootSystem::make(Family::C, s.r / 2);
    }
}

Weight two_rho(const RootSystem& rs) {
    Weight w(rs.coords(), 0);
    for (const auto& a : rs.positive_roots()) w = add(w, a);
    return w;
}

Weight two_rho_fundamental(const RootSystem& rs) {
    auto simple = rs.simple_roots();
    int k = rs.coords();
    int l = static_cast<int>(simple.size());
    if (l == 0) return Weight(k, 0);
    // M[a][b] = <alpha_a, alpha_b^vee>; omega_a = sum_c (M^-1)[a][c] alpha_c.
    std::vector<std::vector<Scalar>> rows(l, std::vector<Scalar>(l));
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b)
            rows[a][b] = Scalar(mpq_class(2 * dot(simple[a], simple[b]), dot(simple[b], simple[b])));
    Matrix inv = Matrix::from_rows(rows).inverse();
    std::vector<mpq_class> acc(k, 0);
    for (int a = 0; a < l; ++a)
        for (int c = 0; c < l; ++c)
            for (int i = 0; i < k; ++i) acc[i] += 2 * inv(a, c).rational() * simple[c][i];
    Weight w(k);
    for (int i = 0; i < k; ++i) {
        acc[i].canonicalize();
        if (acc[i].get_den() != 1) throw std::logic_error("2 rho is not integral");
        w[i] = acc[i].get_num().get_si();
    }
    return w;
}

Weight two_rho(GroupPart g, const ModelSpec& s) { return two_rho(root_system(g, s)); }

Weight two_rho_closed(GroupPart g, const ModelSpec& s) {
    int n = s.n, r = s.r;
    Weight w;
    if (g == GroupPart::G) {
        int k = s.family == Family::A ? n : n / 2;
        for (int i = 1; i <= k; ++i) {
            switch (s.family) {
            case Family::A: w.push_back(n - 2 * i + 1); break;
            case Family::C: w.push_back(n - 2 * i + 2); break;
            default: w.push_back(n - 2 * i); break;
            }
        }
        return w;
    }
    int k = s.family == Family::A ? r : r / 2;
    for (int i = 1; i <= k; ++i) {
        switch (s.family) {
        case Family::A: w.push_back(r - 2 * i + 1); break;
        case Family::C: w.push_back(r - 2 * i); break;
        default: w.push_back(r - 2 * i + 2); break;
        }
    }
    return w;
}

Weight restrict_weight(const Weight& lambda, const ModelSpec& s) {
    int n = s.n, r = s.r;
    int k = s.family == Family::A ? n : n / 2;
    if (static_cast<int>(lambda.size()) != k)
        throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coordinates, expected " + std::to_string(k));
    Weight mu;
    if (s.family == Family::A) {
        for (int i = 1; i <= r; ++i) mu.push_back(lambda[i - 1] + lambda[n - r + i - 1]);
        return mu;
    }
    for (int i = 1; i <= r / 2; ++i) mu.push_back(lambda[i - 1] - lambda[r - i]);
    return mu;
}

std::vector<long> coroot_pairings(const Weight& lambda, const RootSystem& rs) {
    if (static_cast<int>(lambda.size()) != rs.coords()) throw std::invalid_argument("weight length does not match the root system");
    std::vector<long> out;
    for (const auto& a : rs.simple_roots()) {
        long num = 2 * dot(lambda, a), den = dot(a, a);
        if (num % den) throw std::logic_error("non-integral coroot pairing");
        out.push_back(num / den);
    }
    return out;
}

bool dominant_by_coroots(const Weight& lambda, const RootSystem& rs) {
    for (long c : coroot_pairings(lambda, rs))
        if (c < 0) return false;
    return true;
}

bool dominant_by_inequalities(const Weight& lambda, const RootSystem& rs) {
    int k = rs.coords();
    if (static_cast<int>(lambda.size()) != k) throw std::invalid_argument("weight length does not match the root system");
    for (int i = 0; i + 1 < k; ++i) {
        if (rs.type == Family::D && i == k - 2) {
            if (lambda[i] < std::abs(lambda[i + 1])) return false;
        } else if (lambda[i] < lambda[i + 1]) {
            return false;
        }
    }
    if ((rs.type == Family::B || rs.type == Family::C) && k > 0 && lambda[k - 1] < 0) return false;
    return true;
}

DominanceResult dominance_character(const ModelSpec& s) {
    Weight h = two_rho(GroupPart::H, s);
    Weight g = restrict_weight(two_rho(GroupPart::G, s), s);
    DominanceResult out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        long d = 2 * h[i] - g[i];
        if (d % 2) throw std::logic_error("character is not integral");
        out.weight.push_back(d / 2);
    }
    RootSystem rs = root_system(GroupPart::H, s);
    out.dominant = dominant_by_coroots(out.weight, rs);
    if (out.dominant != dominant_by_inequalities(out.weight, rs)) throw std::logic_error("dominance tests disagree");
    return out;
}

}  // namespace zorbit
