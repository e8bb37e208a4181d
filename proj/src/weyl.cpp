#include "zorbit/weyl.hpp"

#include <algorithm>
#include <functional>

namespace zorbit {

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw SpecError("unknown family \"" + s + "\"");
}

char family_letter(Family f) { return "ABCD"[static_cast<int>(f)]; }

WeylKind WeylKind::make(int eps, int m) {
    if (eps < -1 || eps > 1) throw SpecError("eps must be -1, 0 or 1");
    if (m < 0) throw SpecError("negative rank");
    if (eps == -1 && m % 2) throw SpecError("eps = -1 needs an even number of letters");
    return WeylKind{eps, m};
}

ModelSpec ModelSpec::make(Family f, int n, int r) {
    ModelSpec s{f, n, r};
    std::string tag = s.str();
    if (n < 1) throw SpecError(tag + ": n must be positive");
    if (r < 0 || r > n / 2) throw SpecError(tag + ": need 0 <= r <= n/2");
    switch (f) {
    case Family::A:
        break;
    case Family::B:
        if (n % 2 == 0) throw SpecError(tag + ": family B needs n odd");
        if (r % 2) throw SpecError(tag + ": family B needs r even");
        break;
    case Family::C:
        if (n % 2) throw SpecError(tag + ": family C needs n even");
        if (r % 2 == 0) throw SpecError(tag + ": family C needs r odd");
        break;
    case Family::D:
        if (n % 2) throw SpecError(tag + ": family D needs n even");
        if (r % 2) throw SpecError(tag + ": family D needs r even");
        break;
    }
    return s;
}

int ModelSpec::eps() const {
    switch (family) {
    case Family::A: return 0;
    case Family::C: return -1;
    default: return 1;
    }
}

std::string ModelSpec::str() const {
    return std::string("(") + family_letter(family) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
}

Perm check_of(const Perm& p) {
    int m = p.size();
    std::vector<int> v(m);
    for (int i = 1; i <= m; ++i) v[i - 1] = bar(p(bar(i, m)), m);
    return Perm(std::move(v));
}

namespace {

int big_count(const Perm& p) {
    int h = p.size() / 2, q = 0;
    for (int i = 1; i <= h; ++i)
        if (p(i) > h) ++q;
    return q;
}

void require_member(const Perm& p, WeylKind k) {
    if (!in_weyl(p, k)) throw std::invalid_argument("permutation [" + p.str() + "] is not in the Weyl group");
}

}  // namespace

bool in_weyl(const Perm& p, WeylKind k) {
    if (p.size() != k.m) return false;
    if (k.eps == 0) return true;
    if (!(check_of(p) == p)) return false;
    if (k.eps == 1 && k.m % 2 == 0) return big_count(p) % 2 == 0;
    return true;
}

int type_length(const Perm& p, WeylKind k) {
    require_member(p, k);
    if (k.eps == 0) return p.inversions();
    int num = p.inversions() - k.eps * big_count(p);
    if (num % 2) throw std::logic_error("odd length numerator");
    return num / 2;
}

std::vector<Perm> simple_reflections(WeylKind k) {
    std::vector<Perm> out;
    int d = k.m;
    if (k.eps == 0) {
        for (int i = 1; i < d; ++i) out.push_back(Perm::transposition(d, i, i + 1));
        return out;
    }
    int h = d / 2;
    for (int i = 1; i < h; ++i) out.push_back(Perm::transposition(d, i, i + 1) * Perm::transposition(d, d - i, d - i + 1));
    if (d % 2) {
        if (h >= 1) out.push_back(Perm::transposition(d, h, h + 2));
    } else if (k.eps == -1) {
        if (h >= 1) out.push_back(Perm::transposition(d, h, h + 1));
    } else if (h >= 2) {
        out.push_back(Perm::transposition(d, h - 1, h + 1) * Perm::transposition(d, h, h + 2));
    }
    return out;
}

int coxeter_length(const Perm& p, WeylKind k) {
    require_member(p, k);
    auto gens = simple_reflections(k);
    Perm x = p;
    int len = 0;
    while (!x.is_identity()) {
        int inv = x.inversions();
        bool moved = false;
        for (const auto& s : gens) {
            Perm y = x * s;
            if (y.inversions() < inv) {
                x = y;
                ++len;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("no descent found for [" + x.str() + "]");
    }
    return len;
}

bool bruhat_leq(const Perm& u, const Perm& w, WeylKind k) {
    require_member(u, k);
    require_member(w, k);
    auto gens = simple_reflections(k);
    std::function<bool(const Perm&, const Perm&)> rec = [&](const Perm& a, const Perm& b) {
        if (b.is_identity()) return a.is_identity();
        int lb = coxeter_length(b, k);
        for (const auto& s : gens) {
            Perm bs = b * s;
            if (coxeter_length(bs, k) < lb) {
                Perm as = a * s;
                return rec(coxeter_length(as, k) < coxeter_length(a, k) ? as : a, bs);
            }
        }
        throw std::logic_error("no descent found");
    };
    return rec(u, w);
}

Perm longest_element(WeylKind k) {
    int d = k.m;
    std::vector<int> v(d);
    for (int i = 1; i <= d; ++i) v[i - 1] = bar(i, d);
    if (k.eps == 1 && d % 2 == 0 && (d / 2) % 2) std::swap(v[d / 2 - 1], v[d / 2]);
    return Perm(std::move(v));
}

std::vector<Perm> enumerate_weyl(WeylKind k) {
    std::vector<Perm> out;
    int d = k.m;
    if (k.eps == 0) {
        std::vector<int> v(d);
        for (int i = 0; i < d; ++i) v[i] = i + 1;
        do out.emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
        return out;
    }
    int h = d / 2;
    std::vector<int> v(d, 0);
    std::vector<bool> used(d + 1, false);
    if (d % 2) v[h] = h + 1, used[h + 1] = true;
    std::function<void(int)> rec = [&](int i) {
        if (i > h) {
            Perm p(v);
            if (in_weyl(p, k)) out.push_back(p);
            return;
        }
        for (int x = 1; x <= d; ++x) {
            if (used[x]) continue;
            int y = bar(x, d);
            if (y == x || used[y]) continue;
            v[i - 1] = x;
            v[bar(i, d) - 1] = y;
            used[x] = used[y] = true;
            rec(i + 1);
            used[x] = used[y] = false;
        }
    };
    rec(1);
    return out;
}

bool sigma_alternative(const Perm& v) {
    int k = v.size();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (!(v(i) < v(j) || v(bar(i, k)) > v(bar(j, k)))) return false;
    return true;
}

int crossed_pairs(const Perm& v) {
    int k = v.size(), c = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (v(i) > v(j) && v(bar(i, k)) < v(bar(j, k))) ++c;
    return c;
}

Perm induced_perm(const Perm& p, int k, int m) {
    std::vector<int> vals(p.images().begin() + k, p.images().begin() + k + m);
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin()) + 1;
    return Perm(std::move(out));
}

Perm u0(const ModelSpec& s) { return longest_element(s.middle_weyl()); }

namespace {

bool preserves_blocks(const Perm& t, const ModelSpec& s) {
    int n = s.n, r = s.r;
    for (int i = 1; i <= n; ++i) {
        int bi = i <= r ? 0 : (i <= n - r ? 1 : 2);
        int v = t(i);
        int bv = v <= r ? 0 : (v <= n - r ? 1 : 2);
        if (bi != bv) return false;
    }
    return true;
}

bool increasing_on(const Perm& u, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (u(i) > u(i + 1)) return false;
    return true;
}

}  // namespace

bool in_WP(const Perm& t, const ModelSpec& s) {
    return in_weyl(t, s.weyl()) && preserves_blocks(t, s);
}

bool in_min_WP(const Perm& u, const ModelSpec& s) {
    if (!in_weyl(u, s.weyl())) return false;
    int n = s.n, r = s.r;
    if (s.family == Family::A) return increasing_on(u, 1, r) && increasing_on(u, r + 1, n - r) && increasing_on(u, n - r + 1, n);
    int h = n / 2;
    if (!increasing_on(u, 1, r) || !increasing_on(u, r + 1, h)) return false;
    int need = s.family == Family::D ? 4 : (s.family == Family::B ? 3 : 2);
    if (s.middle() < need) return true;
    int off = (s.eps() + (n % 2 ? -1 : 1)) / 2;
    return u(h) < u(h + 1 + off);
}

CosetDecomposition coset_decompose(const Perm& w, const ModelSpec& s) {
    if (!in_weyl(w, s.weyl())) throw std::invalid_argument("[" + w.str() + "] is not in W for " + s.str());
    int n = s.n, r = s.r, h = s.middle();
    Perm x = w.inverse();
    Perm tau;
    if (s.family == Family::A) {
        tau = perm_diag({induced_perm(x, 0, r).inverse(), induced_perm(x, r, h).inverse(), induced_perm(x, n - r, r).inverse()});
    } else {
        Perm sigma = induced_perm(x, 0, r).inverse();
        Perm y = induced_perm(x, r, h);
        Perm z = Perm::identity(h);
        if (s.eps() == 1 && h % 2 == 0 && h > 0 && big_count(y) % 2) z = Perm::transposition(h, h / 2, h / 2 + 1);
        tau = perm_diag({sigma, y.inverse() * z, check_of(sigma)});
    }
    CosetDecomposition d{tau, tau.inverse() * w};
    if (!in_WP(d.tau, s) || !in_min_WP(d.nu.inverse(), s) || !(d.tau * d.nu == w))
        throw std::logic_error("coset decomposition failed for [" + w.str() + "] in " + s.str());
    return d;
}

Perm theta_on_WP(const Perm& tau, const ModelSpec& s) {
    if (!in_WP(tau, s)) throw std::invalid_argument("[" + tau.str() + "] is not in W_P for " + s.str());
    int n = s.n, r = s.r, h = s.middle();
    Perm t = perm_diag({induced_perm(tau, n - r, r), induced_perm(tau, r, h), induced_perm(tau, 0, r)});
    if (!in_WP(t, s)) throw std::logic_error("theta left W_P");
    return t;
}

}  // namespace zorbit
