#include "zorbit/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zorbit {

namespace {

long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace

std::vector<int> TwoColTableau::first_column() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(p.begin(), p.end(), i)) out.push_back(i);
    return out;
}

bool TwoColTableau::valid() const {
    int k = r();
    if (n < 0 || 2 * k > n) return false;
    for (int i = 0; i < k; ++i) {
        if (p[i] < 1 || p[i] > n) return false;
        if (i && p[i] <= p[i - 1]) return false;
    }
    auto c = first_column();
    for (int j = 1; j <= k; ++j)
        if (c[c.size() - j] <= p[k - j]) return false;
    return true;
}

TwoColTableau TwoColTableau::make(int n, std::vector<int> p) {
    TwoColTableau t{n, std::move(p)};
    if (!t.valid()) throw std::invalid_argument("not a standard two-column tableau");
    return t;
}

std::vector<TwoColTableau> enumerate_tableaux(int n, int r) {
    if (r < 0 || 2 * r > n) throw std::invalid_argument("need 0 <= r <= n/2");
    std::vector<TwoColTableau> out;
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = i + 1;
    while (true) {
        TwoColTableau t{n, p};
        if (t.valid()) out.push_back(t);
        int i = r - 1;
        while (i >= 0 && p[i] == n - r + i + 1) --i;
        if (i < 0) break;
        ++p[i];
        for (int j = i + 1; j < r; ++j) p[j] = p[j - 1] + 1;
    }
    return out;
}

TableauWord tableau_to_w(const TwoColTableau& t) {
    if (!t.valid()) throw std::invalid_argument("not a standard two-column tableau");
    int n = t.n, r = t.r();
    TableauWord out;
    out.q.assign(r, 0);
    std::set<int> used;
    for (int i = r - 1; i >= 0; --i) {
        used.insert(t.p[i]);
        int c = t.p[i] + 1;
        while (c <= n && used.count(c)) ++c;
        if (c > n) throw std::logic_error("no room for q");
        out.q[i] = c;
        used.insert(c);
    }
    for (int i = 1; i <= n; ++i)
        if (!used.count(i)) out.s.push_back(i);
    std::vector<int> img(n + 1, 0);
    for (int i = 1; i <= r; ++i) {
        img[t.p[i - 1]] = i;
        img[out.q[i - 1]] = n - r + i;
    }
    for (int j = 1; j <= n - 2 * r; ++j) img[out.s[j - 1]] = n - r + 1 - j;
    out.w = Perm(std::vector<int>(img.begin() + 1, img.end()));
    return out;
}

TableauDims tableau_dims(const TwoColTableau& t) {
    TableauDims d{choose2(t.r()), choose2(t.n - t.r())};
    if (tableau_to_w(t).w.inversions() != d.len_w) throw std::logic_error("length of w_tau differs from C(n-r, 2)");
    return d;
}

bool separated(const TwoColTableau& t) {
    for (int i = 0; i + 1 < t.r(); ++i)
        if (t.p[i + 1] <= t.p[i] + 1) return false;
    return true;
}

std::string render(const TwoColTableau& t) {
    auto c = t.first_column();
    int width = static_cast<int>(std::to_string(t.n).size());
    std::ostringstream os;
    for (int j = 1; j <= static_cast<int>(c.size()); ++j) {
        std::string a = std::to_string(c[c.size() - j]);
        os << std::string(width - a.size(), ' ') << a;
        if (j <= t.r()) {
            std::string b = std::to_string(t.p[t.r() - j]);
            os << ' ' << std::string(width - b.size(), ' ') << b;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace zorbit
