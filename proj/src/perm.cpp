#include "zorbit/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace zorbit {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
        if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation: " + str());
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Perm(std::move(v));
}

Perm Perm::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> v;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("bad permutation token \"" + tok + "\"");
        v.push_back(x);
    }
    return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[img_[i - 1] - 1] = i;
    Perm p;
    p.img_ = std::move(v);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    if (o.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
    Perm p;
    p.img_.resize(img_.size());
    for (int i = 1; i <= size(); ++i) p.img_[i - 1] = (*this)(o(i));
    return p;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

bool Perm::is_involution() const { return (*this * *this).is_identity(); }

int Perm::inversions() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++c;
    return c;
}

int Perm::fixed_points() const {
    int c = 0;
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) == i) ++c;
    return c;
}

std::string Perm::str() const {
    std::string s;
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? " " : "") + std::to_string(img_[i]);
    return s;
}

Perm perm_diag(const std::vector<Perm>& blocks) {
    std::vector<int> v;
    int off = 0;
    for (const auto& b : blocks) {
        for (int x : b.images()) v.push_back(x + off);
        off += b.size();
    }
    return Perm(std::move(v));
}

}  // namespace zorbit
