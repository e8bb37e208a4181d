#pragma once

#include <string>
#include <vector>

namespace zorbit {

// Permutation of {1..n} in one-line notation; p * q is the composite p∘q.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm parse(const std::string& text);
    static Perm transposition(int n, int i, int j);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    Perm operator*(const Perm& o) const;
    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;

    bool is_identity() const;
    bool is_involution() const;
    int inversions() const;
    int sign() const { return inversions() % 2 ? -1 : 1; }
    int fixed_points() const;
    std::string str() const;

private:
    std::vector<int> img_;
};

Perm perm_diag(const std::vector<Perm>& blocks);

}  // namespace zorbit
