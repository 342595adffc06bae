// The hyperoctahedral group W = S_n ⋉ (Z/2)^n acting on Z^n by signed
// permutations, together with its two sign characters.
#ifndef EPSMAC_WEYL_GROUP_HPP
#define EPSMAC_WEYL_GROUP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "epsmac/field.hpp"

namespace epsmac {

/// Upper limit on the number of variables handled anywhere in the library.
inline constexpr int kMaxRank = 8;

/// Default guard for explicit enumeration of W (|W| = n! 2^n).
inline constexpr int kDefaultWeylBound = 6;

/// A signed permutation: coordinate i of a vector is sent to coordinate
/// perm[i] and multiplied by -1 when flips[i] is set.
class WeylElem {
public:
    WeylElem() = default;
    explicit WeylElem(int n) : n_(n) {
        check_rank(n);
        std::iota(perm_.begin(), perm_.begin() + n, 0);
    }
    WeylElem(std::vector<int> perm, std::vector<bool> flips) : n_(static_cast<int>(perm.size())) {
        check_rank(n_);
        if (flips.size() != perm.size()) throw MathError("weyl element: size mismatch");
        std::vector<bool> seen(perm.size(), false);
        for (int i = 0; i < n_; ++i) {
            int p = perm[static_cast<std::size_t>(i)];
            if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
                throw MathError("weyl element: not a permutation");
            seen[static_cast<std::size_t>(p)] = true;
            perm_[static_cast<std::size_t>(i)] = p;
            flips_[static_cast<std::size_t>(i)] = flips[static_cast<std::size_t>(i)];
        }
    }

    /// The sign change of coordinate i (0-based).
    static WeylElem flip(int n, int i) {
        WeylElem w(n);
        w.flips_[static_cast<std::size_t>(i)] = true;
        return w;
    }
    /// The transposition of coordinates i and j (0-based).
    static WeylElem transposition(int n, int i, int j) {
        WeylElem w(n);
        std::swap(w.perm_[static_cast<std::size_t>(i)], w.perm_[static_cast<std::size_t>(j)]);
        return w;
    }

    int rank() const { return n_; }
    int perm(int i) const { return perm_[static_cast<std::size_t>(i)]; }
    bool flipped(int i) const { return flips_[static_cast<std::size_t>(i)]; }

    /// Applies w to a coordinate vector (any scaling of the lattice).
    template <class Vec>
    Vec apply(const Vec& v) const {
        Vec out = v;
        for (int i = 0; i < n_; ++i) {
            auto x = v[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] =
                flips_[static_cast<std::size_t>(i)] ? -x : x;
        }
        return out;
    }

    /// (a * b)(v) = a(b(v)).
    friend WeylElem operator*(const WeylElem& a, const WeylElem& b) {
        if (a.n_ != b.n_) throw MathError("dimension mismatch");
        WeylElem r(a.n_);
        for (int i = 0; i < a.n_; ++i) {
            auto j = static_cast<std::size_t>(b.perm_[static_cast<std::size_t>(i)]);
            r.perm_[static_cast<std::size_t>(i)] = a.perm_[j];
            r.flips_[static_cast<std::size_t>(i)] = a.flips_[j] != b.flips_[static_cast<std::size_t>(i)];
        }
        return r;
    }

    WeylElem inverse() const {
        WeylElem r(n_);
        for (int i = 0; i < n_; ++i) {
            auto p = static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)]);
            r.perm_[p] = i;
            r.flips_[p] = flips_[static_cast<std::size_t>(i)];
        }
        return r;
    }

    /// sign': parity of the underlying permutation only.
    int sign_prime() const {
        int inversions = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (perm_[static_cast<std::size_t>(i)] > perm_[static_cast<std::size_t>(j)]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }
    /// sign: permutation parity times (-1)^(number of flips).
    int sign() const {
        int s = sign_prime();
        for (int i = 0; i < n_; ++i)
            if (flips_[static_cast<std::size_t>(i)]) s = -s;
        return s;
    }
    /// sign for eps = +1, sign' for eps = -1.
    int sign_eps(int eps) const { return eps > 0 ? sign() : sign_prime(); }

    friend bool operator==(const WeylElem& a, const WeylElem& b) {
        return a.n_ == b.n_ && a.perm_ == b.perm_ && a.flips_ == b.flips_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += (flips_[static_cast<std::size_t>(i)] ? "-" : "+") +
                 std::to_string(perm_[static_cast<std::size_t>(i)] + 1);
        }
        return s + "]";
    }

private:
    static void check_rank(int n) {
        if (n < 1 || n > kMaxRank) throw MathError("rank out of range: " + std::to_string(n));
    }

    int n_ = 0;
    std::array<int, kMaxRank> perm_{};
    std::array<bool, kMaxRank> flips_{};
};

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline long weyl_order(int n) { return factorial(n) << n; }

/// All n! 2^n elements, in a fixed order (permutations lexicographically,
/// flip masks ascending within each).
inline std::vector<WeylElem> weyl_elements(int n, int bound = kDefaultWeylBound) {
    if (n < 1) throw MathError("rank must be >= 1");
    if (n > bound) throw MathError("weyl group enumeration bound exceeded");
    std::vector<WeylElem> out;
    out.reserve(static_cast<std::size_t>(weyl_order(n)));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> flips(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) flips[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            out.emplace_back(perm, flips);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace epsmac

#endif  // EPSMAC_WEYL_GROUP_HPP
