// Root datum of type B_n shared by o(2n+1) and osp(1|2n), weights,
// dominance order and W-orbits.
#ifndef EPSMAC_ROOTSYS_HPP
#define EPSMAC_ROOTSYS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "epsmac/laurent.hpp"
#include "epsmac/weyl_group.hpp"

namespace epsmac {

/// An integral weight sum(parts[i] * eps_i).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty() || static_cast<int>(parts_.size()) > kMaxRank)
            throw MathError("rank out of range: " + std::to_string(parts_.size()));
    }
    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int rank() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_dominant() const {
        if (parts_.back() < 0) return false;
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i]) return false;
        return true;
    }

    ExpVec exp2() const {
        ExpVec e(rank());
        for (std::size_t i = 0; i < parts_.size(); ++i) e[i] = 2 * parts_[i];
        return e;
    }

    /// "2,1,0"
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    std::vector<int> parts_;
};

/// A weight with lambda_1 >= ... >= lambda_n >= 0.
class DominantWeight : public Weight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> parts) : Weight(std::move(parts)) {
        if (!is_dominant()) throw MathError("weight is not dominant: " + to_string());
    }
    explicit DominantWeight(const Weight& w) : DominantWeight(w.parts()) {}
};

/// Parses "2,1,0" (no padding: the number of entries is the rank).
inline Weight parse_weight(const std::string& csv) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw MathError("malformed weight: " + csv);
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (*end != '\0') throw MathError("malformed weight: " + csv);
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Weight(std::move(parts));
}

// ---------------------------------------------------------------------------

struct Root {
    ExpVec coords;   // doubled, so all entries are even
    int parity = 0;  // 1 for the odd roots ±eps_i
    int pairing_h1 = 0;

    /// Coefficient of eps_i.
    int coord(int i) const { return coords[static_cast<std::size_t>(i)] / 2; }
};

struct RootDatum {
    int n = 0;
    /// Positive roots of the working set: eps_i - eps_j, eps_i + eps_j (i<j), eps_i.
    std::vector<Root> R_plus;
    /// Positive even roots of osp(1|2n): eps_i ± eps_j, 2 eps_i.
    std::vector<Root> Rev_plus_osp;
    std::vector<Root> Rod_plus;
    std::vector<Root> Sev_plus;
    ExpVec rho, rho0, rho1;  // doubled

    /// Both signs of every working root.
    std::vector<Root> all_roots() const {
        std::vector<Root> out = R_plus;
        for (const Root& r : R_plus) out.push_back(Root{-r.coords, r.parity, -r.pairing_h1});
        return out;
    }
};

namespace detail {
inline Root make_root(int n, int i, int si, int j, int sj, int parity) {
    ExpVec e(n);
    e[static_cast<std::size_t>(i)] += 2 * si;
    if (j >= 0) e[static_cast<std::size_t>(j)] += 2 * sj;
    return Root{e, parity, e[0] / 2};
}
}  // namespace detail

inline RootDatum build_datum(int n) {
    if (n < 1 || n > kMaxRank) throw MathError("rank out of range: " + std::to_string(n));
    RootDatum d;
    d.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.Sev_plus.push_back(detail::make_root(n, i, 1, j, -1, 0));
            d.Sev_plus.push_back(detail::make_root(n, i, 1, j, 1, 0));
        }
    for (int i = 0; i < n; ++i) d.Rod_plus.push_back(detail::make_root(n, i, 1, -1, 0, 1));
    d.R_plus = d.Sev_plus;
    d.R_plus.insert(d.R_plus.end(), d.Rod_plus.begin(), d.Rod_plus.end());
    d.Rev_plus_osp = d.Sev_plus;
    for (int i = 0; i < n; ++i) d.Rev_plus_osp.push_back(detail::make_root(n, i, 2, -1, 0, 0));

    // Half sums, kept doubled: 2*rho0 = sum of Rev_plus_osp, 2*rho1 = sum of Rod_plus.
    d.rho0 = ExpVec(n);
    d.rho1 = ExpVec(n);
    for (const Root& r : d.Rev_plus_osp) d.rho0 += r.coords;
    for (const Root& r : d.Rod_plus) d.rho1 += r.coords;
    for (int i = 0; i < n; ++i) {
        d.rho0[static_cast<std::size_t>(i)] /= 2;
        d.rho1[static_cast<std::size_t>(i)] /= 2;
    }
    d.rho = d.rho0 - d.rho1;
    return d;
}

/// Coefficient of the invariant form str(ad x)^2 on the Cartan subalgebra.
inline long form_constant(int n) {
    if (n < 1) throw MathError("rank must be >= 1");
    return 4L * n + 2;
}

/// mu <= lam iff lam - mu is a nonnegative integer combination of the simple
/// roots eps_1 - eps_2, ..., eps_{n-1} - eps_n, eps_n, i.e. all partial sums
/// of lam - mu are nonnegative.
inline bool dominance_leq(const Weight& mu, const Weight& lam) {
    if (mu.rank() != lam.rank()) throw MathError("dimension mismatch");
    long partial = 0;
    for (std::size_t i = 0; i < lam.parts().size(); ++i) {
        partial += lam[i] - mu[i];
        if (partial < 0) return false;
    }
    return true;
}

/// Distinct points of the W-orbit of lam, in ascending lex order.
inline std::vector<Weight> orbit(const Weight& lam) {
    std::vector<int> abs_parts;
    for (int x : lam.parts()) abs_parts.push_back(std::abs(x));
    std::sort(abs_parts.begin(), abs_parts.end());
    std::vector<Weight> out;
    do {
        std::vector<int> nz;
        for (std::size_t i = 0; i < abs_parts.size(); ++i)
            if (abs_parts[i] != 0) nz.push_back(static_cast<int>(i));
        for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
            std::vector<int> v = abs_parts;
            for (std::size_t b = 0; b < nz.size(); ++b)
                if ((mask >> b) & 1u) v[static_cast<std::size_t>(nz[b])] = -v[static_cast<std::size_t>(nz[b])];
            out.emplace_back(std::move(v));
        }
    } while (std::next_permutation(abs_parts.begin(), abs_parts.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// The unique dominant point of the orbit of an integral weight.
inline DominantWeight dominant_representative(const Weight& w) {
    std::vector<int> v;
    for (int x : w.parts()) v.push_back(std::abs(x));
    std::sort(v.begin(), v.end(), std::greater<>());
    return DominantWeight(std::move(v));
}

/// m_lam: sum of x^nu over the distinct points nu of the orbit.
template <class C = RatFuncQ>
LaurentPolynomial<C> orbit_sum(const DominantWeight& lam) {
    LaurentPolynomial<C> m(lam.rank());
    for (const Weight& nu : orbit(lam)) m.add_term(nu.exp2(), C(1));
    return m;
}

/// Dominant weights of rank n with |lam| <= bound, ordered by |lam| and then
/// lexicographically; this is a linear extension of dominance.
inline std::vector<DominantWeight> dominant_weights(int n, int bound) {
    if (n < 1 || n > kMaxRank) throw MathError("rank out of range: " + std::to_string(n));
    if (bound < 0) throw MathError("bound must be >= 0");
    std::vector<DominantWeight> out;
    std::vector<int> cur;
    // Partitions of exactly `size` into at most n parts, emitted lex ascending.
    std::function<void(int, int, std::vector<std::vector<int>>&)> rec =
        [&](int remaining, int max_part, std::vector<std::vector<int>>& acc) {
            if (static_cast<int>(cur.size()) == n) {
                if (remaining == 0) acc.push_back(cur);
                return;
            }
            for (int p = std::min(remaining, max_part); p >= 0; --p) {
                cur.push_back(p);
                rec(remaining - p, p, acc);
                cur.pop_back();
            }
        };
    for (int size = 0; size <= bound; ++size) {
        std::vector<std::vector<int>> acc;
        rec(size, size, acc);
        std::sort(acc.begin(), acc.end());
        for (auto& p : acc) out.emplace_back(std::move(p));
    }
    return out;
}

/// Expands a W-invariant f in the orbit-sum basis: {dominant nu -> coeff}.
/// Throws "not W-invariant" if the coefficients are not constant on orbits
/// or if a half-lattice exponent occurs.
template <class C>
std::map<DominantWeight, C> orbit_coefficients(const LaurentPolynomial<C>& f) {
    std::map<DominantWeight, C> out;
    std::size_t covered = 0;
    for (const auto& [e, c] : f) {
        if (!e.is_integral()) throw MathError("not W-invariant");
        std::vector<int> v;
        for (int i = 0; i < f.rank(); ++i) v.push_back(e[static_cast<std::size_t>(i)] / 2);
        Weight w(std::move(v));
        if (!w.is_dominant()) continue;
        DominantWeight d(w);
        for (const Weight& nu : orbit(d)) {
            const C* other = f.find(nu.exp2());
            if (other == nullptr || !(*other == c)) throw MathError("not W-invariant");
            ++covered;
        }
        out.emplace(std::move(d), c);
    }
    if (covered != f.size()) throw MathError("not W-invariant");
    return out;
}

}  // namespace epsmac

#endif  // EPSMAC_ROOTSYS_HPP
