// Sparse Laurent polynomials in n variables on the half-integer lattice.
//
// Exponents are stored doubled: the entry 1 stands for x^(1/2), so e^rho and
// e^(alpha/2) are ordinary lattice points.  Terms live in a map ordered
// lexicographically on the exponent vector, which is also the monomial order
// used by exact division.
#ifndef EPSMAC_LAURENT_HPP
#define EPSMAC_LAURENT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "epsmac/field.hpp"
#include "epsmac/weyl_group.hpp"

namespace epsmac {

/// Doubled exponent vector.  Entries beyond the rank are kept at zero.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(int n) : n_(n) {
        if (n < 1 || n > kMaxRank) throw MathError("rank out of range: " + std::to_string(n));
    }
    /// From doubled entries.
    static ExpVec doubled(const std::vector<int>& e2) {
        ExpVec v(static_cast<int>(e2.size()));
        std::copy(e2.begin(), e2.end(), v.e_.begin());
        return v;
    }
    /// From true integer exponents.
    static ExpVec integral(const std::vector<int>& e) {
        ExpVec v(static_cast<int>(e.size()));
        for (std::size_t i = 0; i < e.size(); ++i) v.e_[i] = 2 * e[i];
        return v;
    }
    /// Doubled unit vector 2*eps_i (that is, the true exponent 1 at i).
    static ExpVec unit(int n, int i) {
        ExpVec v(n);
        v.e_[static_cast<std::size_t>(i)] = 2;
        return v;
    }

    int rank() const { return n_; }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    bool is_zero() const {
        return std::all_of(e_.begin(), e_.begin() + n_, [](int x) { return x == 0; });
    }
    bool is_integral() const {
        return std::all_of(e_.begin(), e_.begin() + n_, [](int x) { return x % 2 == 0; });
    }
    std::vector<int> entries() const { return {e_.begin(), e_.begin() + n_}; }

    ExpVec& operator+=(const ExpVec& o) {
        for (int i = 0; i < n_; ++i) e_[static_cast<std::size_t>(i)] += o.e_[static_cast<std::size_t>(i)];
        return *this;
    }
    ExpVec& operator-=(const ExpVec& o) {
        for (int i = 0; i < n_; ++i) e_[static_cast<std::size_t>(i)] -= o.e_[static_cast<std::size_t>(i)];
        return *this;
    }
    friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
    friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }
    friend ExpVec operator-(ExpVec a) {
        for (auto& x : a.e_) x = -x;
        return a;
    }

    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend auto operator<=>(const ExpVec& a, const ExpVec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.e_ <=> b.e_;
    }

private:
    int n_ = 0;
    std::array<int, kMaxRank> e_{};
};

/// Sparse Laurent polynomial with coefficients in C (Rational, PolyQ or
/// RatFuncQ).  No stored coefficient is zero.
template <class C>
class LaurentPolynomial {
public:
    using Coeff = C;
    using TermMap = std::map<ExpVec, C>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int n) : n_(n) {
        if (n < 1 || n > kMaxRank) throw MathError("rank out of range: " + std::to_string(n));
    }
    /// The constant c.
    LaurentPolynomial(int n, const C& c) : LaurentPolynomial(n) { add_term(ExpVec(n), c); }
    /// c * x^e (e doubled).
    static LaurentPolynomial monomial(const ExpVec& e, const C& c = C(1)) {
        LaurentPolynomial p(e.rank());
        p.add_term(e, c);
        return p;
    }
    static LaurentPolynomial one(int n) { return LaurentPolynomial(n, C(1)); }
    /// The variable x_i (0-based).
    static LaurentPolynomial var(int n, int i) { return monomial(ExpVec::unit(n, i)); }

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// Coefficient of x^e, zero when absent.
    C coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }
    const C* find(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? nullptr : &it->second;
    }

    /// Lexicographically largest / smallest term.
    const std::pair<const ExpVec, C>& leading() const { return *terms_.rbegin(); }
    const std::pair<const ExpVec, C>& trailing() const { return *terms_.begin(); }

    void add_term(const ExpVec& e, const C& c) {
        check_rank(e.rank());
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }
    void sub_term(const ExpVec& e, const C& c) {
        check_rank(e.rank());
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        match(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        match(o);
        for (const auto& [e, c] : o.terms_) sub_term(e, c);
        return *this;
    }
    LaurentPolynomial& operator*=(const C& s) {
        if (coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c = c * s;
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const C& s) { return a *= s; }
    friend LaurentPolynomial operator*(const C& s, LaurentPolynomial a) { return a *= s; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.match(b);
        LaurentPolynomial r(a.n_);
        if (a.is_zero() || b.is_zero()) return r;
        const LaurentPolynomial& big = a.size() >= b.size() ? a : b;
        const LaurentPolynomial& small = a.size() >= b.size() ? b : a;
        for (const auto& [es, cs] : small.terms_)
            for (const auto& [eb, cb] : big.terms_) r.add_term(es + eb, cs * cb);
        return r;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    /// Multiplies by c * x^e without touching the map structure order.
    LaurentPolynomial shifted(const ExpVec& e, const C& c = C(1)) const {
        LaurentPolynomial r(n_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [f, d] : terms_) r.terms_.emplace_hint(r.terms_.end(), f + e, d * c);
        return r;
    }

    /// Applies fn to every coefficient; zero results are dropped.
    template <class D = C, class Fn>
    LaurentPolynomial<D> map_coeffs(Fn&& fn) const {
        LaurentPolynomial<D> r(n_);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(e, c));
        return r;
    }

    /// Applies fn to every exponent vector; colliding images are summed.
    template <class Fn>
    LaurentPolynomial map_exponents(Fn&& fn) const {
        LaurentPolynomial r(n_);
        for (const auto& [e, c] : terms_) r.add_term(fn(e), c);
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    void check_rank(int n) const {
        if (n != n_) throw MathError("dimension mismatch");
    }

private:
    void match(const LaurentPolynomial& o) const { check_rank(o.n_); }

    int n_ = 0;
    TermMap terms_;
};

/// The default coefficient field after t = q^k.
using Laurent = LaurentPolynomial<RatFuncQ>;
/// Polynomial coefficients in q; a ring, used for the weight and D.
using LaurentPQ = LaurentPolynomial<PolyQ>;

template <class D, class C>
LaurentPolynomial<D> coerce(const LaurentPolynomial<C>& f) {
    return f.template map_coeffs<D>([](const ExpVec&, const C& c) { return D(c); });
}

// ---------------------------------------------------------------------------
// Named operations.

enum class RingOp { add, sub, mul };

template <class C>
LaurentPolynomial<C> l_arith(RingOp op, const LaurentPolynomial<C>& f, const LaurentPolynomial<C>& g) {
    switch (op) {
        case RingOp::add: return f + g;
        case RingOp::sub: return f - g;
        case RingOp::mul: return f * g;
    }
    throw MathError("unknown operation");
}

/// Bar involution x^e -> x^(-e); coefficients are left alone.
template <class C>
LaurentPolynomial<C> l_bar(const LaurentPolynomial<C>& f) {
    return f.map_exponents([](const ExpVec& e) { return -e; });
}

template <class C>
C l_const_term(const LaurentPolynomial<C>& f) {
    return f.coeff(ExpVec(f.rank()));
}

/// w acting on exponents.
template <class C>
LaurentPolynomial<C> l_act(const WeylElem& w, const LaurentPolynomial<C>& f) {
    f.check_rank(w.rank());
    return f.map_exponents([&](const ExpVec& e) { return w.apply(e); });
}

/// Sum of all coefficients (evaluation at x_i = 1).
template <class C>
C l_eval_ones(const LaurentPolynomial<C>& f) {
    C s(0);
    for (const auto& [e, c] : f) s += c;
    return s;
}

/// x_i -> -x_i.  Defined only on the integer lattice.
template <class C>
LaurentPolynomial<C> l_negate_vars(const LaurentPolynomial<C>& f) {
    LaurentPolynomial<C> r(f.rank());
    for (const auto& [e, c] : f) {
        if (!e.is_integral()) throw MathError("substitution undefined on half-lattice");
        int total = 0;
        for (int i = 0; i < f.rank(); ++i) total += e[static_cast<std::size_t>(i)] / 2;
        r.add_term(e, total % 2 == 0 ? c : C(-c));
    }
    return r;
}

/// Exact quotient f / g by leading-term elimination in lex order.
///
/// If f = g*h then along every coordinate the extreme exponents of f are the
/// sums of those of g and h, so every term of h lies in a known box; a
/// quotient term leaving that box proves non-divisibility.
template <class C>
LaurentPolynomial<C> l_exact_div(const LaurentPolynomial<C>& f, const LaurentPolynomial<C>& g) {
    f.check_rank(g.rank());
    if (g.is_zero()) throw MathError("division by zero");
    const int n = f.rank();
    LaurentPolynomial<C> quot(n);
    if (f.is_zero()) return quot;

    std::array<int, kMaxRank> lo{}, hi{};
    auto extremes = [n](const LaurentPolynomial<C>& p) {
        std::array<int, kMaxRank> mn{}, mx{};
        bool first = true;
        for (const auto& [e, c] : p) {
            for (int i = 0; i < n; ++i) {
                auto k = static_cast<std::size_t>(i);
                if (first || e[k] < mn[k]) mn[k] = e[k];
                if (first || e[k] > mx[k]) mx[k] = e[k];
            }
            first = false;
        }
        return std::pair{mn, mx};
    };
    auto [fmin, fmax] = extremes(f);
    auto [gmin, gmax] = extremes(g);
    for (int i = 0; i < n; ++i) {
        auto k = static_cast<std::size_t>(i);
        lo[k] = fmin[k] - gmin[k];
        hi[k] = fmax[k] - gmax[k];
        if (lo[k] > hi[k]) throw MathError("not divisible");
    }

    const auto& [glead_e, glead_c] = g.leading();
    LaurentPolynomial<C> rem = f;
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        ExpVec e = re - glead_e;
        for (int i = 0; i < n; ++i) {
            auto k = static_cast<std::size_t>(i);
            if (e[k] < lo[k] || e[k] > hi[k]) throw MathError("not divisible");
        }
        C c;
        try {
            c = coeff_exact_div(rc, glead_c);
        } catch (const MathError&) {
            throw MathError("not divisible");
        }
        for (const auto& [ge, gc] : g) rem.sub_term(ge + e, c * gc);
        quot.add_term(e, c);
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Text rendering.

/// Exponent in true units: "3", "-1", "3/2", "-1/2".
inline std::string half_to_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

inline std::string monomial_to_string(const ExpVec& e) {
    std::string s;
    for (int i = 0; i < e.rank(); ++i) {
        int d = e[static_cast<std::size_t>(i)];
        if (d == 0) continue;
        if (!s.empty()) s += " ";
        s += "x" + std::to_string(i + 1);
        if (d != 2) s += "^" + half_to_string(d);
    }
    return s;
}

inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_to_string(const PolyQ& c) { return c.to_string(); }
inline std::string coeff_to_string(const RatFuncQ& c) { return c.to_string(); }

/// Terms in descending lex order joined by " + " / " - ", e.g.
/// "x1 - 1 + x1^-1" or "(q + 1) * x1^3/2 x2^-1/2".
template <class C>
std::string to_text(const LaurentPolynomial<C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::string c = coeff_to_string(it->second);
        std::string m = monomial_to_string(it->first);
        bool neg = false;
        if (c.find(' ') == std::string::npos && c.front() == '-') {
            neg = true;
            c.erase(0, 1);
        } else if (c.find(' ') != std::string::npos && c.front() != '(') {
            c = "(" + c + ")";
        }
        std::string term;
        if (m.empty()) term = c;
        else if (c == "1") term = m;
        else term = c + " * " + m;
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

template <class C>
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial<C>& f) {
    return os << to_text(f);
}

inline std::ostream& operator<<(std::ostream& os, const ExpVec& e) { return os << monomial_to_string(e); }

}  // namespace epsmac

#endif  // EPSMAC_LAURENT_HPP
