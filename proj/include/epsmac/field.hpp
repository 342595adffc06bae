// Exact coefficient arithmetic: big rationals, dense polynomials in q over
// the rationals, and the field of rational functions in q.
#ifndef EPSMAC_FIELD_HPP
#define EPSMAC_FIELD_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace epsmac {

/// Raised for every algebraic failure (division by zero, poles, failed
/// exact divisions, invalid weights).  The message is part of the contract.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational; GMP keeps it canonical (coprime, den > 0).
using Rational = mpq_class;

/// "p/q" rendering, always with an explicit denominator.
inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p/q" or "p".  Throws MathError on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw MathError("malformed rational: " + s);
    if (r.get_den() == 0) throw MathError("division by zero");
    r.canonicalize();
    return r;
}

inline int compare_rational(const Rational& a, const Rational& b) { return cmp(a, b); }

// ---------------------------------------------------------------------------

/// Dense univariate polynomial in q with rational coefficients.  The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long c) { if (c != 0) coeffs_.emplace_back(c); }  // NOLINT: implicit scalar embedding
    PolyQ(const Rational& c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT
    PolyQ(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit PolyQ(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    /// c * q^d
    static PolyQ monomial(const Rational& c, std::size_t d) {
        PolyQ p;
        if (c == 0) return p;
        p.coeffs_.assign(d + 1, Rational(0));
        p.coeffs_[d] = c;
        return p;
    }
    static PolyQ q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }
    const Rational& lead() const { return coeffs_.back(); }
    /// Lowest degree carrying a nonzero coefficient (0 for zero).
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return 0;
    }
    bool is_monomial() const { return !is_zero() && valuation() + 1 == coeffs_.size(); }

    PolyQ& operator+=(const PolyQ& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    PolyQ& operator-=(const PolyQ& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }
    PolyQ& operator*=(const Rational& c) {
        if (c == 0) { coeffs_.clear(); return *this; }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    PolyQ& operator/=(const Rational& c) {
        if (c == 0) throw MathError("division by zero");
        for (auto& x : coeffs_) x /= c;
        return *this;
    }

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator-(PolyQ a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        PolyQ r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        mpq_class t;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                r.coeffs_[i + j] += t;
            }
        }
        r.trim();
        return r;
    }
    friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }

    /// Multiplies by q^d.
    PolyQ shifted(std::size_t d) const {
        if (is_zero() || d == 0) return *this;
        PolyQ r;
        r.coeffs_.assign(d, Rational(0));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }
    /// Divides by q^d; the low coefficients must vanish.
    PolyQ unshifted(std::size_t d) const {
        if (d == 0 || is_zero()) return *this;
        if (valuation() < d) throw MathError("not divisible");
        return PolyQ(std::vector<Rational>(coeffs_.begin() + static_cast<long>(d), coeffs_.end()));
    }

    /// Euclidean division: *this = quot * d + rem, deg rem < deg d.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const {
        if (d.is_zero()) throw MathError("division by zero");
        if (degree() < d.degree()) return {PolyQ(), *this};
        std::vector<Rational> rem = coeffs_;
        std::vector<Rational> quot(coeffs_.size() - d.coeffs_.size() + 1, Rational(0));
        const Rational& lc = d.lead();
        const bool unit = (lc == 1);
        mpq_class t;
        for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
            Rational& top = rem[static_cast<std::size_t>(i) + d.coeffs_.size() - 1];
            if (top == 0) continue;
            Rational c = unit ? top : Rational(top / lc);
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) {
                if (d.coeffs_[j] == 0) continue;
                mpq_mul(t.get_mpq_t(), c.get_mpq_t(), d.coeffs_[j].get_mpq_t());
                rem[static_cast<std::size_t>(i) + j] -= t;
            }
            quot[static_cast<std::size_t>(i)] = std::move(c);
        }
        rem.resize(d.coeffs_.size() - 1);
        return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
    }

    /// Exact quotient; throws "not divisible" when the remainder is nonzero.
    PolyQ exact_div(const PolyQ& d) const {
        auto [qt, r] = divmod(d);
        if (!r.is_zero()) throw MathError("not divisible");
        return qt;
    }

    PolyQ monic() const {
        if (is_zero() || lead() == 1) return *this;
        PolyQ r = *this;
        r /= lead();
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Monic gcd (zero iff both inputs are zero).
    friend PolyQ gcd(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        if (a.is_constant() || b.is_constant()) return PolyQ(1);
        // Common powers of q are cheap to strip and dominate in practice.
        const std::size_t v = std::min(a.valuation(), b.valuation());
        if (a.is_monomial() || b.is_monomial()) return monomial(1, v);
        PolyQ x = a.unshifted(v).monic(), y = b.unshifted(v).monic();
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            PolyQ r = x.divmod(y).second;
            x = std::move(y);
            y = r.monic();
        }
        return x.monic().shifted(v);
    }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

    /// Total order used only for keyed containers: by degree, then
    /// coefficients from the top.
    friend int compare(const PolyQ& a, const PolyQ& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
        for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    }

    /// Human-readable form in q, highest degree first, e.g. "q^2 - 1/2*q + 3".
    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty()) out += a.get_str();
            else if (a == 1) out += mono;
            else out += a.get_str() + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------

/// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic.
/// Equality of values is equality of representations.
class RatFuncQ {
public:
    RatFuncQ() : den_(1) {}
    RatFuncQ(long c) : num_(c), den_(1) {}  // NOLINT: scalar embedding
    RatFuncQ(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFuncQ(PolyQ p) : num_(std::move(p)), den_(1) {}  // NOLINT
    RatFuncQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFuncQ q() { return RatFuncQ(PolyQ::q()); }
    /// q^e for any integer e.
    static RatFuncQ q_pow(long e) {
        if (e >= 0) return RatFuncQ(PolyQ::monomial(1, static_cast<std::size_t>(e)));
        RatFuncQ r;
        r.num_ = PolyQ(1);
        r.den_ = PolyQ::monomial(1, static_cast<std::size_t>(-e));
        return r;
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational_constant() const { return den_.is_one() && num_.is_constant(); }

    RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
    RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
    RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
    RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

    friend RatFuncQ operator-(RatFuncQ a) {
        a.num_ = -a.num_;
        return a;
    }
    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) { return add(a, b, false); }
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return add(a, b, true); }

    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero() || b.is_zero()) return RatFuncQ();
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, PolyQ(1));
        // Cross-cancel first so the factors stay small.
        PolyQ g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        PolyQ n1 = g1.is_one() ? a.num_ : a.num_.exact_div(g1);
        PolyQ d2 = g1.is_one() ? b.den_ : b.den_.exact_div(g1);
        PolyQ n2 = g2.is_one() ? b.num_ : b.num_.exact_div(g2);
        PolyQ d1 = g2.is_one() ? a.den_ : a.den_.exact_div(g2);
        return fix_lead(n1 * n2, d1 * d2);
    }

    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) throw MathError("division by zero");
        return a * b.inverse();
    }

    RatFuncQ inverse() const {
        if (is_zero()) throw MathError("division by zero");
        return fix_lead(den_, num_);
    }

    /// Exact evaluation at a rational point; throws "pole" where den vanishes.
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw MathError("pole");
        return num_.eval(x) / d;
    }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend int compare(const RatFuncQ& a, const RatFuncQ& b) {
        int c = compare(a.num_, b.num_);
        return c != 0 ? c : compare(a.den_, b.den_);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    // Already coprime; only the denominator's leading coefficient needs fixing.
    static RatFuncQ fix_lead(PolyQ n, PolyQ d) {
        if (n.is_zero()) return RatFuncQ();
        if (d.lead() != 1) {
            Rational lc = d.lead();
            n /= lc;
            d /= lc;
        }
        return raw(std::move(n), std::move(d));
    }
    static RatFuncQ raw(PolyQ n, PolyQ d) {
        RatFuncQ r;
        if (n.is_zero()) return r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    static RatFuncQ add(const RatFuncQ& a, const RatFuncQ& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        if (a.den_.is_one() && b.den_.is_one())
            return raw(subtract ? a.num_ - b.num_ : a.num_ + b.num_, PolyQ(1));
        if (a.den_ == b.den_) {
            PolyQ n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            return RatFuncQ(std::move(n), a.den_);
        }
        // a/da + b/db with g = gcd(da, db): (a*(db/g) + b*(da/g)) / (da*db/g)
        PolyQ g = gcd(a.den_, b.den_);
        PolyQ da = g.is_one() ? a.den_ : a.den_.exact_div(g);
        PolyQ db = g.is_one() ? b.den_ : b.den_.exact_div(g);
        PolyQ n = subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
        if (n.is_zero()) return RatFuncQ();
        PolyQ d = da * b.den_;
        if (g.is_one()) return fix_lead(std::move(n), std::move(d));
        return RatFuncQ(std::move(n), std::move(d));
    }

    void normalize() {
        if (den_.is_zero()) throw MathError("division by zero");
        if (num_.is_zero()) {
            den_ = PolyQ(1);
            return;
        }
        PolyQ g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        if (den_.lead() != 1) {
            Rational lc = den_.lead();
            num_ /= lc;
            den_ /= lc;
        }
    }

    PolyQ num_;
    PolyQ den_;
};

/// Named entry points mirroring the arithmetic operators.
inline RatFuncQ rat_normalize(PolyQ num, PolyQ den) { return RatFuncQ(std::move(num), std::move(den)); }
inline Rational rat_eval(const RatFuncQ& f, const Rational& q0) { return f.eval(q0); }

enum class ArithOp { add, sub, mul, div };

inline RatFuncQ rat_arith(ArithOp op, const RatFuncQ& a, const RatFuncQ& b) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw MathError("unknown operation");
}

// Coefficient-ring traits used by the Laurent container.  Every coefficient
// type provides zero test, ring operations and an exact quotient.
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const PolyQ& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFuncQ& c) { return c.is_zero(); }

inline Rational coeff_exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw MathError("division by zero");
    return a / b;
}
inline PolyQ coeff_exact_div(const PolyQ& a, const PolyQ& b) {
    if (b.is_constant()) {
        if (b.is_zero()) throw MathError("division by zero");
        PolyQ r = a;
        r /= b.coeff(0);
        return r;
    }
    return a.exact_div(b);
}
inline RatFuncQ coeff_exact_div(const RatFuncQ& a, const RatFuncQ& b) { return a / b; }

inline int coeff_compare(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}
inline int coeff_compare(const PolyQ& a, const PolyQ& b) { return compare(a, b); }
inline int coeff_compare(const RatFuncQ& a, const RatFuncQ& b) { return compare(a, b); }

inline std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFuncQ& f) { return os << f.to_string(); }

}  // namespace epsmac

#endif  // EPSMAC_FIELD_HPP
