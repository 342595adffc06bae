// Weight functions of the scalar product and the (super)denominators.
#ifndef EPSMAC_KERNEL_HPP
#define EPSMAC_KERNEL_HPP

#include <string>
#include <type_traits>
#include <vector>

#include "epsmac/laurent.hpp"
#include "epsmac/rootsys.hpp"
#include "epsmac/weyl_group.hpp"

namespace epsmac {

/// n variables, t = q^k, and the specialization eps = ±1 of the odd parity sign.
struct Config {
    int n = 1;
    int k = 1;
    int eps = -1;

    void validate() const {
        if (n < 1 || n > kMaxRank) throw MathError("n out of range: " + std::to_string(n));
        if (k < 0) throw MathError("k must be >= 0");
        if (eps != 1 && eps != -1) throw MathError("eps must be +1 or -1");
    }
    /// eps^p for a parity p.
    int eps_pow(int parity) const { return parity == 0 ? 1 : eps; }
};

/// f * (1 + c x^e).
template <class C>
LaurentPolynomial<C> mul_binomial(const LaurentPolynomial<C>& f, const ExpVec& e, const C& c) {
    LaurentPolynomial<C> r = f;
    for (const auto& [fe, fc] : f) r.add_term(fe + e, fc * c);
    return r;
}

/// prod over roots, r = 0..k-1, of (1 - eps^p(alpha) q^r x^alpha).
template <class C = RatFuncQ>
LaurentPolynomial<C> root_product(const std::vector<Root>& roots, const Config& cfg) {
    cfg.validate();
    LaurentPolynomial<PolyQ> acc = LaurentPolynomial<PolyQ>::one(cfg.n);
    for (const Root& a : roots)
        for (int r = 0; r < cfg.k; ++r)
            acc = mul_binomial(acc, a.coords, PolyQ::monomial(-cfg.eps_pow(a.parity), static_cast<std::size_t>(r)));
    if constexpr (std::is_same_v<C, PolyQ>) return acc;
    else return coerce<C>(acc);
}

/// Delta(q, q^k, eps): the product over the full working root set.
template <class C = RatFuncQ>
LaurentPolynomial<C> build_delta(const Config& cfg) {
    return root_product<C>(build_datum(cfg.n).all_roots(), cfg);
}

/// Delta_+: the same product over the positive roots.
template <class C = RatFuncQ>
LaurentPolynomial<C> build_delta_plus(const Config& cfg) {
    return root_product<C>(build_datum(cfg.n).R_plus, cfg);
}

/// prod over positive roots of (x^(alpha/2) + s * x^(-alpha/2)), s picked per root.
template <class C, class SignFn>
LaurentPolynomial<C> half_root_product(int n, const std::vector<Root>& roots, SignFn&& sign) {
    LaurentPolynomial<C> acc = LaurentPolynomial<C>::one(n);
    for (const Root& a : roots) {
        // In doubled units x^(alpha/2) has exponent alpha's true coordinates.
        ExpVec half(n);
        for (int i = 0; i < n; ++i) half[static_cast<std::size_t>(i)] = a.coord(i);
        LaurentPolynomial<C> factor = LaurentPolynomial<C>::monomial(half);
        factor.add_term(-half, C(sign(a)));
        acc = acc * factor;
    }
    return acc;
}

/// delta = prod over R+ of (x^(alpha/2) - eps^p(alpha) x^(-alpha/2)).  For
/// eps = +1 this is the o(2n+1) Weyl denominator, for eps = -1 the
/// osp(1|2n) superdenominator L.
template <class C = RatFuncQ>
LaurentPolynomial<C> build_weyl_denominator(int n, int eps) {
    Config cfg{n, 1, eps};
    cfg.validate();
    return half_root_product<C>(n, build_datum(n).R_plus, [&](const Root& a) { return -cfg.eps_pow(a.parity); });
}

/// sum over W of sgn_eps(w) x^(w mu) for a doubled exponent mu.
template <class C = RatFuncQ>
LaurentPolynomial<C> alternating_sum(const ExpVec& mu, int eps, int bound = kDefaultWeylBound) {
    const int n = mu.rank();
    LaurentPolynomial<C> acc(n);
    for (const WeylElem& w : weyl_elements(n, bound)) acc.add_term(w.apply(mu), C(w.sign_eps(eps)));
    return acc;
}

/// delta equals the sgn_eps-alternating sum of x^(w rho).
inline bool check_denominator_identity(int n, int eps, int bound = kDefaultWeylBound) {
    auto lhs = build_weyl_denominator<Rational>(n, eps);
    auto rhs = alternating_sum<Rational>(build_datum(n).rho, eps, bound);
    return lhs == rhs;
}

/// The two presentations of L: the quotient of the even-root product of
/// osp(1|2n) by the odd-root product, and the product over S_ev+ of
/// (x^(a/2) - x^(-a/2)) times the product over R_od+ of (x^(b/2) + x^(-b/2)).
/// Compared after cross-multiplying by the odd-root product.
inline bool check_L_forms(int n, int bound = kDefaultWeylBound) {
    if (n < 1 || n > bound) throw MathError("rank out of range: " + std::to_string(n));
    const RootDatum d = build_datum(n);
    auto minus = [](const Root&) { return -1; };
    auto plus = [](const Root&) { return 1; };
    auto even_num = half_root_product<Rational>(n, d.Rev_plus_osp, minus);
    auto odd_den = half_root_product<Rational>(n, d.Rod_plus, minus);
    auto product_form = half_root_product<Rational>(n, d.Sev_plus, minus) *
                        half_root_product<Rational>(n, d.Rod_plus, plus);
    return product_form * odd_den == even_num;
}

}  // namespace epsmac

#endif  // EPSMAC_KERNEL_HPP
