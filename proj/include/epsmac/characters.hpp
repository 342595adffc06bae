// Weyl characters of o(2n+1), supercharacters of osp(1|2n), and the
// correspondence between the two under x_i -> -x_i.
//
// Both algebras use rho = sum (n - i + 1/2) eps_i; the two character formulas
// differ only in the sign character on W (sign for o(2n+1), sign' for osp).
#ifndef EPSMAC_CHARACTERS_HPP
#define EPSMAC_CHARACTERS_HPP

#include <string>

#include "epsmac/kernel.hpp"
#include "epsmac/laurent.hpp"
#include "epsmac/rootsys.hpp"

namespace epsmac {

enum class Algebra { o_odd, osp };

inline int algebra_eps(Algebra a) { return a == Algebra::o_odd ? 1 : -1; }

inline std::string algebra_name(Algebra a) { return a == Algebra::o_odd ? "o" : "osp"; }

/// sum over W of sgn_eps(w) x^(w(lam + rho)).
template <class C = RatFuncQ>
LaurentPolynomial<C> alternant(const DominantWeight& lam, int n, int eps) {
    if (lam.rank() != n) throw MathError("dimension mismatch");
    return alternating_sum<C>(lam.exp2() + build_datum(n).rho, eps);
}

/// Half-integer (spin) weights of o(2n+1) are not handled; doubled entries
/// must be even.
inline DominantWeight integral_dominant(const std::vector<int>& doubled_parts) {
    for (int x : doubled_parts)
        if (x % 2 != 0)
            throw MathError("half-integer weights (spin modules of o(2n+1)) are outside the integral lattice P");
    std::vector<int> parts;
    for (int x : doubled_parts) parts.push_back(x / 2);
    return DominantWeight(std::move(parts));
}

/// ch V^lam (o_odd) or sch V^lam (osp): the alternant divided by delta.
template <class C = RatFuncQ>
LaurentPolynomial<C> character(const DominantWeight& lam, int n, Algebra alg) {
    const int eps = algebra_eps(alg);
    return l_exact_div(alternant<C>(lam, n, eps), build_weyl_denominator<C>(n, eps));
}

struct Correspondence {
    bool match = false;
    int sign = 0;  // s with sch_osp = s * ch_o(-x) when match
};

/// Compares sch V^lam(osp(1|2n)) with ch V^lam(o(2n+1)) at x_i -> -x_i.
inline Correspondence correspondence(const DominantWeight& lam, int n) {
    auto g = character<Rational>(lam, n, Algebra::osp);
    auto h = l_negate_vars(character<Rational>(lam, n, Algebra::o_odd));
    if (g == h) return {true, 1};
    if (g == -h) return {true, -1};
    return {false, 0};
}

}  // namespace epsmac

#endif  // EPSMAC_CHARACTERS_HPP
