// The orthogonal family F_lambda, the difference operator D and its
// eigenvalues.
//
// D f = sum over w in W of w(Delta_+^{-1} T(Delta_+ f)) with
// T x^nu = q^(nu_1) x^nu.  Because T is an automorphism this is
// sum_w w(Phi * T f), where Phi = T(Delta_+)/Delta_+ telescopes to
//
//   Phi = prod over alpha in R+ with alpha_1 = 1 of
//         (1 - eps^p(alpha) t x^alpha) / (1 - eps^p(alpha) x^alpha).
#ifndef EPSMAC_MACDONALD_HPP
#define EPSMAC_MACDONALD_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epsmac/inner.hpp"
#include "epsmac/kernel.hpp"
#include "epsmac/laurent.hpp"
#include "epsmac/parallel.hpp"
#include "epsmac/rootsys.hpp"

namespace epsmac {

/// One member of the orthogonal basis.
struct OrthoEntry {
    DominantWeight lam;
    Laurent F;
    RatFuncQ norm2;  // (F, F)
    RatFuncQ eig;    // eigenvalue of D on F
};

/// A quotient of Laurent polynomials, kept unreduced.
struct RationalSection {
    Laurent num;
    Laurent den;
};

/// T x^nu = q^(nu_1) x^nu.
inline Laurent apply_T(const Laurent& f, const Config& cfg) {
    if (f.rank() != cfg.n) throw MathError("dimension mismatch");
    return f.map_coeffs([](const ExpVec& e, const RatFuncQ& c) {
        if (e[0] % 2 != 0) throw MathError("half-integer power of q");
        return c * RatFuncQ::q_pow(e[0] / 2);
    });
}

/// Positive roots with alpha(h1) = 1, i.e. eps_1 ± eps_j (j > 1) and eps_1.
inline std::vector<Root> h1_roots(const RootDatum& d) {
    std::vector<Root> out;
    for (const Root& r : d.R_plus)
        if (r.pairing_h1 == 1) out.push_back(r);
    return out;
}

/// Phi = T(Delta_+)/Delta_+ in telescoped form.  k = 0 gives 1/1.
inline RationalSection build_phi(const Config& cfg) {
    cfg.validate();
    RationalSection phi{Laurent::one(cfg.n), Laurent::one(cfg.n)};
    if (cfg.k == 0) return phi;
    for (const Root& a : h1_roots(build_datum(cfg.n))) {
        const long c = cfg.eps_pow(a.parity);
        phi.num = mul_binomial(phi.num, a.coords, RatFuncQ(PolyQ::monomial(-c, static_cast<std::size_t>(cfg.k))));
        phi.den = mul_binomial(phi.den, a.coords, RatFuncQ(-c));
    }
    return phi;
}

namespace detail {

/// Rewrites f = P / d with P having polynomial coefficients.
inline std::pair<LaurentPQ, PolyQ> clear_denominators(const Laurent& f) {
    PolyQ d(1);
    for (const auto& [e, c] : f) {
        if (c.den().is_one()) continue;
        PolyQ g = gcd(d, c.den());
        d = d * c.den().exact_div(g);
    }
    LaurentPQ p(f.rank());
    for (const auto& [e, c] : f) p.add_term(e, c.num() * d.exact_div(c.den()));
    return {std::move(p), std::move(d)};
}

/// Roots beta of the full working set with <beta, s*eps_j> = 1.
inline std::vector<Root> roots_pairing_one(const RootDatum& d, int j, int s) {
    std::vector<Root> out;
    for (const Root& r : d.all_roots())
        if (s * r.coord(j) == 1) out.push_back(r);
    return out;
}

}  // namespace detail

/// D applied to a W-invariant f, as an exact Laurent polynomial.
///
/// For W-invariant f the summand w(Phi T f) depends on w only through
/// h' = w(eps_1) in {±eps_j}, and each h' is hit |W|/(2n) times:
///
///   D f = |W|/(2n) * sum over h' of  prod_{<beta,h'>=1} (1 - c t x^beta)
///                                   / (1 - c x^beta)  *  T_h' f
///
/// with T_h' x^mu = q^<mu,h'>.  Each denominator equals, up to a monomial
/// unit, a sub-product of Q = prod over R+ of (1 - c x^alpha), so all terms
/// are put over Q, summed, and Q is divided out exactly at the end.
/// Coefficients are kept polynomial in q throughout.
inline Laurent apply_D(const Laurent& f, const Config& cfg, bool check_invariant = false) {
    cfg.validate();
    if (f.rank() != cfg.n) throw MathError("dimension mismatch");
    if (f.is_zero()) return f;
    if (check_invariant) (void)orbit_coefficients(f);
    const int n = cfg.n;
    const RootDatum d = build_datum(n);

    auto [P, denom] = detail::clear_denominators(f);
    int shift = 0;  // q^shift clears negative powers from T_h'
    for (const auto& [e, c] : P) {
        if (!e.is_integral()) throw MathError("half-integer power of q");
        for (int i = 0; i < n; ++i) shift = std::max(shift, std::abs(e[static_cast<std::size_t>(i)] / 2));
    }

    LaurentPQ total(n);
    for (int j = 0; j < n; ++j) {
        for (int s : {1, -1}) {
            // q^shift * T_h' P
            LaurentPQ term = P.map_coeffs([&](const ExpVec& e, const PolyQ& c) {
                return c.shifted(static_cast<std::size_t>(shift + s * e[static_cast<std::size_t>(j)] / 2));
            });
            std::vector<ExpVec> covered;  // positive representatives of the denominator roots
            ExpVec unit_shift(n);
            long unit_sign = 1;
            for (const Root& b : detail::roots_pairing_one(d, j, s)) {
                const long c = cfg.eps_pow(b.parity);
                term = mul_binomial(term, b.coords, PolyQ::monomial(-c, static_cast<std::size_t>(cfg.k)));
                const bool positive = b.coords > ExpVec(n);
                if (positive) {
                    covered.push_back(b.coords);
                } else {
                    // 1 - c x^b = -c x^b (1 - c x^-b): divide by the unit -c x^b.
                    covered.push_back(-b.coords);
                    unit_shift -= b.coords;
                    unit_sign *= -c;
                }
            }
            for (const Root& a : d.R_plus) {
                bool in_den = false;
                for (const ExpVec& e : covered) in_den = in_den || e == a.coords;
                if (!in_den) term = mul_binomial(term, a.coords, PolyQ(-cfg.eps_pow(a.parity)));
            }
            total += term.shifted(unit_shift, PolyQ(unit_sign));
        }
    }
    for (const Root& a : d.R_plus) {
        LaurentPQ factor = LaurentPQ::one(n);
        factor.add_term(a.coords, PolyQ(-cfg.eps_pow(a.parity)));
        total = l_exact_div(total, factor);
    }

    const long mult = weyl_order(n) / (2L * n);
    const PolyQ out_den = denom.shifted(static_cast<std::size_t>(shift));
    return total.map_coeffs<RatFuncQ>(
        [&](const ExpVec&, const PolyQ& c) { return RatFuncQ(c * Rational(mult), out_den); });
}

/// C_lam = t^rho(h1) * sum over w of q^lam(w h1) t^rho(w h1), t = q^k.
/// Every t-exponent rho(h1) + rho(w h1) is an integer.
inline RatFuncQ eigenvalue_closed_form(const DominantWeight& lam, const Config& cfg,
                                       int bound = kDefaultWeylBound) {
    cfg.validate();
    if (lam.rank() != cfg.n) throw MathError("dimension mismatch");
    const RootDatum d = build_datum(cfg.n);
    std::map<long, long> powers;  // exponent of q -> multiplicity
    for (const WeylElem& w : weyl_elements(cfg.n, bound)) {
        const int j = w.perm(0);
        const int s = w.flipped(0) ? -1 : 1;
        const int rho2_sum = d.rho[0] + s * d.rho[static_cast<std::size_t>(j)];  // doubled, even
        const long e = static_cast<long>(cfg.k) * (rho2_sum / 2) + s * lam[static_cast<std::size_t>(j)];
        ++powers[e];
    }
    RatFuncQ c;
    for (const auto& [e, m] : powers) c += RatFuncQ(m) * RatFuncQ::q_pow(e);
    return c;
}

/// F_lam for every dominant lam with |lam| <= bound, by Gram-Schmidt along
/// the fixed linear extension of dominance.
inline std::vector<OrthoEntry> gram_schmidt(const Config& cfg, int bound, const InnerProduct* ip = nullptr,
                                            int jobs = 1) {
    cfg.validate();
    std::optional<InnerProduct> own;
    if (ip == nullptr) ip = &own.emplace(cfg);
    std::vector<OrthoEntry> out;
    for (const DominantWeight& lam : dominant_weights(cfg.n, bound)) {
        const Laurent m = orbit_sum(lam);
        std::vector<RatFuncQ> proj(out.size());
        parallel_for(out.size(), jobs, [&](std::size_t i) { proj[i] = (*ip)(m, out[i].F); });
        Laurent F = m;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (proj[i].is_zero()) continue;
            F -= out[i].F * (proj[i] / out[i].norm2);
        }
        RatFuncQ norm2 = (*ip)(F, F);
        if (norm2.is_zero()) throw MathError("degenerate norm");
        RatFuncQ eig = eigenvalue_closed_form(lam, cfg);
        out.push_back(OrthoEntry{lam, std::move(F), std::move(norm2), std::move(eig)});
    }
    return out;
}

struct EigenCheck {
    DominantWeight lam;
    bool pass = false;
    std::string detail;
};

/// Checks D F = C F for every entry.
inline std::vector<EigenCheck> verify_eigen(const std::vector<OrthoEntry>& entries, const Config& cfg, int jobs = 1) {
    std::vector<EigenCheck> report(entries.size());
    parallel_for(entries.size(), jobs, [&](std::size_t i) {
        const OrthoEntry& e = entries[i];
        report[i].lam = e.lam;
        try {
            Laurent df = apply_D(e.F, cfg);
            report[i].pass = (df == e.F * e.eig);
            if (!report[i].pass) report[i].detail = "D F differs from C F";
        } catch (const MathError& err) {
            report[i].detail = err.what();
        }
    });
    return report;
}

/// Rows of D in the orbit-sum basis: for each dominant nu with |nu| <= bound,
/// the expansion D m_nu = sum_mu c[nu][mu] m_mu.
using OrbitMatrix = std::map<DominantWeight, std::map<DominantWeight, RatFuncQ>>;

inline OrbitMatrix d_matrix(const Config& cfg, int bound, int jobs = 1) {
    const auto weights = dominant_weights(cfg.n, bound);
    std::vector<std::map<DominantWeight, RatFuncQ>> rows(weights.size());
    parallel_for(weights.size(), jobs, [&](std::size_t i) {
        rows[i] = orbit_coefficients(apply_D(orbit_sum(weights[i]), cfg));
    });
    OrbitMatrix m;
    for (std::size_t i = 0; i < weights.size(); ++i) m.emplace(weights[i], std::move(rows[i]));
    return m;
}

/// True iff every D m_nu is supported on {mu <= nu}.
inline bool is_triangular(const OrbitMatrix& m) {
    for (const auto& [nu, row] : m)
        for (const auto& [mu, c] : row)
            if (!dominance_leq(mu, nu)) return false;
    return true;
}

inline Laurent from_orbit_coefficients(int n, const std::map<DominantWeight, RatFuncQ>& coeffs) {
    Laurent f(n);
    for (const auto& [mu, c] : coeffs) f += orbit_sum(mu) * c;
    return f;
}

/// The eigenvector of D in span{m_mu : mu <= lam} normalized to coefficient
/// 1 at m_lam, solved by back substitution in the triangular matrix of D.
/// Requires the diagonal entries to be pairwise distinct.
inline Laurent triangular_eigenvector(const OrbitMatrix& m, const DominantWeight& lam) {
    const auto& lam_row = m.at(lam);
    const RatFuncQ c_lam = lam_row.count(lam) ? lam_row.at(lam) : RatFuncQ();
    std::map<DominantWeight, RatFuncQ> v;
    v[lam] = RatFuncQ(1);
    // Walk the linear extension downward from lam.
    std::vector<DominantWeight> order;
    for (const auto& [nu, row] : m) order.push_back(nu);
    std::sort(order.begin(), order.end(), [](const DominantWeight& a, const DominantWeight& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    auto pos = std::find(order.begin(), order.end(), lam);
    for (auto it = std::make_reverse_iterator(pos); it != order.rend(); ++it) {
        const DominantWeight& mu = *it;
        if (!dominance_leq(mu, lam)) continue;
        RatFuncQ rhs;
        for (const auto& [nu, vn] : v) {
            const auto& row = m.at(nu);
            auto c = row.find(mu);
            if (c != row.end()) rhs += vn * c->second;
        }
        const auto& mu_row = m.at(mu);
        const RatFuncQ c_mu = mu_row.count(mu) ? mu_row.at(mu) : RatFuncQ();
        const RatFuncQ gap = c_lam - c_mu;
        if (gap.is_zero()) throw MathError("eigenvalue collision");
        if (!rhs.is_zero()) v[mu] = rhs / gap;
    }
    return from_orbit_coefficients(lam.rank(), v);
}

}  // namespace epsmac

#endif  // EPSMAC_MACDONALD_HPP
