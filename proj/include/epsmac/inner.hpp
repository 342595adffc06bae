// The constant-term scalar product (f, g) = [f * bar(g) * Delta]_0.
#ifndef EPSMAC_INNER_HPP
#define EPSMAC_INNER_HPP

#include <map>
#include <utility>
#include <vector>

#include "epsmac/kernel.hpp"
#include "epsmac/laurent.hpp"

namespace epsmac {

namespace detail {
struct CoeffLess {
    template <class C>
    bool operator()(const C& a, const C& b) const { return coeff_compare(a, b) < 0; }
};

/// Exponents grouped by equal coefficient value.
template <class C>
std::map<C, std::vector<ExpVec>, CoeffLess> group_by_coeff(const LaurentPolynomial<C>& f) {
    std::map<C, std::vector<ExpVec>, CoeffLess> groups;
    for (const auto& [e, c] : f) groups[c].push_back(e);
    return groups;
}
}  // namespace detail

/// Holds Delta for one configuration so that many pairings can share it.
///
/// The constant term of f * bar(g) * Delta is the sum over terms a of f and b
/// of g of f_a g_b Delta_(b - a).  Terms are grouped by coefficient value
/// first (W-invariant inputs have one group per orbit), so the inner sum runs
/// over polynomial coefficients of Delta and only one field product is formed
/// per pair of groups.
class InnerProduct {
public:
    explicit InnerProduct(const Config& cfg) : cfg_(cfg), delta_(build_delta<PolyQ>(cfg)) {}

    const Config& config() const { return cfg_; }
    const LaurentPQ& delta() const { return delta_; }

    template <class C>
    RatFuncQ operator()(const LaurentPolynomial<C>& f, const LaurentPolynomial<C>& g) const {
        if (f.rank() != cfg_.n || g.rank() != cfg_.n) throw MathError("dimension mismatch");
        auto fg = detail::group_by_coeff(f);
        auto gg = detail::group_by_coeff(g);
        RatFuncQ total;
        for (const auto& [fc, fes] : fg) {
            for (const auto& [gc, ges] : gg) {
                PolyQ s;
                for (const ExpVec& a : fes)
                    for (const ExpVec& b : ges)
                        if (const PolyQ* d = delta_.find(b - a)) s += *d;
                if (s.is_zero()) continue;
                total += RatFuncQ(fc) * RatFuncQ(gc) * RatFuncQ(std::move(s));
            }
        }
        return total;
    }

private:
    Config cfg_;
    LaurentPQ delta_;
};

/// (f, g) for a single pair; builds Delta on every call.
template <class C>
RatFuncQ inner(const LaurentPolynomial<C>& f, const LaurentPolynomial<C>& g, const Config& cfg) {
    return InnerProduct(cfg)(f, g);
}

/// Reference route: forms the whole product f * bar(g) * Delta and reads off
/// its constant term.
template <class C>
RatFuncQ inner_full_product(const LaurentPolynomial<C>& f, const LaurentPolynomial<C>& g, const Config& cfg) {
    if (f.rank() != cfg.n || g.rank() != cfg.n) throw MathError("dimension mismatch");
    Laurent ff = coerce<RatFuncQ>(f), gg = coerce<RatFuncQ>(g);
    return l_const_term(ff * l_bar(gg) * build_delta<RatFuncQ>(cfg));
}

}  // namespace epsmac

#endif  // EPSMAC_INNER_HPP
