// Aggregated structural checks for one configuration.
#ifndef EPSMAC_VERIFY_HPP
#define EPSMAC_VERIFY_HPP

#include <string>
#include <vector>

#include "epsmac/characters.hpp"
#include "epsmac/inner.hpp"
#include "epsmac/kernel.hpp"
#include "epsmac/macdonald.hpp"
#include "epsmac/rootsys.hpp"

namespace epsmac {

enum class CheckStatus { pass, fail, skipped };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    int passed = 0;
    int failed = 0;
    std::string detail;
};

struct VerifyReport {
    Config cfg;
    int bound = 0;
    std::vector<CheckResult> checks;
    /// Realized sign s(lam) with sch_osp = s * ch_o(-x), for the correspondence table.
    std::vector<std::pair<DominantWeight, Correspondence>> signs;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

namespace detail {
class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }
    void expect(bool ok, const std::string& what) {
        if (ok) {
            ++r_.passed;
        } else {
            ++r_.failed;
            if (r_.detail.empty()) r_.detail = what;
        }
    }
    CheckResult done() {
        r_.status = r_.failed == 0 ? CheckStatus::pass : CheckStatus::fail;
        return r_;
    }
    static CheckResult skipped(std::string name, std::string why) {
        CheckResult r;
        r.name = std::move(name);
        r.detail = std::move(why);
        return r;
    }

private:
    CheckResult r_;
};

template <class Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const MathError& e) {
        CheckResult r;
        r.name = name;
        r.status = CheckStatus::fail;
        r.failed = 1;
        r.detail = e.what();
        return r;
    }
}
}  // namespace detail

/// Runs, in order: the two forms of L, the denominator identities for both
/// eps, invariance and factorization of Delta, self-adjointness of D,
/// triangularity of D, Gram diagonality, the eigen-equation, eigenvalue
/// separation (k >= 1), the k = 1 character specialization, correspondence
/// totality, triangular form of F and the uniqueness cross-check.
inline VerifyReport verify_suite(const Config& cfg, int bound, int jobs = 1) {
    cfg.validate();
    VerifyReport rep{cfg, bound, {}, {}};
    const int n = cfg.n;
    const InnerProduct ip(cfg);
    const auto weights = dominant_weights(n, bound);

    rep.checks.push_back(detail::guarded("L forms", [&] {
        detail::Tally t("L forms");
        t.expect(check_L_forms(n), "product and quotient forms of L differ");
        t.expect(build_weyl_denominator(n, -1) == half_root_product<RatFuncQ>(n, build_datum(n).Sev_plus,
                                                                               [](const Root&) { return -1; }) *
                                                       half_root_product<RatFuncQ>(n, build_datum(n).Rod_plus,
                                                                                   [](const Root&) { return 1; }),
                 "superdenominator differs from the product form of L");
        return t.done();
    }));

    rep.checks.push_back(detail::guarded("denominator identity", [&] {
        detail::Tally t("denominator identity");
        for (int e : {1, -1}) t.expect(check_denominator_identity(n, e), "eps = " + std::to_string(e));
        return t.done();
    }));

    const Laurent delta = coerce<RatFuncQ>(ip.delta());
    rep.checks.push_back(detail::guarded("delta invariance", [&] {
        detail::Tally t("delta invariance");
        for (const WeylElem& w : weyl_elements(n)) t.expect(l_act(w, delta) == delta, "w Delta != Delta for " + w.to_string());
        t.expect(l_bar(delta) == delta, "bar(Delta) != Delta");
        const Laurent dp = build_delta_plus(cfg);
        t.expect(dp * l_bar(dp) == delta, "Delta != Delta_+ bar(Delta_+)");
        return t.done();
    }));

    // D in the orbit basis, shared by several checks.
    OrbitMatrix dm;
    std::string dm_error;
    try {
        dm = d_matrix(cfg, bound, jobs);
    } catch (const MathError& e) {
        dm_error = e.what();
    }

    rep.checks.push_back(detail::guarded("self-adjointness", [&] {
        if (!dm_error.empty()) throw MathError(dm_error);
        detail::Tally t("self-adjointness");
        for (std::size_t i = 0; i < weights.size(); ++i) {
            const Laurent dmi = from_orbit_coefficients(n, dm.at(weights[i]));
            for (std::size_t j = 0; j <= i; ++j) {
                const Laurent dmj = from_orbit_coefficients(n, dm.at(weights[j]));
                const Laurent mi = orbit_sum(weights[i]), mj = orbit_sum(weights[j]);
                t.expect(ip(dmi, mj) == ip(mi, dmj),
                         "(D m, m') != (m, D m') for " + weights[i].to_string() + " / " + weights[j].to_string());
            }
        }
        return t.done();
    }));

    rep.checks.push_back(detail::guarded("D triangularity", [&] {
        if (!dm_error.empty()) throw MathError(dm_error);
        detail::Tally t("D triangularity");
        for (const auto& [nu, row] : dm)
            for (const auto& [mu, c] : row)
                t.expect(dominance_leq(mu, nu), "D m_" + nu.to_string() + " has m_" + mu.to_string());
        return t.done();
    }));

    std::vector<OrthoEntry> entries;
    std::string gs_error;
    try {
        entries = gram_schmidt(cfg, bound, &ip, jobs);
    } catch (const MathError& e) {
        gs_error = e.what();
    }

    rep.checks.push_back(detail::guarded("gram diagonality", [&] {
        if (!gs_error.empty()) throw MathError(gs_error);
        detail::Tally t("gram diagonality");
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                t.expect(ip(entries[i].F, entries[j].F).is_zero(),
                         "(F_" + entries[i].lam.to_string() + ", F_" + entries[j].lam.to_string() + ") != 0");
        if (cfg.k == 0)
            for (const auto& e : entries)
                t.expect(e.norm2 == RatFuncQ(static_cast<long>(orbit(e.lam).size())), "k=0 norm != orbit size");
        return t.done();
    }));

    rep.checks.push_back(detail::guarded("eigen equation", [&] {
        if (!gs_error.empty()) throw MathError(gs_error);
        detail::Tally t("eigen equation");
        for (const auto& c : verify_eigen(entries, cfg, jobs)) t.expect(c.pass, c.lam.to_string() + ": " + c.detail);
        return t.done();
    }));

    if (cfg.k == 0) {
        rep.checks.push_back(detail::Tally::skipped("eigenvalue separation", "k = 0"));
    } else {
        rep.checks.push_back(detail::guarded("eigenvalue separation", [&] {
            detail::Tally t("eigenvalue separation");
            std::vector<RatFuncQ> eig;
            for (const auto& w : weights) eig.push_back(eigenvalue_closed_form(w, cfg));
            for (std::size_t i = 0; i < eig.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    t.expect(!(eig[i] == eig[j]), "C_" + weights[i].to_string() + " == C_" + weights[j].to_string());
            return t.done();
        }));
    }

    if (cfg.k != 1) {
        rep.checks.push_back(detail::Tally::skipped("character specialization", "k != 1"));
    } else {
        rep.checks.push_back(detail::guarded("character specialization", [&] {
            if (!gs_error.empty()) throw MathError(gs_error);
            detail::Tally t("character specialization");
            const Algebra alg = cfg.eps > 0 ? Algebra::o_odd : Algebra::osp;
            for (const auto& e : entries)
                t.expect(e.F == character(e.lam, n, alg), "F_" + e.lam.to_string() + " != character");
            return t.done();
        }));
    }

    rep.checks.push_back(detail::guarded("correspondence", [&] {
        detail::Tally t("correspondence");
        for (const auto& w : weights) {
            Correspondence c = correspondence(w, n);
            rep.signs.emplace_back(w, c);
            t.expect(c.match, "no sign relates sch and ch(-x) for " + w.to_string());
        }
        return t.done();
    }));

    rep.checks.push_back(detail::guarded("triangular form", [&] {
        if (!gs_error.empty()) throw MathError(gs_error);
        detail::Tally t("triangular form");
        for (const auto& e : entries) {
            auto coeffs = orbit_coefficients(e.F);
            auto lead = coeffs.find(e.lam);
            t.expect(lead != coeffs.end() && lead->second.is_one(), "F_" + e.lam.to_string() + " not monic at m_lam");
            for (const auto& [mu, c] : coeffs)
                t.expect(dominance_leq(mu, e.lam), "F_" + e.lam.to_string() + " has m_" + mu.to_string());
        }
        return t.done();
    }));

    if (cfg.k == 0) {
        rep.checks.push_back(detail::Tally::skipped("uniqueness", "k = 0: eigenvalues may collide"));
    } else {
        rep.checks.push_back(detail::guarded("uniqueness", [&] {
            if (!gs_error.empty()) throw MathError(gs_error);
            if (!dm_error.empty()) throw MathError(dm_error);
            detail::Tally t("uniqueness");
            for (const auto& e : entries)
                t.expect(triangular_eigenvector(dm, e.lam) == e.F, "eigenvector != F_" + e.lam.to_string());
            return t.done();
        }));
    }
    return rep;
}

}  // namespace epsmac

#endif  // EPSMAC_VERIFY_HPP
