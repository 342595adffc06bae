// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "epsmac/epsmac.hpp"

using namespace epsmac;

namespace {

struct Criterion {
    int id;
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
};

std::string cell(const Config& c) {
    std::ostringstream s;
    s << "n=" << c.n << " k=" << c.k << " eps=" << (c.eps > 0 ? "+1" : "-1");
    return s.str();
}

int grid_bound(const Config& c) { return (c.n == 3 && c.k == 2) ? 3 : 4; }

Laurent x1(int e) { return Laurent::monomial(ExpVec::integral({e})); }

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Criterion> cs;
    const char* names[] = {"orthogonality",          "triangular form",       "self-adjointness of D",
                           "eigen-equation",         "eigenvalue separation", "denominator identities",
                           "k=1 specialization",     "correspondence",        "degenerate regime k=0",
                           "uniqueness cross-check"};
    for (int i = 0; i < 10; ++i) cs.push_back(Criterion{i + 1, names[i], 0, {}});
    auto& c1 = cs[0]; auto& c2 = cs[1]; auto& c3 = cs[2]; auto& c4 = cs[3]; auto& c5 = cs[4];
    auto& c6 = cs[5]; auto& c7 = cs[6]; auto& c8 = cs[7]; auto& c9 = cs[8]; auto& c10 = cs[9];

    // Criteria 1, 2, 4, 7, 10 share the main grid.
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int eps : {1, -1}) {
                const Config cfg{n, k, eps};
                const int bound = grid_bound(cfg);
                const InnerProduct ip(cfg);
                std::vector<OrthoEntry> es;
                try {
                    es = gram_schmidt(cfg, bound, &ip);
                } catch (const MathError& e) {
                    for (Criterion* c : {&c1, &c2, &c4, &c10}) c->expect(false, cell(cfg) + ": " + e.what());
                    continue;
                }
                for (std::size_t i = 0; i < es.size(); ++i)
                    for (std::size_t j = 0; j < i; ++j)
                        c1.expect(ip(es[i].F, es[j].F).is_zero(),
                                  cell(cfg) + " (F" + es[i].lam.to_string() + ", F" + es[j].lam.to_string() + ")");

                for (const auto& e : es) {
                    bool ok = true;
                    try {
                        const auto coeffs = orbit_coefficients(e.F);
                        auto it = coeffs.find(e.lam);
                        ok = it != coeffs.end() && it->second.is_one();
                        for (const auto& [mu, c] : coeffs) ok = ok && dominance_leq(mu, e.lam);
                    } catch (const MathError&) {
                        ok = false;
                    }
                    c2.expect(ok, cell(cfg) + " F" + e.lam.to_string());
                }

                for (const auto& r : verify_eigen(es, cfg))
                    c4.expect(r.pass, cell(cfg) + " lambda=" + r.lam.to_string() + " " + r.detail);

                if (k == 1 && n <= 2) {
                    const Algebra alg = eps > 0 ? Algebra::o_odd : Algebra::osp;
                    for (const auto& e : es)
                        c7.expect(e.F == character(e.lam, n, alg), cell(cfg) + " lambda=" + e.lam.to_string());
                }

                try {
                    const OrbitMatrix dm = d_matrix(cfg, bound);
                    c10.expect(is_triangular(dm), cell(cfg) + " D not triangular");
                    for (const auto& e : es)
                        c10.expect(triangular_eigenvector(dm, e.lam) == e.F, cell(cfg) + " lambda=" + e.lam.to_string());
                } catch (const MathError& e) {
                    c10.expect(false, cell(cfg) + ": " + e.what());
                }
            }

    // Criterion 3.
    for (int n = 1; n <= 2; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int eps : {1, -1}) {
                const Config cfg{n, k, eps};
                const InnerProduct ip(cfg);
                const auto ws = dominant_weights(n, 3);
                std::vector<Laurent> ms, dms;
                for (const auto& lam : ws) {
                    ms.push_back(orbit_sum(lam));
                    dms.push_back(apply_D(ms.back(), cfg));
                }
                for (std::size_t i = 0; i < ws.size(); ++i)
                    for (std::size_t j = 0; j <= i; ++j)
                        c3.expect(ip(dms[i], ms[j]) == ip(ms[i], dms[j]),
                                  cell(cfg) + " " + ws[i].to_string() + " / " + ws[j].to_string());
            }

    // Criterion 4, hand values.
    for (int k = 0; k <= 3; ++k)
        for (int eps : {1, -1}) {
            const Config cfg{1, k, eps};
            c4.expect(apply_D(Laurent::one(1), cfg) == Laurent::one(1) * (1 + RatFuncQ::q_pow(k)), cell(cfg) + " D(1)");
            for (int m = 0; m <= 4; ++m)
                c4.expect(eigenvalue_closed_form(DominantWeight({m}), cfg) == RatFuncQ::q_pow(m + k) + RatFuncQ::q_pow(-m),
                          cell(cfg) + " C_(" + std::to_string(m) + ")");
        }

    // Criterion 5.
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int eps : {1, -1}) {
                const Config cfg{n, k, eps};
                const auto ws = dominant_weights(n, 4);
                std::vector<RatFuncQ> eig;
                for (const auto& lam : ws) eig.push_back(eigenvalue_closed_form(lam, cfg));
                for (std::size_t i = 0; i < ws.size(); ++i)
                    for (std::size_t j = 0; j < i; ++j)
                        c5.expect(!(eig[i] == eig[j]), cell(cfg) + " " + ws[i].to_string() + " vs " + ws[j].to_string());
            }

    // Criterion 6.
    for (int n = 1; n <= 3; ++n) {
        c6.expect(check_L_forms(n), "L forms n=" + std::to_string(n));
        for (int eps : {1, -1})
            c6.expect(check_denominator_identity(n, eps),
                      "denominator n=" + std::to_string(n) + " eps=" + std::to_string(eps));
    }

    // Criterion 7, hand instances.
    c7.expect(gram_schmidt(Config{1, 1, 1}, 1)[1].F == x1(1) + x1(0) + x1(-1), "F_1 at eps=+1");
    c7.expect(gram_schmidt(Config{1, 1, -1}, 1)[1].F == x1(1) - x1(0) + x1(-1), "F_1 at eps=-1");

    // Criterion 8.
    std::ostringstream table;
    for (int n = 1; n <= 3; ++n) {
        table << "    n=" << n << ":";
        for (const auto& lam : dominant_weights(n, 4)) {
            const Correspondence c = correspondence(lam, n);
            c8.expect(c.match, "n=" + std::to_string(n) + " lambda=" + lam.to_string());
            table << " (" << lam.to_string() << ")" << (c.match ? (c.sign > 0 ? "+" : "-") : "?");
        }
        table << "\n";
    }

    // Criterion 9.
    for (int n = 1; n <= 3; ++n)
        for (int eps : {1, -1}) {
            const Config cfg{n, 0, eps};
            c9.expect(build_delta(cfg) == Laurent::one(n), cell(cfg) + " Delta");
            const InnerProduct ip(cfg);
            const auto es = gram_schmidt(cfg, 4, &ip);
            for (std::size_t i = 0; i < es.size(); ++i) {
                c9.expect(es[i].F == orbit_sum(es[i].lam), cell(cfg) + " F" + es[i].lam.to_string());
                for (std::size_t j = 0; j < es.size(); ++j) {
                    const RatFuncQ g = ip(orbit_sum(es[i].lam), orbit_sum(es[j].lam));
                    const RatFuncQ expected = i == j ? RatFuncQ(static_cast<long>(orbit(es[i].lam).size())) : RatFuncQ();
                    c9.expect(g == expected, cell(cfg) + " gram " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }

    bool all = true;
    for (const auto& c : cs) {
        const bool ok = c.failures.empty() && c.checked > 0;
        all = all && ok;
        std::printf("%s  criterion %2d  %-24s %ld checks\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), c.checked);
        for (const auto& f : c.failures) std::printf("      %s\n", f.c_str());
        if (c.id == 8) std::cout << "    sign table, sch_osp = s * ch_o(-x):\n" << table.str();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s (%.1f s)\n", all ? "ALL PASS" : "FAILURES", secs);
    return all ? 0 : 1;
}
