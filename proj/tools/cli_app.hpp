// Command-line front end: argument handling, dispatch and report emission.
#ifndef EPSMAC_TOOLS_CLI_APP_HPP
#define EPSMAC_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "epsmac/epsmac.hpp"

namespace epsmac::cli {

enum class Format { text, json };

struct RunConfig {
    std::string command;
    int n = 1;
    int k = 1;
    int eps = -1;
    int bound = 2;
    Format format = Format::text;
    std::string lambda;  // csv
    Algebra algebra = Algebra::osp;
    std::string out_path;
    int jobs = 1;
    bool force = false;

    Config config() const { return Config{n, k, eps}; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Usage problems detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void validate(const RunConfig& rc) {
    if (rc.n < 1) throw UsageError("--n must be >= 1");
    if (rc.n > kDefaultWeylBound) throw UsageError("--n must be <= " + std::to_string(kDefaultWeylBound));
    if (rc.k < 0) throw UsageError("--k must be >= 0");
    if (rc.eps != 1 && rc.eps != -1) throw UsageError("--eps must be +1 or -1");
    if (rc.bound < 0) throw UsageError("--bound must be >= 0");
    if (rc.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (!rc.force && weyl_order(rc.n) > 10000)
        throw UsageError("|W| = " + std::to_string(weyl_order(rc.n)) + " exceeds 10^4; pass --force");
}

inline nlohmann::json config_json(const RunConfig& rc) {
    return {{"n", rc.n}, {"k", rc.k}, {"eps", rc.eps}, {"bound", rc.bound}};
}

inline nlohmann::json envelope(const RunConfig& rc) {
    return {{"schema", kSchemaVersion}, {"command", rc.command}, {"config", config_json(rc)}};
}

inline DominantWeight lambda_arg(const RunConfig& rc) {
    if (rc.lambda.empty()) throw UsageError("--lambda is required");
    Weight w;
    try {
        w = parse_weight(rc.lambda);
    } catch (const MathError& e) {
        throw UsageError(e.what());
    }
    if (w.rank() != rc.n) throw UsageError("--lambda must have exactly n entries");
    if (!w.is_dominant()) throw UsageError("--lambda must be dominant");
    return DominantWeight(w);
}

// -- subcommands ------------------------------------------------------------

inline int cmd_polys(const RunConfig& rc, std::ostream& out) {
    const auto entries = gram_schmidt(rc.config(), rc.bound, nullptr, rc.jobs);
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["entries"] = nlohmann::json::array();
        for (const auto& e : entries) j["entries"].push_back(to_json(e));
        out << j.dump(2) << "\n";
    } else {
        for (const auto& e : entries) {
            out << "F[" << e.lam.to_string() << "] = " << to_text(e.F) << "\n";
            out << "  norm2 = " << e.norm2.to_string() << "\n";
            out << "  eig = " << e.eig.to_string() << "\n";
        }
    }
    return kExitOk;
}

inline int cmd_gram(const RunConfig& rc, std::ostream& out) {
    const Config cfg = rc.config();
    const InnerProduct ip(cfg);
    const auto entries = gram_schmidt(cfg, rc.bound, &ip, rc.jobs);
    const std::size_t sz = entries.size();
    std::vector<std::vector<RatFuncQ>> gf(sz, std::vector<RatFuncQ>(sz)), gm = gf;
    std::vector<Laurent> ms;
    for (const auto& e : entries) ms.push_back(orbit_sum(e.lam));
    parallel_for(sz * sz, rc.jobs, [&](std::size_t idx) {
        const std::size_t i = idx / sz, j = idx % sz;
        gf[i][j] = ip(entries[i].F, entries[j].F);
        gm[i][j] = ip(ms[i], ms[j]);
    });
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["weights"] = nlohmann::json::array();
        for (const auto& e : entries) j["weights"].push_back(e.lam.parts());
        auto matrix = [](const std::vector<std::vector<RatFuncQ>>& g) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& row : g) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& c : row) r.push_back(to_json(c));
                a.push_back(r);
            }
            return a;
        };
        j["gram_F"] = matrix(gf);
        j["gram_m"] = matrix(gm);
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t jx = 0; jx < sz; ++jx)
                out << "(F[" << entries[i].lam.to_string() << "], F[" << entries[jx].lam.to_string()
                    << "]) = " << gf[i][jx].to_string() << "\n";
    }
    return kExitOk;
}

inline int cmd_eigen(const RunConfig& rc, std::ostream& out) {
    const auto entries = gram_schmidt(rc.config(), rc.bound, nullptr, rc.jobs);
    const auto report = verify_eigen(entries, rc.config(), rc.jobs);
    bool ok = true;
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["results"] = nlohmann::json::array();
        for (std::size_t i = 0; i < report.size(); ++i) {
            ok = ok && report[i].pass;
            j["results"].push_back({{"lambda", report[i].lam.parts()},
                                    {"pass", report[i].pass},
                                    {"eig", to_json(entries[i].eig)},
                                    {"detail", report[i].detail}});
        }
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < report.size(); ++i) {
            ok = ok && report[i].pass;
            out << "D F[" << report[i].lam.to_string() << "] = (" << entries[i].eig.to_string() << ") F: "
                << (report[i].pass ? "pass" : "FAIL " + report[i].detail) << "\n";
        }
    }
    return ok ? kExitOk : kExitFailure;
}

inline int cmd_char(const RunConfig& rc, std::ostream& out) {
    const DominantWeight lam = lambda_arg(rc);
    const Laurent ch = character(lam, rc.n, rc.algebra);
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["algebra"] = algebra_name(rc.algebra);
        j["lambda"] = lam.parts();
        j["character"] = to_json(ch);
        j["eval_ones"] = to_json(l_eval_ones(ch));
        out << j.dump(2) << "\n";
    } else {
        out << (rc.algebra == Algebra::osp ? "sch" : "ch") << "[" << lam.to_string() << "] = " << to_text(ch) << "\n";
        out << "  " << (rc.algebra == Algebra::osp ? "sdim" : "dim") << " = " << l_eval_ones(ch).to_string() << "\n";
    }
    return kExitOk;
}

inline int cmd_correspond(const RunConfig& rc, std::ostream& out) {
    std::vector<DominantWeight> lams;
    if (!rc.lambda.empty()) lams.push_back(lambda_arg(rc));
    else lams = dominant_weights(rc.n, rc.bound);
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    for (const auto& lam : lams) {
        const Correspondence c = correspondence(lam, rc.n);
        ok = ok && c.match;
        rows.push_back({{"lambda", lam.parts()}, {"match", c.match}, {"sign", c.sign}});
        text << lam.to_string() << "\t" << (c.match ? (c.sign > 0 ? "+1" : "-1") : "none") << "\n";
    }
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["table"] = rows;
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "lambda\tsign\n" << text.str();
    }
    return ok ? kExitOk : kExitFailure;
}

inline int cmd_kernel(const RunConfig& rc, std::ostream& out) {
    const Config cfg = rc.config();
    const Laurent delta = build_delta(cfg), delta_plus = build_delta_plus(cfg);
    const Laurent den = build_weyl_denominator(cfg.n, cfg.eps);
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["delta"] = to_json(delta);
        j["delta_plus"] = to_json(delta_plus);
        j["weyl_denominator"] = to_json(den);
        out << j.dump(2) << "\n";
    } else {
        out << "Delta = " << to_text(delta) << "\n";
        out << "Delta_+ = " << to_text(delta_plus) << "\n";
        out << "delta = " << to_text(den) << "\n";
    }
    return kExitOk;
}

inline int cmd_verify(const RunConfig& rc, std::ostream& out) {
    const VerifyReport rep = verify_suite(rc.config(), rc.bound, rc.jobs);
    if (rc.format == Format::json) {
        nlohmann::json j = envelope(rc);
        j["checks"] = nlohmann::json::array();
        for (const auto& c : rep.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"status", status_name(c.status)},
                                   {"passed", c.passed},
                                   {"failed", c.failed},
                                   {"detail", c.detail}});
        j["signs"] = nlohmann::json::array();
        for (const auto& [lam, c] : rep.signs) j["signs"].push_back({{"lambda", lam.parts()}, {"sign", c.sign}});
        j["ok"] = rep.ok();
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            out << status_name(c.status) << "\t" << c.name << "\t" << c.passed << " passed, " << c.failed
                << " failed";
            if (!c.detail.empty()) out << "\t(" << c.detail << ")";
            out << "\n";
        }
        out << (rep.ok() ? "OK" : "FAILED") << "\n";
    }
    return rep.ok() ? kExitOk : kExitFailure;
}

// -- entry point --------------------------------------------------------------

/// Parses args (without the program name), runs the subcommand and returns
/// the exit code: 0 success, 1 failed assertion, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact eps-deformed Macdonald polynomials of type B"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string eps_str = "-1", format_str = "text", algebra_str = "osp";
    app.add_option("--n", rc.n, "number of variables");
    app.add_option("--k", rc.k, "t = q^k");
    app.add_option("--eps", eps_str, "+1 or -1");
    app.add_option("--bound", rc.bound, "largest |lambda|");
    app.add_option("--lambda", rc.lambda, "dominant weight, e.g. 2,1,0");
    app.add_option("--algebra", algebra_str, "o or osp");
    app.add_option("--format", format_str, "text or json");
    app.add_option("--out", rc.out_path, "write the report to a file");
    app.add_option("--jobs", rc.jobs, "worker threads");
    app.add_flag("--force", rc.force, "lift the |W| <= 10^4 guard");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"polys", "orthogonal polynomials F_lambda"},
        {"gram", "Gram matrices of F_lambda and m_lambda"},
        {"eigen", "check D F = C F"},
        {"char", "character or supercharacter"},
        {"correspond", "sign table of sch_osp vs ch_o(-x)"},
        {"kernel", "Delta, Delta_+ and delta"},
        {"verify", "run the full verification suite"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        rc.command = app.get_subcommands().front()->get_name();
        if (eps_str == "+1" || eps_str == "1") rc.eps = 1;
        else if (eps_str == "-1") rc.eps = -1;
        else throw UsageError("--eps must be +1 or -1");
        if (format_str == "text") rc.format = Format::text;
        else if (format_str == "json") rc.format = Format::json;
        else throw UsageError("--format must be text or json");
        if (algebra_str == "o") rc.algebra = Algebra::o_odd;
        else if (algebra_str == "osp") rc.algebra = Algebra::osp;
        else throw UsageError("--algebra must be o or osp");
        validate(rc);
        if (rc.command == "char" || (rc.command == "correspond" && !rc.lambda.empty())) (void)lambda_arg(rc);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (rc.command == "polys") code = cmd_polys(rc, buffer);
        else if (rc.command == "gram") code = cmd_gram(rc, buffer);
        else if (rc.command == "eigen") code = cmd_eigen(rc, buffer);
        else if (rc.command == "char") code = cmd_char(rc, buffer);
        else if (rc.command == "correspond") code = cmd_correspond(rc, buffer);
        else if (rc.command == "kernel") code = cmd_kernel(rc, buffer);
        else code = cmd_verify(rc, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    if (rc.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(rc.out_path);
        if (!f) {
            err << "error: cannot open " << rc.out_path << "\n";
            return kExitUsage;
        }
        f << buffer.str();
    }
    return code;
}

}  // namespace epsmac::cli

#endif  // EPSMAC_TOOLS_CLI_APP_HPP
