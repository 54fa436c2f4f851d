// sqfpairs command-line front end: censuses of n with n^2+1 and n^2+2 both
// square-free, the density constant two ways, root sets and local counts, the
// representation-to-root surjection, and the exponential-sum toolkit.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage/input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "sqfpairs/checks.hpp"

using json = nlohmann::ordered_json;
using namespace sqf;

namespace {

std::string f15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct Emitter {
    std::string format = "text";
    std::string out_path;
    std::ostringstream body;

    void config_echo(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv) {
        if (format == "json") return; // config embedded in the document instead
        body << "# config: command=" << command;
        for (const auto& [k, v] : kv) body << ' ' << k << '=' << v;
        body << '\n';
    }

    json config_json(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv) {
        json c;
        c["command"] = command;
        for (const auto& [k, v] : kv) c[k] = v;
        return c;
    }

    int flush() {
        if (out_path.empty()) {
            std::cout << body.str();
            return 0;
        }
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        f << body.str();
        return 0;
    }
};

std::vector<u64> parse_u64_list(const std::string& csv) {
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairs of square-free values of n^2+1 and n^2+2: census, density constant, "
                 "root surjection and exponential-sum toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Emitter em;
    u64 seed = 1;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", em.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", em.out_path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for sampled studies");
    app.add_option("--threads", threads, "worker threads (results are thread-count invariant)");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "exact census Gamma(X) and sigma*X comparison");
    std::string gamma_xs;
    double gamma_z = -1;
    gamma_cmd->add_option("--x", gamma_xs, "census bound X, or comma list for a table")->required();
    gamma_cmd->add_option("--z", gamma_z, "decomposition threshold in [sqrt(X), X)");

    // sigma
    auto* sigma_cmd = app.add_subcommand("sigma", "density constant via Euler product and/or lambda sum");
    std::string sigma_method = "both";
    u64 prime_bound = 1000000, dmax = 10000;
    sigma_cmd->add_option("--method", sigma_method)->check(CLI::IsMember({"product", "sum", "both"}));
    sigma_cmd->add_option("--prime-bound", prime_bound, "product truncation");
    sigma_cmd->add_option("--dmax", dmax, "sum truncation on d1*d2");

    // lambda
    auto* lambda_cmd = app.add_subcommand("lambda", "local solution count lambda(q1,q2)");
    u64 lq1 = 0, lq2 = 0, lmax = 0;
    lambda_cmd->add_option("--q1", lq1);
    lambda_cmd->add_option("--q2", lq2);
    lambda_cmd->add_option("--max", lmax, "verify multiplicativity up to this product bound");

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "solutions of n^2+a == 0 (mod q) in [1,q]");
    int roots_a = 1;
    u64 roots_q = 0, roots_max = 0;
    roots_cmd->add_option("--a", roots_a)->check(CLI::IsMember({1, 2}));
    roots_cmd->add_option("--mod", roots_q, "modulus q");
    roots_cmd->add_option("--max", roots_max, "check the 2^omega root-count law up to this bound");

    // surjection
    auto* sur_cmd = app.add_subcommand("surjection", "representations x^2+2y^2=n vs roots of z^2+2 (mod n)");
    auto* sur_verify = sur_cmd->add_subcommand("verify", "exhaustive surjectivity check");
    u64 sur_max = 10000;
    sur_verify->add_option("--max", sur_max);
    auto* sur_trace = sur_cmd->add_subcommand("trace", "preimage construction traces for one n");
    u64 sur_n = 0;
    sur_trace->add_option("--n", sur_n)->required();

    // kloosterman
    auto* kl_cmd = app.add_subcommand("kloosterman", "incomplete Kloosterman sums and the Weil-ratio study");
    kl_cmd->set_help_flag("--help", "print help"); // frees -h / --h for the sum parameter
    i64 kl_r = 0, kl_h = 0;
    double kl_alpha = 0, kl_beta = 0;
    bool kl_study = false;
    u64 kl_rmax = 5000, kl_samples = 10000;
    kl_cmd->add_option("--r", kl_r);
    kl_cmd->add_option("--h", kl_h);
    kl_cmd->add_option("--alpha", kl_alpha);
    kl_cmd->add_option("--beta", kl_beta);
    kl_cmd->add_flag("--study", kl_study, "sampled ratio study instead of a single sum");
    kl_cmd->add_option("--rmax", kl_rmax);
    kl_cmd->add_option("--samples", kl_samples);

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "Theta_m two ways: root sets vs representation transform");
    double th_d2 = 1, th_x = 100;
    i64 th_m = 1;
    theta_cmd->add_option("--d2", th_d2)->required();
    theta_cmd->add_option("--m", th_m)->required();
    theta_cmd->add_option("--x", th_x)->required();

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "sawtooth, truncated expansion and psi-sum studies");
    double psi_t = -1;
    u64 psi_M = 0, psi_samples = 10000;
    int psi_sum_a = 0;
    double psi_sum_x = 0;
    std::string psi_d_grid;
    psi_cmd->add_option("--t", psi_t, "evaluate psi and its truncation at t");
    psi_cmd->add_option("--M", psi_M, "truncation order");
    psi_cmd->add_option("--samples", psi_samples);
    psi_cmd->add_option("--sum-a", psi_sum_a, "psi-sum over root sets of n^2+a")->check(CLI::IsMember({1, 2}));
    psi_cmd->add_option("--x", psi_sum_x);
    psi_cmd->add_option("--d-grid", psi_d_grid, "comma list of D values for the bound study");

    // prehod
    auto* pre_cmd = app.add_subcommand("prehod", "sawtooth transfer identity between mod d^2 and mod d");
    u64 pre_d1 = 0;
    double pre_x = 0;
    pre_cmd->add_option("--d1", pre_d1)->required();
    pre_cmd->add_option("--x", pre_x)->required();

    // verify-all
    auto* verify_cmd = app.add_subcommand("verify-all", "run the full invariant suite");
    std::string scale = "smoke";
    verify_cmd->add_option("--scale", scale)->check(CLI::IsMember({"smoke", "desk"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help exits 0, any usage problem exits 2
    }

    int exit_code = 0;
    try {
        if (gamma_cmd->parsed()) {
            auto xs = parse_u64_list(gamma_xs);
            if (xs.empty()) throw std::invalid_argument("gamma: --x list is empty");
            if (gamma_z >= 0) {
                if (xs.size() != 1) throw std::invalid_argument("gamma: --z needs a single --x");
                em.config_echo("gamma", {{"x", gamma_xs}, {"z", f15(gamma_z)}, {"seed", std::to_string(seed)}});
                auto dec = gamma_decomposed(DecompositionPlan{xs[0], gamma_z});
                auto direct = gamma_direct(xs[0], threads);
                bool match = dec.total == static_cast<i64>(direct.gamma);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("gamma", {{"x", gamma_xs}, {"z", f15(gamma_z)}});
                    j["gamma1"] = dec.gamma1;
                    j["gamma2"] = dec.gamma2;
                    j["total"] = dec.total;
                    j["direct"] = direct.gamma;
                    j["match"] = match;
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "X,z,gamma1,gamma2,total,direct,match\n"
                            << xs[0] << ',' << f15(gamma_z) << ',' << dec.gamma1 << ',' << dec.gamma2
                            << ',' << dec.total << ',' << direct.gamma << ',' << (match ? 1 : 0) << '\n';
                }
                if (!match) exit_code = 1;
            } else {
                em.config_echo("gamma", {{"x", gamma_xs}, {"seed", std::to_string(seed)}});
                auto rep = asymptotic_report(xs, threads);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("gamma", {{"x", gamma_xs}});
                    j["sigma_truncation"] = sigma_default().truncation;
                    j["sigma_tail_bound"] = sigma_default().tail_bound;
                    j["rows"] = json::array();
                    for (const auto& r : rep.rows) {
                        j["rows"].push_back({{"X", r.X},
                                             {"gamma", r.gamma},
                                             {"sigma_x", r.sigma_x},
                                             {"abs_err", r.abs_err},
                                             {"rel_err", r.rel_err}});
                    }
                    if (rep.slope_defined) j["error_slope"] = rep.slope;
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "# sigma from Euler product, P=" << sigma_default().truncation
                            << ", tail<" << f15(sigma_default().tail_bound) << '\n';
                    em.body << "X,gamma,sigma_x,abs_err,rel_err\n";
                    for (const auto& r : rep.rows) {
                        em.body << r.X << ',' << r.gamma << ',' << f15(r.sigma_x) << ','
                                << f15(r.abs_err) << ',' << f15(r.rel_err) << '\n';
                    }
                    if (rep.slope_defined) em.body << "# error_slope," << f15(rep.slope) << '\n';
                }
            }
        } else if (sigma_cmd->parsed()) {
            em.config_echo("sigma", {{"method", sigma_method},
                                     {"prime-bound", std::to_string(prime_bound)},
                                     {"dmax", std::to_string(dmax)}});
            json j;
            j["config"] = em.config_json("sigma", {{"method", sigma_method},
                                                   {"prime-bound", std::to_string(prime_bound)},
                                                   {"dmax", std::to_string(dmax)}});
            SigmaEstimate prod, sum;
            if (sigma_method != "sum") {
                prod = sigma_product(prime_bound);
                j["product"] = {{"value", prod.value}, {"method", "product"},
                                {"truncation", prod.truncation}, {"tail_bound", prod.tail_bound}};
                if (em.format != "json") {
                    em.body << "method=product value=" << f15(prod.value) << " truncation="
                            << prod.truncation << " tail_bound=" << f15(prod.tail_bound) << '\n';
                }
            }
            if (sigma_method != "product") {
                sum = sigma_sum(dmax);
                j["sum"] = {{"value", sum.value}, {"method", "sum"},
                            {"truncation", sum.truncation}, {"tail_bound", sum.tail_bound}};
                if (em.format != "json") {
                    em.body << "method=sum value=" << f15(sum.value) << " truncation="
                            << sum.truncation << " tail_bound=" << f15(sum.tail_bound) << '\n';
                }
            }
            if (sigma_method == "both") {
                auto cmp = compare_sigma(prod, sum);
                j["difference"] = cmp.difference;
                j["allowance"] = cmp.allowance;
                j["consistent"] = cmp.consistent;
                if (em.format != "json") {
                    em.body << "two-method |difference|=" << f15(cmp.difference) << " allowance="
                            << f15(cmp.allowance) << " consistent=" << (cmp.consistent ? 1 : 0) << '\n';
                }
                if (!cmp.consistent) exit_code = 1;
            }
            if (em.format == "json") em.body << j.dump(2) << '\n';
        } else if (lambda_cmd->parsed()) {
            if (lmax > 0) {
                em.config_echo("lambda", {{"max", std::to_string(lmax)}});
                auto report = verify_multiplicativity(lmax);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("lambda", {{"max", std::to_string(lmax)}});
                    j["tuples_checked"] = report.tuples_checked;
                    j["violations"] = report.violations.size();
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "multiplicativity: tuples_checked=" << report.tuples_checked
                            << " violations=" << report.violations.size() << '\n';
                }
                if (!report.violations.empty()) exit_code = 1;
            } else {
                if (lq1 == 0 || lq2 == 0) throw std::invalid_argument("lambda: need --q1 and --q2 (or --max)");
                em.config_echo("lambda", {{"q1", std::to_string(lq1)}, {"q2", std::to_string(lq2)}});
                auto lc = lambda_count(lq1, lq2);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("lambda", {{"q1", std::to_string(lq1)}, {"q2", std::to_string(lq2)}});
                    j["value"] = lc.value;
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "lambda(" << lq1 << ',' << lq2 << ") = " << lc.value << '\n';
                }
            }
        } else if (roots_cmd->parsed()) {
            if (roots_max > 0) {
                em.config_echo("roots", {{"max", std::to_string(roots_max)}});
                auto report = root_count_law(roots_max);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("roots", {{"max", std::to_string(roots_max)}});
                    j["qualifying_checked"] = report.qualifying_checked;
                    j["violations"] = report.violations.size();
                    j["law_breaks_outside_conditions"] = report.law_breaks.size();
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "root-count law: qualifying_checked=" << report.qualifying_checked
                            << " violations=" << report.violations.size()
                            << " law_breaks_outside_conditions=" << report.law_breaks.size() << '\n';
                }
                if (!report.violations.empty()) exit_code = 1;
            } else {
                if (roots_q == 0) throw std::invalid_argument("roots: need --mod (or --max)");
                em.config_echo("roots", {{"a", std::to_string(roots_a)}, {"mod", std::to_string(roots_q)}});
                auto rs = roots_mod(roots_a, roots_q);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("roots", {{"a", std::to_string(roots_a)}, {"mod", std::to_string(roots_q)}});
                    j["roots"] = rs.roots;
                    j["count"] = rs.roots.size();
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "roots of n^2+" << roots_a << " == 0 (mod " << roots_q << "):";
                    for (u64 r : rs.roots) em.body << ' ' << r;
                    em.body << " (count " << rs.roots.size() << ")\n";
                }
            }
        } else if (sur_cmd->parsed()) {
            if (sur_verify->parsed()) {
                em.config_echo("surjection verify", {{"max", std::to_string(sur_max)}});
                auto report = verify_surjectivity(sur_max);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("surjection-verify", {{"max", std::to_string(sur_max)}});
                    j["n_checked"] = report.n_checked;
                    j["roots_checked"] = report.roots_checked;
                    j["case2_count"] = report.case2_count;
                    j["failures"] = report.failures.size();
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "surjectivity: n_checked=" << report.n_checked << " roots="
                            << report.roots_checked << " case2=" << report.case2_count
                            << " failures=" << report.failures.size() << '\n';
                }
                if (!report.failures.empty()) exit_code = 1;
            } else if (sur_trace->parsed()) {
                em.config_echo("surjection trace", {{"n", std::to_string(sur_n)}});
                json arr = json::array();
                for (u64 z : roots_mod(2, sur_n).roots) {
                    auto t = construct_preimage_traced(z, sur_n);
                    arr.push_back({{"z", t.z}, {"n", t.n}, {"a", t.a}, {"q", t.q}, {"r", t.r},
                                   {"case", t.case_id}, {"x", t.rep.x}, {"y", t.rep.y}});
                }
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("surjection-trace", {{"n", std::to_string(sur_n)}});
                    j["traces"] = arr;
                    em.body << j.dump(2) << '\n';
                } else {
                    for (const auto& t : arr) em.body << t.dump() << '\n';
                }
            } else {
                throw std::invalid_argument("surjection: use the verify or trace subcommand");
            }
        } else if (kl_cmd->parsed()) {
            if (kl_study) {
                em.config_echo("kloosterman study", {{"rmax", std::to_string(kl_rmax)},
                                                     {"samples", std::to_string(kl_samples)},
                                                     {"seed", std::to_string(seed)}});
                auto study = weil_ratio_study(kl_rmax, kl_samples, seed);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("kloosterman-study", {{"rmax", std::to_string(kl_rmax)},
                                                                       {"samples", std::to_string(kl_samples)},
                                                                       {"seed", std::to_string(seed)}});
                    j["max_ratio"] = study.max_ratio;
                    j["worst"] = {{"r", study.worst.r}, {"h", study.worst.h},
                                  {"alpha", study.worst.alpha}, {"beta", study.worst.beta}};
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "weil study: samples=" << study.samples << " max_ratio="
                            << f15(study.max_ratio) << " worst r=" << study.worst.r
                            << " h=" << study.worst.h << '\n';
                }
                if (study.max_ratio > 10.0) exit_code = 1;
            } else {
                if (kl_r == 0) throw std::invalid_argument("kloosterman: need --r (or --study)");
                em.config_echo("kloosterman", {{"r", std::to_string(kl_r)}, {"h", std::to_string(kl_h)},
                                               {"alpha", f15(kl_alpha)}, {"beta", f15(kl_beta)}});
                auto v = kloosterman_incomplete(kl_r, kl_h, kl_alpha, kl_beta);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("kloosterman", {{"r", std::to_string(kl_r)}, {"h", std::to_string(kl_h)},
                                                                 {"alpha", f15(kl_alpha)}, {"beta", f15(kl_beta)}});
                    j["re"] = v.real();
                    j["im"] = v.imag();
                    j["abs"] = std::abs(v);
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "K = " << f15(v.real()) << (v.imag() < 0 ? " - " : " + ")
                            << f15(std::abs(v.imag())) << "i, |K| = " << f15(std::abs(v)) << '\n';
                }
            }
        } else if (theta_cmd->parsed()) {
            em.config_echo("theta", {{"d2", f15(th_d2)}, {"m", std::to_string(th_m)}, {"x", f15(th_x)}});
            ThetaSpec spec{th_d2, th_m, th_x};
            auto direct = theta_direct(spec);
            auto via = theta_via_reps(spec);
            double diff = std::abs(direct - via);
            bool pass = diff <= 1e-9;
            if (em.format == "json") {
                json j;
                j["config"] = em.config_json("theta", {{"d2", f15(th_d2)}, {"m", std::to_string(th_m)}, {"x", f15(th_x)}});
                j["lhs"] = {{"re", via.real()}, {"im", via.imag()}};
                j["rhs"] = {{"re", direct.real()}, {"im", direct.imag()}};
                j["abs_diff"] = diff;
                j["pass"] = pass;
                em.body << j.dump(2) << '\n';
            } else {
                em.body << "via_reps = (" << f15(via.real()) << ", " << f15(via.imag()) << ")\n"
                        << "direct   = (" << f15(direct.real()) << ", " << f15(direct.imag()) << ")\n"
                        << "abs_diff = " << f15(diff) << " pass=" << (pass ? 1 : 0) << '\n';
            }
            if (!pass) exit_code = 1;
        } else if (psi_cmd->parsed()) {
            if (psi_sum_a != 0) {
                if (psi_sum_x <= 0 || psi_d_grid.empty()) {
                    throw std::invalid_argument("psi: the sum study needs --sum-a, --x and --d-grid");
                }
                em.config_echo("psi sum-study", {{"sum-a", std::to_string(psi_sum_a)},
                                                 {"x", f15(psi_sum_x)}, {"d-grid", psi_d_grid}});
                auto rows = psi_sum_study(psi_sum_a, parse_double_list(psi_d_grid), psi_sum_x);
                em.body << "D,value,ratio\n";
                for (const auto& r : rows) {
                    em.body << f15(r.D) << ',' << f15(r.value) << ',' << f15(r.ratio) << '\n';
                }
            } else if (psi_cmd->count("--t") > 0) {
                u64 M = psi_M ? psi_M : 100;
                em.config_echo("psi", {{"t", f15(psi_t)}, {"M", std::to_string(M)}});
                double exact = psi(psi_t), truncated = psi_truncated(psi_t, M);
                if (em.format == "json") {
                    json j;
                    j["config"] = em.config_json("psi", {{"t", f15(psi_t)}, {"M", std::to_string(M)}});
                    j["psi"] = exact;
                    j["truncated"] = truncated;
                    j["abs_err"] = std::abs(exact - truncated);
                    em.body << j.dump(2) << '\n';
                } else {
                    em.body << "psi=" << f15(exact) << " truncated=" << f15(truncated)
                            << " abs_err=" << f15(std::abs(exact - truncated)) << '\n';
                }
            } else {
                u64 M = psi_M ? psi_M : 4096;
                em.config_echo("psi error-study", {{"M", std::to_string(M)},
                                                   {"samples", std::to_string(psi_samples)},
                                                   {"seed", std::to_string(seed)}});
                std::vector<u64> Ms;
                for (u64 m = 32; m <= M; m *= 2) Ms.push_back(m);
                auto rows = psi_truncation_study(Ms, psi_samples, seed);
                em.body << "M,mean_abs_err\n";
                for (const auto& r : rows) em.body << r.M << ',' << f15(r.mean_abs_err) << '\n';
            }
        } else if (pre_cmd->parsed()) {
            em.config_echo("prehod", {{"d1", std::to_string(pre_d1)}, {"x", f15(pre_x)}});
            u64 xi = static_cast<u64>(pre_x);
            bool exact = static_cast<double>(xi) == pre_x && is_square(xi);
            json j;
            j["config"] = em.config_json("prehod", {{"d1", std::to_string(pre_d1)}, {"x", f15(pre_x)}});
            bool pass;
            if (exact) {
                auto res = prehod_check(pre_d1, xi);
                pass = res.equal;
                j["mode"] = "exact";
                j["lhs"] = res.lhs.get_str();
                j["rhs"] = res.rhs.get_str();
                j["abs_diff"] = std::abs(mpq_class(res.lhs - res.rhs).get_d());
                j["pass"] = pass;
            } else {
                auto res = prehod_check_float(pre_d1, pre_x);
                pass = res.equal;
                j["mode"] = "float";
                j["lhs"] = res.lhs;
                j["rhs"] = res.rhs;
                j["abs_diff"] = std::abs(res.lhs - res.rhs);
                j["pass"] = pass;
            }
            if (em.format == "json") {
                em.body << j.dump(2) << '\n';
            } else {
                em.body << "lhs=" << j["lhs"].dump() << " rhs=" << j["rhs"].dump()
                        << " abs_diff=" << j["abs_diff"].dump() << " pass=" << (pass ? 1 : 0) << '\n';
            }
            if (!pass) exit_code = 1;
        } else if (verify_cmd->parsed()) {
            em.config_echo("verify-all", {{"scale", scale}});
            auto results = run_all_checks(scale == "desk" ? Scale::desk : Scale::smoke);
            int failures = 0;
            for (const auto& r : results) {
                if (!r.passed) ++failures;
                if (em.format != "json") {
                    char line[1024];
                    std::snprintf(line, sizeof(line), "[%s] %2d %s — %s (%.2fs)\n",
                                  r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
                    em.body << line;
                }
            }
            if (em.format == "json") {
                json j;
                j["config"] = em.config_json("verify-all", {{"scale", scale}});
                j["checks"] = json::array();
                for (const auto& r : results) {
                    j["checks"].push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                                           {"detail", r.detail}, {"seconds", r.seconds}});
                }
                j["failures"] = failures;
                em.body << j.dump(2) << '\n';
            } else {
                em.body << (failures == 0 ? "all checks passed\n"
                                          : std::to_string(failures) + " check(s) failed\n");
            }
            if (failures > 0) exit_code = 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    int flush_code = em.flush();
    return flush_code != 0 ? flush_code : exit_code;
}
