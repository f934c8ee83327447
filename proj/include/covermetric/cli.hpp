#ifndef COVERMETRIC_CLI_HPP
#define COVERMETRIC_CLI_HPP

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covermetric/covermetric.hpp"

namespace covermetric::cli {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline std::uint64_t enum_cap_from_env() {
    const char* env = std::getenv("COVERMETRIC_ENUM_CAP");
    if (!env) return kDefaultEnumCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw DomainError("COVERMETRIC_ENUM_CAP is not a positive integer");
    return v;
}

namespace detail {

struct CsvWriter {
    std::ofstream file;
    bool enabled = false;

    void open(const std::string& path, const std::string& header) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw Error("cannot open file for writing: " + path);
        enabled = true;
        file << header << '\n';
    }

    void row(const std::string& line) {
        if (enabled) file << line << '\n';
    }
};

inline void print_matrix(std::ostream& out, const Mat& a) {
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a.at(i, j);
        }
        out << '\n';
    }
}

inline FieldPtr field_from_q(std::uint32_t q) {
    auto [p, e] = factor_prime_power(q);
    return make_field(p, e);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cover-metric matrix codes: weight, decoding, bounds, experiments"};
    app.require_subcommand(1);

    std::uint64_t cap = kDefaultEnumCap;
    try {
        cap = enum_cap_from_env();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    app.add_option("--enum-cap", cap, "enumeration cap on q^k / q^(mn) searches");

    // ---- weight ----------------------------------------------------------
    auto* weight_cmd = app.add_subcommand("weight", "cover weight of the received matrix (or G_1) in a file");
    std::string weight_file;
    weight_cmd->add_option("file", weight_file, "instance file")->required();

    // ---- gen-code --------------------------------------------------------
    auto* gencode_cmd = app.add_subcommand("gen-code", "generate a uniformly random [m x n, k] code");
    struct {
        std::uint32_t q = 2;
        int m = 4, n = 4, k = 4;
        std::uint64_t seed = 0;
        std::string out_path;
    } gencode;
    gencode_cmd->add_option("--q", gencode.q, "field size (prime power)")->required();
    gencode_cmd->add_option("--m", gencode.m)->required();
    gencode_cmd->add_option("--n", gencode.n)->required();
    gencode_cmd->add_option("--k", gencode.k)->required();
    gencode_cmd->add_option("--seed", gencode.seed, "RNG seed (default 0)");
    gencode_cmd->add_option("--out", gencode.out_path, "output instance file")->required();

    // ---- gen-error -------------------------------------------------------
    auto* generr_cmd = app.add_subcommand("gen-error", "sample an error matrix of cover weight exactly t");
    struct {
        std::uint32_t q = 2;
        int m = 4, n = 4, t = 1;
        std::string model = "simple";
        std::uint64_t seed = 0;
        std::string out_path;
    } generr;
    generr_cmd->add_option("--q", generr.q)->required();
    generr_cmd->add_option("--m", generr.m)->required();
    generr_cmd->add_option("--n", generr.n)->required();
    generr_cmd->add_option("--t", generr.t)->required();
    generr_cmd->add_option("--model", generr.model, "simple|general")->check(CLI::IsMember({"simple", "general"}));
    generr_cmd->add_option("--seed", generr.seed, "RNG seed (default 0)");
    generr_cmd->add_option("--out", generr.out_path, "output instance file")->required();

    // ---- decode ----------------------------------------------------------
    auto* decode_cmd = app.add_subcommand("decode", "decode an instance file (needs received + radius)");
    struct {
        std::string algo = "prange";
        std::uint64_t max_iter = 0;
        std::uint64_t seed = 0;
        std::string file;
    } decode;
    decode_cmd->add_option("--algo", decode.algo, "prange|brute")->check(CLI::IsMember({"prange", "brute"}));
    decode_cmd->add_option("--max-iter", decode.max_iter, "iteration budget (0 = default 100/P(S))");
    decode_cmd->add_option("--seed", decode.seed, "RNG seed (default 0)");
    decode_cmd->add_option("file", decode.file, "instance file")->required();

    // ---- estimate --------------------------------------------------------
    auto* est_cmd = app.add_subcommand("estimate", "closed-form bounds, probabilities and asymptotic constants");
    struct {
        std::uint32_t q = 2;
        int m = 4, n = 4, k = 4, t = 1;
        double rate = -1.0, tau = -1.0;
        std::string csv;
    } est;
    est_cmd->add_option("--q", est.q)->required();
    est_cmd->add_option("--m", est.m)->required();
    est_cmd->add_option("--n", est.n)->required();
    est_cmd->add_option("--k", est.k)->required();
    est_cmd->add_option("--t", est.t)->required();
    est_cmd->add_option("--rate", est.rate, "rate R for asymptotic constants (default k/(mn))");
    est_cmd->add_option("--tau", est.tau, "tau for asymptotic constants (default t/n)");
    est_cmd->add_option("--csv", est.csv, "also write name,value rows to this CSV file");

    // ---- simulate --------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo experiments against the closed forms");
    struct {
        std::string what;
        std::uint32_t q = 2;
        int m = 4, n = 4, k = 0, t = 0;
        std::uint64_t trials = 10000;
        std::uint64_t seed = 0;
        int jobs = 1;
        std::string csv;
    } sim;
    sim_cmd->add_option("--what", sim.what, "prange-success|unique-cover|mdc-density|tx-distribution|model-ratio")
        ->required()
        ->check(CLI::IsMember({"prange-success", "unique-cover", "mdc-density", "tx-distribution", "model-ratio"}));
    sim_cmd->add_option("--q", sim.q)->required();
    sim_cmd->add_option("--m", sim.m)->required();
    sim_cmd->add_option("--n", sim.n)->required();
    sim_cmd->add_option("--k", sim.k);
    sim_cmd->add_option("--t", sim.t);
    sim_cmd->add_option("--trials", sim.trials);
    sim_cmd->add_option("--seed", sim.seed, "RNG seed (default 0)");
    sim_cmd->add_option("--jobs", sim.jobs, "worker threads (results independent of jobs)");
    sim_cmd->add_option("--csv", sim.csv, "append-style CSV output file");

    // ---- reduce ----------------------------------------------------------
    auto* red_cmd = app.add_subcommand("reduce", "reduce a Hamming instance to a cover-metric instance");
    struct {
        std::string problem = "codeword";
        std::string in_path, out_path;
    } red;
    red_cmd->add_option("--problem", red.problem, "codeword|decoding")->check(CLI::IsMember({"codeword", "decoding"}));
    red_cmd->add_option("file", red.in_path, "hamming instance file")->required();
    red_cmd->add_option("--out", red.out_path, "output cover instance file")->required();

    // ---- enumerate -------------------------------------------------------
    auto* enum_cmd = app.add_subcommand("enumerate", "exact sphere/ball sizes F_C and V_C by enumeration");
    struct {
        std::uint32_t q = 2;
        int m = 2, n = 2;
    } enm;
    enum_cmd->add_option("--q", enm.q)->required();
    enum_cmd->add_option("--m", enm.m)->required();
    enum_cmd->add_option("--n", enm.n)->required();

    std::vector<const char*> argv;
    argv.push_back("covermetric");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*weight_cmd) {
            InstanceFile inst = read_instance_file(weight_file);
            const Mat* target = nullptr;
            if (inst.received)
                target = &*inst.received;
            else if (!inst.generators.empty())
                target = &inst.generators.front();
            else
                throw DomainError("weight: file has neither a received matrix nor generators");
            MinimalCoverResult r = cover_weight(*target);
            r.unique = is_unique_minimal_cover(*target);
            out << "weight " << r.weight << ' ' << r.tx << ' ' << r.ty << ' ' << (*r.unique ? "true" : "false") << '\n';
            out << "cover";
            for (int line : r.cover.lines_1based(target->rows())) out << ' ' << line;
            out << '\n';
            return 0;
        }

        if (*gencode_cmd) {
            FieldPtr f = detail::field_from_q(gencode.q);
            Rng rng(gencode.seed);
            MatrixCode code = random_code(f, gencode.m, gencode.n, gencode.k, rng);
            InstanceFile inst;
            inst.f = f;
            inst.m = gencode.m;
            inst.n = gencode.n;
            inst.k = gencode.k;
            inst.generators = code.generators();
            write_instance_file(gencode.out_path, inst);
            out << "seed " << gencode.seed << '\n';
            out << "wrote " << gencode.out_path << '\n';
            return 0;
        }

        if (*generr_cmd) {
            FieldPtr f = detail::field_from_q(generr.q);
            Rng rng(generr.seed);
            ErrorModel model = generr.model == "simple" ? ErrorModel::simple(generr.t) : ErrorModel::general(generr.t);
            ErrorSample s = sample_error(f, generr.m, generr.n, model, rng, cap);
            InstanceFile inst;
            inst.f = f;
            inst.m = generr.m;
            inst.n = generr.n;
            inst.k = 0;
            inst.received = s.error;
            inst.radius = generr.t;
            write_instance_file(generr.out_path, inst);
            out << "seed " << generr.seed << '\n';
            out << "wrote " << generr.out_path << '\n';
            return 0;
        }

        if (*decode_cmd) {
            InstanceFile inst = read_instance_file(decode.file);
            if (!inst.received) throw DomainError("decode: instance file has no received matrix");
            if (!inst.radius) throw DomainError("decode: instance file has no radius line");
            MatrixCode code = instance_code(inst);
            DecodingInstance di = DecodingInstance::make(std::move(code), *inst.received, *inst.radius);
            if (decode.algo == "prange") {
                DecodeOutcome o = prange_decode(di, decode.max_iter, decode.seed);
                out << "seed " << decode.seed << '\n';
                if (o.status == DecodeOutcome::Status::Found) {
                    out << "status Found\n";
                    out << "iterations " << o.iterations_used << '\n';
                    out << "residual " << o.residual_weight << '\n';
                    out << "codeword\n";
                    detail::print_matrix(out, *o.codeword);
                } else {
                    out << "status IterationBudgetExhausted\n";
                    out << "iterations " << o.iterations_used << '\n';
                }
            } else {
                std::vector<Mat> hits = brute_force_decode(di, cap);
                auto total = checked_pow(inst.f->q(), static_cast<std::uint64_t>(di.code.k()), cap);
                out << "seed " << decode.seed << '\n';
                out << "status " << (hits.empty() ? "NoSolution" : "Found") << '\n';
                out << "iterations " << *total << '\n';
                out << "solutions " << hits.size() << '\n';
                if (!hits.empty()) {
                    out << "residual " << cover_weight(di.received.sub(hits.front())).weight << '\n';
                    out << "codeword\n";
                    detail::print_matrix(out, hits.front());
                }
            }
            return 0;
        }

        if (*est_cmd) {
            double rate = est.rate >= 0.0 ? est.rate : static_cast<double>(est.k) / (static_cast<double>(est.m) * est.n);
            double tau = est.tau >= 0.0 ? est.tau : static_cast<double>(est.t) / est.n;
            detail::CsvWriter csv;
            csv.open(est.csv, "name,value");
            auto emit = [&](const std::string& name, const std::string& value) {
                out << name;
                for (std::size_t i = name.size(); i < 28; ++i) out << ' ';
                out << value << '\n';
                csv.row(name + "," + value);
            };
            auto emit_d = [&](const std::string& name, double v) { emit(name, fmt_double(v)); };
            auto guarded = [&](const std::string& name, auto&& fn) {
                try {
                    fn();
                } catch (const DomainError&) {
                    emit(name, "n/a");
                }
            };

            guarded("singleton_k_max", [&] { emit("singleton_k_max", std::to_string(singleton_bound(est.q, est.m, est.n, est.t))); });
            guarded("ball_lower", [&] {
                BallBounds b = ball_bounds(est.q, std::max(est.m, est.n), std::min(est.m, est.n), est.t);
                emit_d("ball_lower", b.lower);
                emit_d("ball_upper", b.upper);
            });
            guarded("sphere_lower", [&] { emit_d("sphere_lower", sphere_lower_bound(est.q, est.m, est.n, est.t)); });
            guarded("exact_sizes", [&] {
                if (est.m * est.n <= 62 && checked_pow(est.q, static_cast<std::uint64_t>(est.m) * est.n, cap)) {
                    emit("sphere_exact", std::to_string(sphere_size_exact(est.q, est.m, est.n, est.t, cap)));
                    emit("ball_exact", std::to_string(ball_size_exact(est.q, est.m, est.n, est.t, cap)));
                }
            });
            emit_d("gv_rate_lower", 1.0 - static_cast<double>(est.t) / std::min(est.m, est.n));
            guarded("p_success", [&] {
                PrangeSuccess ps = prange_success_probability(est.m, est.n, est.k, est.t);
                std::ostringstream frac;
                frac << ps.p_success;
                emit("split_tx_ty", std::to_string(ps.split.tx_hat) + " " + std::to_string(ps.split.ty_hat));
                emit("p_success", frac.str());
                emit_d("p_success_value", to_double(ps.p_success));
                emit_d("p_success_lower", to_double(ps.lower));
                emit_d("p_success_upper", to_double(ps.upper));
                emit_d("expected_iterations", ps.expected_iterations);
            });
            guarded("asymptotic_constants", [&] {
                AsymptoticConstants c = asymptotic_constants(est.q, rate, tau);
                emit_d("c_prange", c.c_prange);
                emit_d("c_prange_gv", c.c_prange_gv);
                emit_d("c_cover", c.c_cover);
                emit_d("c_cover_gv", c.c_cover_gv);
            });
            guarded("minrank", [&] {
                MinrankComparison mr = minrank_comparison(est.q, est.m, est.n, est.k, est.t);
                emit_d("minrank_expected_solutions", mr.expected_solutions);
                emit_d("minrank_grs_exponent", mr.grs_exponent);
                emit_d("bardet_lower_log2", mr.bardet_lower_log2);
                emit_d("prange_upper_log2", mr.prange_upper_log2);
                emit_d("coverweight_check_cost", mr.coverweight_check_cost);
            });
            guarded("stern_list", [&] {
                int v = est.t + (est.t % 2);
                SternListBound sl = stern_list_lower(est.q, est.k, 0, v, est.n);
                emit_d("stern_list_log2_lower", sl.list_log2);
                emit_d("stern_paper_bound_log2", sl.paper_bound_log2);
            });
            return 0;
        }

        if (*sim_cmd) {
            if (sim.trials == 0) throw DomainError("simulate: trials must be positive");
            FieldPtr f = detail::field_from_q(sim.q);
            detail::CsvWriter csv;
            csv.open(sim.csv, "what,q,m,n,k,t,empirical,theoretical,trials,seed");
            auto csv_row = [&](double empirical, double theoretical) {
                std::ostringstream ss;
                ss << sim.what << ',' << sim.q << ',' << sim.m << ',' << sim.n << ',' << sim.k << ',' << sim.t << ','
                   << fmt_double(empirical) << ',' << fmt_double(theoretical) << ',' << sim.trials << ',' << sim.seed;
                csv.row(ss.str());
            };
            out << "seed " << sim.seed << '\n';
            if (sim.what == "prange-success") {
                PrangeCalibration c = run_prange_calibration(f, sim.m, sim.n, sim.k, sim.t, sim.trials, sim.seed, sim.jobs);
                out << "p_success_exact " << fmt_double(c.ps_exact) << '\n';
                out << "support_erased_rate " << fmt_double(c.support_erased_rate()) << '\n';
                out << "decoder_found_rate " << fmt_double(c.found_rate()) << '\n';
                out << "info_block_rate " << fmt_double(c.info_block_rate()) << '\n';
                csv_row(c.support_erased_rate(), c.ps_exact);
            } else if (sim.what == "unique-cover") {
                UniqueCoverStats s = unique_cover_rate(f, sim.m, sim.n, sim.t, sim.trials, sim.seed);
                out << "unique_rate " << fmt_double(s.empirical_rate) << '\n';
                out << "bound_mean " << fmt_double(s.bound_mean) << '\n';
                csv_row(s.empirical_rate, s.bound_mean);
            } else if (sim.what == "mdc-density") {
                double frac = mdc_density_experiment(f, sim.m, sim.n, sim.k, sim.trials, sim.seed, cap);
                out << "mdc_fraction " << fmt_double(frac) << '\n';
                csv_row(frac, 1.0);
            } else if (sim.what == "tx-distribution") {
                TxDistributionResult r = run_tx_distribution(f, sim.m, sim.n, sim.t, sim.trials, sim.seed, sim.jobs);
                out << "counts";
                for (auto c : r.counts) out << ' ' << c;
                out << '\n';
                out << "chi2 " << fmt_double(r.chi2) << '\n';
                out << "critical_001 " << fmt_double(r.critical_001) << '\n';
                csv_row(r.chi2, r.critical_001);
            } else {  // model-ratio
                ModelRatioResult r = run_model_ratio(f, sim.m, sim.n, sim.t, sim.trials, sim.seed, sim.jobs);
                BigInt exact = 0;
                for (int j = 0; j <= sim.t; ++j) exact += binomial(sim.t, j) * big_pow(sim.q, static_cast<std::uint64_t>(j) * (sim.t - j));
                out << "counts " << r.count_e1 << ' ' << r.count_e2 << '\n';
                out << "ratio " << fmt_double(r.ratio) << '\n';
                out << "se " << fmt_double(r.se) << '\n';
                out << "paper_ratio " << fmt_double(r.paper_ratio) << '\n';
                out << "exact_ratio " << exact.str() << '\n';
                csv_row(r.ratio, r.paper_ratio);
            }
            return 0;
        }

        if (*red_cmd) {
            HammingInstance h = read_hamming_file(red.in_path);
            bool want_decoding = red.problem == "decoding";
            if (want_decoding && !h.received) throw DomainError("reduce: decoding problem needs a received row");
            if (!want_decoding && h.received) h.received.reset();
            ReducedInstance r = want_decoding ? reduce_decoding_problem(h) : reduce_codeword_problem(h);
            InstanceFile inst;
            inst.f = r.f;
            inst.m = r.m();
            inst.n = r.n();
            inst.k = static_cast<int>(r.generators.size());
            inst.generators = r.generators;
            inst.received = r.received;
            inst.radius = r.t;
            write_instance_file(red.out_path, inst);
            out << "wrote " << red.out_path << '\n';
            return 0;
        }

        if (*enum_cmd) {
            std::vector<std::uint64_t> sizes = sphere_sizes_by_weight(enm.q, enm.m, enm.n, cap);
            out << "w F_C V_C\n";
            std::uint64_t ball = 0;
            for (std::size_t w = 0; w < sizes.size(); ++w) {
                ball += sizes[w];
                out << w << ' ' << sizes[w] << ' ' << ball << '\n';
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const MismatchDetectedError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace covermetric::cli

#endif  // COVERMETRIC_CLI_HPP
