#include <CLI11.hpp>
#include <iostream>
#include <numeric>
#include <string>

#include "projinv/cochain.hpp"
#include "projinv/image.hpp"
#include "projinv/invariants.hpp"
#include "projinv/json_io.hpp"
#include "projinv/moving_frame.hpp"
#include "projinv/relative.hpp"
#include "projinv/sampling.hpp"
#include "projinv/suites.hpp"
#include "projinv/verification.hpp"

namespace {

using namespace projinv;

struct GlobalOptions {
    std::uint64_t seed = 7;
    int trials = 100;
    double spread = 0.2;
    double eps_gp = kDefaultEpsGp;
    double eps_res = 1e-9;
    int indent = 2;
};

void emit(const json& j, int indent) { std::cout << j.dump(indent) << "\n"; }

Weight parse_weight(const std::string& text) {
    const auto slash = text.find('/');
    Weight w;
    if (slash == std::string::npos) {
        w.num = std::stoi(text);
        w.den = 1;
    } else {
        w.num = std::stoi(text.substr(0, slash));
        w.den = std::stoi(text.substr(slash + 1));
    }
    if (w.den <= 0 || w.den % 2 == 0) {
        throw CLI::ValidationError("--check", "weight denominator must be odd and positive");
    }
    return w;
}

std::function<double(const JetConfiguration&)> named_function(const std::string& name) {
    if (name == "C") return [](const JetConfiguration& c) { return invariantized_jacobian(c); };
    if (name == "zprime") return [](const JetConfiguration& c) { return primitive_element(c); };
    if (name == "delta123") return [](const JetConfiguration& c) { return delta(c, 1, 2, 3); };
    if (name == "zeta12") return [](const JetConfiguration& c) { return basis_n3(c).zeta12; };
    if (name == "zeta23") return [](const JetConfiguration& c) { return basis_n3(c).zeta23; };
    if (name == "zeta13") return [](const JetConfiguration& c) { return basis_n3(c).zeta13; };
    if (name == "tau") return [](const JetConfiguration& c) { return basis_n3(c).tau; };
    if (name == "tau-prime") return [](const JetConfiguration& c) { return tau_prime(c); };
    throw CLI::ValidationError("--function", "unknown function " + name);
}

json relations_json(const JetConfiguration& cfg) {
    const ZetaBasis z = basis_n3(cfg);
    const IotaCoordinates io = iota_coordinates(cfg);
    const double tp = tau_prime(cfg);
    const double predicted = z.tau - z.zeta12 * z.zeta13 * z.zeta23 / z.tau;
    return json{
        {"q2_q3_vs_zeta23", std::abs(io.q2 * io.q3 - z.zeta23) / (std::abs(z.zeta23) + 1e-12)},
        {"p3_vs_zeta13_plus_q3",
         std::abs(io.p3 - (z.zeta13 + io.q3)) /
             (std::max({std::abs(io.p3), std::abs(z.zeta13), std::abs(io.q3)}) + 1e-12)},
        {"p2_q3_vs_minus_tau", std::abs(io.p2 * io.q3 + z.tau) / (std::abs(z.tau) + 1e-12)},
        {"tau_prime_vs_basis",
         std::abs(tp - predicted) / (std::max(std::abs(tp), std::abs(predicted)) + 1e-12)},
    };
}

int run_frame(const GlobalOptions& g, const std::string& config_path) {
    const JetConfiguration cfg = load_config(config_path);
    const FrameOptions opts{g.eps_gp, g.eps_res};
    const NormalizedConfiguration normalized = normalize(cfg, opts);
    json out{{"frame", to_json(normalized.frame)},
             {"normalized", config_to_json(normalized.cfg)},
             {"max_pin_residual", normalized.max_pin_residual()},
             {"general_position", to_json(check_general_position(cfg, g.eps_gp))}};
    emit(out, g.indent);
    return normalized.max_pin_residual() <= g.eps_res * 10 ? 0 : 1;
}

int run_invariants(const GlobalOptions& g, const std::string& config_path, bool relations) {
    const JetConfiguration cfg = load_config(config_path);
    json out{{"n", cfg.size()},
             {"invariants", to_json(generating_set(cfg))},
             {"tau_prime", tau_prime(cfg)},
             {"iota", to_json(iota_coordinates(cfg))}};
    if (relations) out["relations"] = relations_json(cfg);
    emit(out, g.indent);
    return 0;
}

int run_relative(const GlobalOptions& g, const std::string& config_path, const std::string& check_weight,
                 const std::string& function_name) {
    const JetConfiguration cfg = load_config(config_path);
    json out{{"n", cfg.size()}, {"relative", to_json(relative_invariants(cfg))}};
    bool pass = true;
    if (!check_weight.empty()) {
        const Weight w = parse_weight(check_weight);
        const RelativeCheckReport report =
            check_relative(named_function(function_name), w, g.trials, g.seed, g.spread, cfg.size());
        out["check"] = to_json(report);
        out["check"]["function"] = function_name;
        out["check"]["weight"] = check_weight;
        pass = report.failures == 0 && report.max_rel_residual <= 1e-8;
        out["check"]["passes"] = pass;
    }
    emit(out, g.indent);
    return pass ? 0 : 1;
}

int run_verify(const GlobalOptions& g, const std::string& suite, const std::string& config_path) {
    std::vector<SuiteResult> results;
    const int t = g.trials;
    if (!config_path.empty()) {
        // sanity of a concrete configuration file: frame solve, closed-form
        // agreement, relation residuals
        const JetConfiguration cfg = load_config(config_path);
        SuiteResult r;
        r.name = "sample_config";
        const NormalizedConfiguration norm = normalize(cfg, FrameOptions{g.eps_gp, g.eps_res});
        const std::vector<double> closed = iota_coordinates(cfg).as_vector();
        const std::vector<double> framed = norm.free_coordinates();
        double agree = 0.0;
        for (std::size_t i = 0; i < closed.size(); ++i) {
            agree = std::max(agree, std::abs(closed[i] - framed[i]) /
                                        (std::max(std::abs(closed[i]), std::abs(framed[i])) + 1e-12));
        }
        double relations = 0.0;
        const json relation_residuals = relations_json(cfg);
        for (const auto& [key, value] : relation_residuals.items()) {
            relations = std::max(relations, value.get<double>());
        }
        r.details = json{{"config", config_path},
                         {"general_position", to_json(check_general_position(cfg, g.eps_gp))},
                         {"max_pin_residual", norm.max_pin_residual()},
                         {"max_agreement_residual", agree},
                         {"max_relation_residual", relations}};
        r.passes = check_general_position(cfg, g.eps_gp).passes && norm.max_pin_residual() <= 1e-8 &&
                   agree <= kFrameAgreementTol && relations <= kRelationTol;
        results.push_back(r);
    }
    if (suite == "all" || suite == "frame") results.push_back(frame_suite(g.seed, std::max(1, t / 4), g.spread));
    if (suite == "all" || suite == "invariance") results.push_back(invariance_suite(g.seed, t, g.spread));
    if (suite == "all" || suite == "agreement") results.push_back(frame_agreement_suite(g.seed, t));
    if (suite == "all" || suite == "relations") results.push_back(relations_suite(g.seed, t));
    if (suite == "all" || suite == "rank") results.push_back(rank_suite(g.seed, 10));
    if (suite == "all" || suite == "relative") results.push_back(relative_suite(g.seed, t));
    if (suite == "all" || suite == "cochain") results.push_back(cochain_suite(g.seed, std::max(1, t / 2)));
    if (suite == "all" || suite == "image") results.push_back(image_suite(g.seed, 512, 8));
    if (results.empty()) throw CLI::ValidationError("--suite", "unknown suite " + suite);

    bool all_pass = true;
    json out = json::array();
    for (const SuiteResult& r : results) {
        all_pass = all_pass && r.passes;
        json entry{{"suite", r.name}, {"passes", r.passes}, {"details", r.details}};
        out.push_back(entry);
    }
    emit(json{{"seed", g.seed}, {"results", out}, {"passes", all_pass}}, g.indent);
    return all_pass ? 0 : 1;
}

int run_rank(const GlobalOptions& g, int n, int trials) {
    const RankReport report = independence_rank(n, trials, g.seed);
    emit(to_json(report), g.indent);
    return report.passes ? 0 : 1;
}

int run_cochain_check(const GlobalOptions& g, int m, double spread, int n) {
    const HomotopyReport report = verify_contraction(m, g.trials, g.seed, spread, n);
    const bool pass = report.failures == 0 && report.max_rel_residual <= kContractionTol;
    json out = to_json(report);
    out["passes"] = pass;
    emit(out, g.indent);
    return pass ? 0 : 1;
}

int run_descriptor(const GlobalOptions& g, const std::string& image_path, int n, std::int64_t samples) {
    const GrayImage img = load_pgm(image_path);
    const McReport report = mc_descriptor(img, n, samples, g.seed);
    emit(to_json(report), g.indent);
    return 0;
}

int run_warp(const GlobalOptions& g, const std::string& image_path, const std::string& homography_path,
             const std::string& out_path, int bits) {
    const GrayImage img = load_pgm(image_path);
    const Homography h = load_homography(homography_path);
    const GrayImage warped = warp_image(img, h);
    save_pgm(warped, out_path, bits);
    emit(json{{"out", out_path}, {"width", warped.width}, {"height", warped.height}, {"bits", bits}},
         g.indent);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint first-order projective differential invariants of point-gradient configurations"};
    app.require_subcommand(1);
    app.fallthrough();  // global options are accepted after the subcommand too

    GlobalOptions g;
    app.add_option("--seed", g.seed, "root seed for all randomized runs");
    app.add_option("--trials", g.trials, "trial count for randomized checks");
    app.add_option("--spread", g.spread, "homography sampling spread");
    app.add_option("--eps-gp", g.eps_gp, "general-position threshold");
    app.add_option("--eps-res", g.eps_res, "frame residual tolerance");
    app.add_option("--json-indent", g.indent, "JSON output indentation");

    std::string config_path, image_path, homography_path, out_path;
    std::string suite = "all", check_weight, function_name = "C";
    bool relations = false;
    int rank_n = 3, rank_attempts = 10, m = 1, cochain_n = 4, desc_n = 4, bits = 16;
    std::int64_t samples = 1000;
    double cochain_spread = 0.1;

    CLI::App* frame = app.add_subcommand("frame", "solve the moving frame and print the normalized configuration");
    frame->add_option("config", config_path, "configuration JSON")->required();

    CLI::App* invariants = app.add_subcommand("invariants", "fundamental invariants and normalized coordinates");
    invariants->add_option("config", config_path, "configuration JSON")->required();
    invariants->add_flag("--relations", relations, "also print the relation residuals");

    CLI::App* relative = app.add_subcommand("relative", "invariantized Jacobian and primitive element");
    relative->add_option("config", config_path, "configuration JSON")->required();
    relative->add_option("--check", check_weight, "verify a weight law, e.g. -1 or 1/3");
    relative->add_option("--function", function_name,
                         "built-in function for --check (C, zprime, delta123, zeta12, zeta23, zeta13, tau, tau-prime)");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite,
                       "all, frame, invariance, agreement, relations, rank, relative, cochain, image");
    std::string verify_config;
    verify->add_option("--config", verify_config, "also sanity-check this configuration file");

    CLI::App* rank = app.add_subcommand("rank", "functional independence rank of the generating set");
    rank->add_option("--n", rank_n, "number of blocks")->required();
    rank->add_option("--attempts", rank_attempts, "sampled configurations");

    CLI::App* cochain = app.add_subcommand("cochain-check", "contraction identity of the homotopy");
    cochain->add_option("--m", m, "cochain degree (1, 2 or 3)")->required();
    cochain->add_option("--spread", cochain_spread, "group sampling spread");
    cochain->add_option("--n", cochain_n, "number of blocks");

    CLI::App* descriptor = app.add_subcommand("descriptor", "Monte Carlo weight-integrand estimate over an image");
    descriptor->add_option("image", image_path, "PGM (P5) image")->required();
    descriptor->add_option("--n", desc_n, "points per sampled configuration");
    descriptor->add_option("--samples", samples, "sample count");

    CLI::App* warp = app.add_subcommand("warp", "inverse-mapping bilinear homography warp");
    warp->add_option("image", image_path, "PGM (P5) image")->required();
    warp->add_option("--homography", homography_path, "homography JSON")->required();
    warp->add_option("--out", out_path, "output PGM path")->required();
    warp->add_option("--bits", bits, "output depth (8 or 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (frame->parsed()) return run_frame(g, config_path);
        if (invariants->parsed()) return run_invariants(g, config_path, relations);
        if (relative->parsed()) return run_relative(g, config_path, check_weight, function_name);
        if (verify->parsed()) return run_verify(g, suite, verify_config);
        if (rank->parsed()) return run_rank(g, rank_n, rank_attempts);
        if (cochain->parsed()) return run_cochain_check(g, m, cochain_spread, cochain_n);
        if (descriptor->parsed()) return run_descriptor(g, image_path, desc_n, samples);
        if (warp->parsed()) return run_warp(g, image_path, homography_path, out_path, bits);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IoFailure& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
