#include "projinv/json_io.hpp"

#include <cmath>
#include <fstream>

namespace projinv {

namespace {

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoFailure("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const json& j, const std::string& path, int indent) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write " + path);
    out << j.dump(indent) << "\n";
}

}  // namespace

json config_to_json(const JetConfiguration& cfg) {
    json pts = json::array();
    for (const JetBlock& b : cfg.blocks()) {
        pts.push_back(json{{"x", b.x}, {"y", b.y}, {"p", b.p}, {"q", b.q}});
    }
    return json{{"points", pts}};
}

JetConfiguration config_from_json(const json& j) {
    if (!j.contains("points") || !j["points"].is_array()) {
        throw IoFailure("configuration JSON must contain a \"points\" array");
    }
    std::vector<JetBlock> blocks;
    blocks.reserve(j["points"].size());
    try {
        for (const json& p : j["points"]) {
            blocks.push_back(JetBlock{p.at("x").get<double>(), p.at("y").get<double>(),
                                      p.at("p").get<double>(), p.at("q").get<double>()});
        }
    } catch (const json::exception& e) {
        throw IoFailure(std::string("bad point entry: ") + e.what());
    }
    return JetConfiguration(std::move(blocks));
}

JetConfiguration load_config(const std::string& path) { return config_from_json(load_json_file(path)); }

void save_config(const JetConfiguration& cfg, const std::string& path, int indent) {
    write_json_file(config_to_json(cfg), path, indent);
}

json homography_to_json(const Homography& g) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        rows.push_back(json::array({g.matrix()(r, 0), g.matrix()(r, 1), g.matrix()(r, 2)}));
    }
    return json{{"matrix", rows}};
}

Homography homography_from_json(const json& j) {
    if (!j.contains("matrix")) throw IoFailure("homography JSON must contain \"matrix\"");
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != 3) throw IoFailure("matrix must have 3 rows");
    Eigen::Matrix3d m;
    try {
        for (int r = 0; r < 3; ++r) {
            if (rows[static_cast<std::size_t>(r)].size() != 3) throw IoFailure("matrix rows need 3 entries");
            for (int c = 0; c < 3; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>();
        }
    } catch (const json::exception& e) {
        throw IoFailure(std::string("bad matrix entry: ") + e.what());
    }
    return Homography(m);
}

Homography load_homography(const std::string& path) { return homography_from_json(load_json_file(path)); }

void save_homography(const Homography& g, const std::string& path, int indent) {
    write_json_file(homography_to_json(g), path, indent);
}

json to_json(const GeneralPositionReport& report) {
    return json{{"min_abs_delta123", report.min_abs_delta123},
                {"min_abs_phi", report.min_abs_phi},
                {"min_abs_xi_denominator", finite_or_null(report.min_abs_xi_denominator)},
                {"passes", report.passes}};
}

json to_json(const FrameParameters& params) {
    return json{{"a1", params.a1}, {"a2", params.a2}, {"a3", params.a3},
                {"b1", params.b1}, {"b2", params.b2}, {"b3", params.b3},
                {"c1", params.c1}, {"c2", params.c2}, {"c3", 1.0}};
}

json to_json(const InvariantVector& inv) {
    json xi = json::array();
    for (const auto& blk : inv.xi_blocks) xi.push_back(json::array({blk[0], blk[1], blk[2], blk[3]}));
    return json{{"zeta12", inv.zeta.zeta12},
                {"zeta23", inv.zeta.zeta23},
                {"zeta13", inv.zeta.zeta13},
                {"tau", inv.zeta.tau},
                {"xi_blocks", xi},
                {"vector", inv.as_vector()}};
}

json to_json(const IotaCoordinates& iota) {
    json blocks = json::array();
    for (const auto& b : iota.higher) {
        blocks.push_back(json{{"x", b.x}, {"y", b.y}, {"p", b.p}, {"q", b.q}});
    }
    return json{{"p2", iota.p2}, {"q2", iota.q2}, {"p3", iota.p3}, {"q3", iota.q3}, {"blocks", blocks}};
}

json to_json(const RelativeInvariantValue& value) {
    return json{{"c_value", value.c_value},
                {"z_prime", value.z_prime},
                {"g_div", value.g_div},
                {"c_weight", {{"num", value.c_weight.num}, {"den", value.c_weight.den}}},
                {"z_weight", {{"num", value.z_weight.num}, {"den", value.z_weight.den}}}};
}

json to_json(const RelativeCheckReport& report) {
    return json{{"trials", report.trials},
                {"failures", report.failures},
                {"max_rel_residual", report.max_rel_residual},
                {"seed", report.seed},
                {"spread", report.spread}};
}

json to_json(const RankReport& report) {
    return json{{"n", report.n},
                {"rows", report.rows},
                {"cols", report.cols},
                {"singular_values", report.singular_values},
                {"rank", report.rank},
                {"sigma_ratio", report.sigma_ratio},
                {"passes", report.passes}};
}

json to_json(const TrialReport& report) {
    return json{{"trials", report.trials},
                {"failures", report.failures},
                {"max_rel_residual", report.max_rel_residual},
                {"seed", report.seed},
                {"spread", report.spread}};
}

json to_json(const HomotopyReport& report) {
    return json{{"degree", report.degree},
                {"trials", report.trials},
                {"failures", report.failures},
                {"max_rel_residual", report.max_rel_residual},
                {"seed", report.seed},
                {"spread", report.spread}};
}

json to_json(const McReport& report) {
    return json{{"estimate", report.estimate},
                {"stderr", report.stderr_estimate},
                {"samples", report.samples},
                {"accepted", report.accepted},
                {"skipped", report.skipped}};
}

}  // namespace projinv
