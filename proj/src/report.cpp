#include "stsign/report_json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace stsign {

using nlohmann::ordered_json;

ordered_json to_json(const SignDensityReport& r) {
    ordered_json j;
    j["range"] = r.range;
    j["denominator"] = r.denominator;
    j["counts"] = {{"pos", r.n_pos}, {"neg", r.n_neg}, {"zero", r.n_zero}};
    j["densities"] = {{"pos", r.pos},
                      {"neg", r.neg},
                      {"zero", r.zero},
                      {"pos_closed", r.pos_closed},
                      {"neg_closed", r.neg_closed}};
    j["densities_nonzero"] = {{"pos", r.pos_nonzero}, {"neg", r.neg_nonzero}};
    return j;
}

ordered_json to_json(const PairHistogram& h) {
    ordered_json j;
    j["bins"] = h.bins;
    j["total"] = h.total;
    j["chi_square"] = h.chi_square;
    j["ks_marginal"] = {h.ks1, h.ks2};
    return j;
}

ordered_json to_json(const WeylOrbitStats& w) {
    ordered_json j;
    j["theta"] = {w.theta1, w.theta2};
    j["x"] = w.x;
    ordered_json boxes = ordered_json::array();
    for (const auto& bc : w.boxes) {
        ordered_json b;
        b["box"] = {bc.box.u1, bc.box.v1, bc.box.u2, bc.box.v2};
        b["count"] = bc.count;
        b["proportion"] = bc.proportion;
        boxes.push_back(b);
    }
    j["boxes"] = boxes;
    j["discrepancy_64x64"] = w.discrepancy;
    return j;
}

ordered_json to_json(const RelationReport& r) {
    ordered_json j;
    j["found"] = r.found;
    j["relation"] = {{"m", r.m}, {"n", r.n}, {"c", r.c}};
    j["residual"] = r.residual;
    j["theta1_rational_screen"] = {{"found", r.theta1_rational},
                                   {"denominator", r.theta1_denominator},
                                   {"residual", r.theta1_residual}};
    j["theta2_rational_screen"] = {{"found", r.theta2_rational},
                                   {"denominator", r.theta2_denominator},
                                   {"residual", r.theta2_residual}};
    return j;
}

ordered_json to_json(const EpsilonContainment& c) {
    ordered_json j;
    j["eps"] = c.eps;
    j["witnesses"] = c.witnesses;
    j["counterexamples"] = c.counterexamples;
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string histogram_csv(const PairHistogram& h) {
    std::string out = "i,j,observed,expected\n";
    for (int i = 0; i < h.bins; ++i)
        for (int j = 0; j < h.bins; ++j) {
            const std::size_t c = std::size_t(i) * h.bins + j;
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(h.counts[c]) + "," +
                   format_double(h.expected[c]) + "\n";
        }
    return out;
}

std::string sign_density_csv(const SignDensityReport& r) {
    std::string out =
        "range,denominator,n_pos,n_neg,n_zero,pos,neg,zero,pos_closed,"
        "neg_closed,pos_nonzero,neg_nonzero\n";
    out += std::to_string(r.range) + "," + std::to_string(r.denominator) + "," +
           std::to_string(r.n_pos) + "," + std::to_string(r.n_neg) + "," +
           std::to_string(r.n_zero) + "," + format_double(r.pos) + "," +
           format_double(r.neg) + "," + format_double(r.zero) + "," +
           format_double(r.pos_closed) + "," + format_double(r.neg_closed) +
           "," + format_double(r.pos_nonzero) + "," +
           format_double(r.neg_nonzero) + "\n";
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(contents.data(),
              static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace stsign
