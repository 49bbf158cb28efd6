#include "wlat/render.hpp"

#include <cstdio>

namespace wlat::render {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

nlohmann::json to_json(const Spinor& s) {
    return nlohmann::json::array(
        {s.c0.real(), s.c0.imag(), s.c1.real(), s.c1.imag()});
}

nlohmann::json to_json(const SpinMatrix& m) {
    return nlohmann::json::array({
        nlohmann::json::array({m.m00.real(), m.m00.imag()}),
        nlohmann::json::array({m.m01.real(), m.m01.imag()}),
        nlohmann::json::array({m.m10.real(), m.m10.imag()}),
        nlohmann::json::array({m.m11.real(), m.m11.imag()}),
    });
}

nlohmann::json to_json(const evolution::SliceField& f) {
    nlohmann::json sites = nlohmann::json::array();
    for (const auto& [site, psi] : f.values) {
        nlohmann::json entry;
        entry["counts"] = nlohmann::json::array({site[0], site[1], site[2], site[3]});
        entry["spinor"] = to_json(psi);
        sites.push_back(entry);
    }
    nlohmann::json out;
    out["time"] = f.time;
    out["chirality"] = (f.chirality == Chirality::Right) ? "right" : "left";
    out["sites"] = sites;
    return out;
}

nlohmann::json to_json(const propagator::KernelTable& k) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [site, m] : k.entries) {
        nlohmann::json entry;
        entry["counts"] = nlohmann::json::array({site[0], site[1], site[2], site[3]});
        entry["matrix"] = to_json(m);
        entries.push_back(entry);
    }
    nlohmann::json out;
    out["t"] = k.time;
    out["chirality"] = (k.chirality == Chirality::Right) ? "right" : "left";
    out["entries"] = entries;
    return out;
}

std::string scan_csv(const std::vector<spectral::ScanRow>& rows) {
    std::string out = "theta1,theta2,theta3,theta4,re_lambda,im_lambda,branch_index\n";
    for (const auto& r : rows) {
        out += fmt17(r.theta[0]);
        out += ',';
        out += fmt17(r.theta[1]);
        out += ',';
        out += fmt17(r.theta[2]);
        out += ',';
        out += fmt17(r.theta[3]);
        out += ',';
        out += fmt17(r.lambda.real());
        out += ',';
        out += fmt17(r.lambda.imag());
        out += ',';
        out += std::to_string(r.branch);
        out += '\n';
    }
    return out;
}

}  // namespace wlat::render
