#include <riesz_forms/report.hpp>

#include <sstream>

namespace riesz_forms {

nlohmann::json SuiteConfig::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    if (n) j["n"] = *n;
    if (p) j["p"] = *p;
    j["n_max"] = n_max;
    j["k_max"] = k_max;
    j["family"] = family;
    if (!custom_a.empty()) j["A"] = custom_a;
    if (!custom_b.empty()) j["B"] = custom_b;
    j["grid_n"] = grid_n;
    j["extent"] = extent;
    j["tolerance"] = tolerance;
    j["lambda"] = lambda;
    j["format"] = format;
    return j;
}

int Report::passed() const {
    int c = 0;
    for (const auto& r : cases) c += r.status == "pass";
    return c;
}

int Report::failed() const {
    int c = 0;
    for (const auto& r : cases) c += r.status == "fail";
    return c;
}

int Report::inapplicable() const {
    int c = 0;
    for (const auto& r : cases) c += r.status == "inapplicable";
    return c;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["version"] = version;
    j["config"] = config;
    j["cases"] = nlohmann::json::array();
    for (const auto& r : cases) {
        nlohmann::json c;
        c["params"] = r.params;
        c["status"] = r.status;
        c["detail"] = r.detail;
        j["cases"].push_back(c);
    }
    j["summary"] = {{"pass", passed()}, {"fail", failed()}, {"inapplicable", inapplicable()}};
    return j;
}

Report Report::from_json(const nlohmann::json& j) {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.config = j.at("config");
    for (const auto& c : j.at("cases"))
        r.cases.push_back({c.at("params"), c.at("status").get<std::string>(),
                           c.at("detail").get<std::string>()});
    return r;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "suite: " << suite << " (toolkit " << version << ")\n";
    for (const auto& r : cases) {
        os << "  [" << r.status << "] " << r.params.dump();
        if (!r.detail.empty() && r.status != "pass") os << " -- " << r.detail;
        os << "\n";
    }
    os << "summary: " << passed() << " pass, " << failed() << " fail, " << inapplicable()
       << " inapplicable\n";
    return os.str();
}

}  // namespace riesz_forms
