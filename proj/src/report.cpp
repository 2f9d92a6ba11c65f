#include "polydyn/report.hpp"

#include <cstdio>

namespace polydyn {

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json structured_map_json(const RationalMap& f) {
    nlohmann::ordered_json j;
    j["name"] = f.name();
    j["dimension"] = f.dim();
    auto comps = nlohmann::ordered_json::array();
    for (const auto& p : f.components()) {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [m, c] : p.terms())
            terms.push_back({{"exponents", m.exponents()}, {"coeff", c.str()}});
        comps.push_back(terms);
    }
    j["components"] = comps;
    return j;
}

}  // namespace polydyn
