#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polydyn/poly_map.hpp"

namespace polydyn {

/// One structured report per run: {command, input_digest, verdict, tables,
/// floats}, serialized as indented JSON. Field order is fixed so reports
/// are byte-deterministic for fixed inputs. Wall-clock timing is
/// deliberately never included.
struct Report {
    std::string command;
    std::string input_digest;
    std::string verdict;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
    nlohmann::ordered_json floats = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["input_digest"] = input_digest;
        j["verdict"] = verdict;
        j["tables"] = tables;
        j["floats"] = floats;
        return j;
    }

    std::string to_text() const { return to_json().dump(2) + "\n"; }
};

/// FNV-1a 64-bit over the canonical serialization of the run's inputs.
uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

/// Minimal RFC-4180-style CSV writer: header row mandatory, LF line
/// endings, '.' decimal separator, rationals rendered num/den. Cells here
/// never contain commas or quotes, so no quoting pass is needed.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

/// Machine-readable map serialization: name, dimension, and per-component
/// term lists in graded-lex order, each term an [exponents, coeff] pair.
nlohmann::ordered_json structured_map_json(const RationalMap& f);

}  // namespace polydyn
