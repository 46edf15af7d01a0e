#pragma once

// JSON class-definition documents: points, optional weights (uniform when
// absent), optional concepts as 0/1 strings, optional functions as number
// arrays.

#include <fstream>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "shatterlab/core.hpp"

namespace shatterlab {

struct ClassDocument {
    std::unique_ptr<FiniteSpace> space;
    std::optional<ConceptClass> concepts;
    std::optional<FunctionClass> functions;
};

inline ClassDocument parse_class_document(const nlohmann::json& doc) {
    if (!doc.contains("points") || !doc["points"].is_array())
        throw domain_error("class document: missing 'points' array");
    std::vector<std::string> points;
    for (const auto& p : doc["points"]) points.push_back(p.get<std::string>());

    ClassDocument out;
    if (doc.contains("weights")) {
        std::vector<double> weights;
        for (const auto& w : doc["weights"]) weights.push_back(w.get<double>());
        out.space = std::make_unique<FiniteSpace>(std::move(points), std::move(weights));
    } else {
        out.space = std::make_unique<FiniteSpace>(std::move(points));
    }

    if (doc.contains("concepts")) {
        std::vector<Concept> cs;
        for (const auto& entry : doc["concepts"]) {
            auto s = entry.get<std::string>();
            std::vector<std::uint8_t> bits;
            bits.reserve(s.size());
            for (char ch : s) {
                if (ch != '0' && ch != '1')
                    throw domain_error("class document: concept strings must be 0/1");
                bits.push_back(ch == '1' ? 1 : 0);
            }
            cs.emplace_back(std::move(bits));
        }
        out.concepts.emplace(*out.space, std::move(cs));
    }

    if (doc.contains("functions")) {
        std::vector<FunctionTable> fs;
        for (const auto& entry : doc["functions"]) {
            std::vector<double> vals;
            for (const auto& v : entry) vals.push_back(v.get<double>());
            fs.emplace_back(std::move(vals));
        }
        out.functions.emplace(*out.space, std::move(fs));
    }
    return out;
}

inline ClassDocument load_class_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw domain_error(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return parse_class_document(doc);
}

}  // namespace shatterlab
