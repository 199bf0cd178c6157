#include "convseq/sequence_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace convseq {

CoefficientSequence coefficient_sequence_from_json(const std::string& text,
                                                   const std::string& origin) {
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& error) {
        throw ParseError(origin + ": " + error.what(), error.byte);
    }
    if (!document.is_object()) {
        throw ParseError(origin + ": top level must be a JSON object", 0);
    }
    if (!document.contains("name") || !document["name"].is_string()) {
        throw ParseError(origin + ": required string field \"name\" is missing", 0);
    }
    if (!document.contains("coefficients") || !document["coefficients"].is_array()) {
        throw ParseError(origin + ": required array field \"coefficients\" is missing", 0);
    }
    std::string name = document["name"].get<std::string>();
    if (name.empty()) {
        throw ParseError(origin + ": \"name\" must not be empty", 0);
    }
    const auto& items = document["coefficients"];
    if (items.empty()) {
        throw ParseError(origin + ": \"coefficients\" must list at least a_0", 0);
    }
    auto values = std::make_shared<std::vector<Rational>>();
    values->reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!items[i].is_string()) {
            throw ParseError(origin + ": coefficients[" + std::to_string(i) +
                                 "] must be a rational encoded as a string",
                             0);
        }
        try {
            values->push_back(parse_rational(items[i].get<std::string>()));
        } catch (const ParseError& error) {
            throw ParseError(origin + ": coefficients[" + std::to_string(i) + "]: " +
                                 error.what(),
                             error.position());
        }
    }
    if (!((*values)[0] == Rational(1))) {
        throw DomainError(origin + ": coefficients[0] = " + format_rational((*values)[0]) +
                          ", but a_0 must be exactly 1");
    }
    int last = static_cast<int>(values->size()) - 1;
    return CoefficientSequence(
        std::move(name), [values, last, origin](int i) -> Rational {
            if (i > last) {
                throw DomainError(origin + ": coefficient a_" + std::to_string(i) +
                                  " requested, but the list ends at a_" +
                                  std::to_string(last) + " (missing entries are not "
                                  "treated as zero)");
            }
            return (*values)[static_cast<std::size_t>(i)];
        });
}

CoefficientSequence load_coefficient_sequence(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open coefficient file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return coefficient_sequence_from_json(buffer.str(), path);
}

} // namespace convseq
