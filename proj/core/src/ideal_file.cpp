#include "inexp/ideal_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "inexp/parse.hpp"

namespace inexp {

IdealFile ideal_file_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("ideal file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DomainError("ideal file must be a JSON object");
    if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty())
        throw DomainError("ideal file needs a nonempty 'variables' array");
    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        throw DomainError("ideal file needs a nonempty 'generators' array");

    IdealFile file{{}, {}, std::nullopt, std::nullopt, IdealPresentation(0, {}), text};
    std::set<std::string> seen;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw DomainError("'variables' must contain strings");
        std::string name = v.get<std::string>();
        if (!seen.insert(name).second) throw DomainError("duplicate variable name '" + name + "'");
        file.variables.push_back(std::move(name));
    }
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw DomainError("'generators' must contain strings");
        file.generator_sources.push_back(g.get<std::string>());
    }
    if (doc.contains("k")) {
        if (!doc["k"].is_number_unsigned() || doc["k"].get<std::size_t>() == 0)
            throw DomainError("'k' must be a positive integer");
        file.k = doc["k"].get<std::size_t>();
        if (*file.k > file.generator_sources.size())
            throw DomainError("'k' exceeds the number of generators");
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw DomainError("'seed' must be a nonnegative integer");
        file.seed = doc["seed"].get<std::uint64_t>();
    }

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < file.generator_sources.size(); ++i) {
        Polynomial p = parse_polynomial(file.generator_sources[i], file.variables);
        if (p.is_zero())
            throw DomainError("generator " + std::to_string(i + 1) + " is the zero polynomial");
        gens.push_back(std::move(p));
    }
    file.presentation = IdealPresentation(file.variables.size(), std::move(gens), file.variables);
    return file;
}

IdealFile load_ideal_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open ideal file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return ideal_file_from_text(buf.str());
}

} // namespace inexp
