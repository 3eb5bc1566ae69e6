#include "boolconv/measure_json.hpp"

#include <fstream>

namespace boolconv {

AtomicMeasure measure_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw InvalidMeasure("measure JSON must be an object with an \"atoms\" array");
    std::vector<Atom> atoms;
    atoms.reserve(j["atoms"].size());
    for (const auto& entry : j["atoms"]) {
        if (!entry.is_object() || !entry.contains("x") || !entry.contains("w") ||
            !entry["x"].is_number() || !entry["w"].is_number())
            throw InvalidMeasure("each atom must be an object with numeric \"x\" and \"w\"");
        atoms.push_back({entry["x"].get<double>(), entry["w"].get<double>()});
    }
    return make_measure(std::move(atoms));
}

nlohmann::ordered_json measure_to_json(const AtomicMeasure& mu) {
    nlohmann::ordered_json out;
    out["atoms"] = nlohmann::ordered_json::array();
    for (const Atom& a : mu.atoms()) {
        nlohmann::ordered_json atom;
        atom["x"] = a.position;
        atom["w"] = a.weight;
        out["atoms"].push_back(std::move(atom));
    }
    return out;
}

AtomicMeasure load_measure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidMeasure("cannot open measure file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidMeasure("cannot parse " + path + ": " + e.what());
    }
    return measure_from_json(j);
}

}  // namespace boolconv
