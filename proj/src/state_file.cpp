#include "qsegre/state_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qsegre {

using json = nlohmann::ordered_json;

StateFile parse_state_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw StateFileError("json", std::string("malformed document (") + e.what() + ")");
    }
    if (!doc.is_object()) throw StateFileError("json", "top level must be an object");

    if (!doc.contains("dims")) throw StateFileError("dims", "missing");
    const json& jdims = doc["dims"];
    if (!jdims.is_array() || jdims.empty()) throw StateFileError("dims", "must be a nonempty array");
    std::vector<std::size_t> dims;
    for (const json& d : jdims) {
        if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
            throw StateFileError("dims", "entries must be positive integers");
        dims.push_back(d.get<std::size_t>());
    }

    std::size_t expected = 0;
    try {
        expected = total_dimension(dims);
    } catch (const std::domain_error& e) {
        throw StateFileError("dims", e.what());
    }

    if (!doc.contains("amplitudes")) throw StateFileError("amplitudes", "missing");
    const json& jamps = doc["amplitudes"];
    if (!jamps.is_array()) throw StateFileError("amplitudes", "must be an array of [re, im] pairs");
    if (jamps.size() != expected)
        throw StateFileError("amplitudes", "expected " + std::to_string(expected) + " entries, got " +
                                               std::to_string(jamps.size()));
    std::vector<Complex> amplitudes;
    amplitudes.reserve(expected);
    for (std::size_t i = 0; i < jamps.size(); ++i) {
        const json& pair = jamps[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw StateFileError("amplitudes", "entry " + std::to_string(i) + " is not a [re, im] pair");
        amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }

    StateFile out{PureState(std::move(dims), std::move(amplitudes)), std::nullopt};
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw StateFileError("label", "must be a string");
        out.label = doc["label"].get<std::string>();
    }
    return out;
}

StateFile read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StateFileError("path", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_file(buffer.str());
}

std::string format_state_file(const StateFile& file) {
    json doc;
    doc["dims"] = file.state.dims();
    json amps = json::array();
    for (const Complex& a : file.state.amplitudes()) amps.push_back({a.real(), a.imag()});
    doc["amplitudes"] = std::move(amps);
    if (file.label) doc["label"] = *file.label;
    return doc.dump(2) + "\n";
}

} // namespace qsegre
