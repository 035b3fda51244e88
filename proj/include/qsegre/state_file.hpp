#pragma once

#include "qsegre/core.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsegre {

/**
 * On-disk state description, a JSON object:
 *
 *   {"dims": [2, 2], "amplitudes": [[re, im], ...], "label": "bell"}
 *
 * Amplitudes are listed in row-major multi-index order, last index fastest.
 * "label" is optional.
 */
struct StateFile {
    PureState state;
    std::optional<std::string> label;
};

/// Malformed input. field() names the offending key, or "json" for syntax errors.
class StateFileError : public std::runtime_error {
public:
    StateFileError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

StateFile parse_state_file(std::string_view text);
StateFile read_state_file(const std::filesystem::path& path);

/// Serialized with shortest round-trip doubles, so parsing the output gives
/// back a bit-identical state.
std::string format_state_file(const StateFile& file);

} // namespace qsegre
