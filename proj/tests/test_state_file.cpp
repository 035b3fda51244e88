#include "qsegre/oracle.hpp"
#include "qsegre/state_file.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace qsegre;

namespace {

std::string field_of(const std::string& text) {
    try {
        (void)parse_state_file(text);
    } catch (const StateFileError& e) {
        return e.field();
    }
    return "";
}

} // namespace

TEST_CASE("parse a labelled state") {
    const StateFile f = parse_state_file(R"({"dims": [2, 2], "amplitudes": [[0.5, 0], [0, 0.5], [0.5, 0], [0, -0.5]], "label": "x"})");
    CHECK(f.state.dims() == std::vector<std::size_t>{2, 2});
    CHECK(f.state[1] == Complex(0, 0.5));
    CHECK(f.label == "x");
    CHECK_FALSE(parse_state_file(R"({"dims": [1], "amplitudes": [[1, 0]]})").label.has_value());
}

TEST_CASE("malformed files name the offending field") {
    CHECK(field_of(R"({"dims": [2, 2], "amplit)") == "json");
    CHECK(field_of("[1, 2]") == "json");
    CHECK(field_of(R"({"amplitudes": []})") == "dims");
    CHECK(field_of(R"({"dims": [2, 0], "amplitudes": []})") == "dims");
    CHECK(field_of(R"({"dims": [2, -1], "amplitudes": []})") == "dims");
    CHECK(field_of(R"({"dims": [2.5], "amplitudes": []})") == "dims");
    CHECK(field_of(R"({"dims": [2]})") == "amplitudes");
    CHECK(field_of(R"({"dims": [2], "amplitudes": [[1, 0]]})") == "amplitudes");
    CHECK(field_of(R"({"dims": [2], "amplitudes": [[1, 0], "0"]})") == "amplitudes");
    CHECK(field_of(R"({"dims": [2], "amplitudes": [[1, 0], [0, 0, 0]]})") == "amplitudes");
    CHECK(field_of(R"({"dims": [2], "amplitudes": [[1, 0], [0, 0]], "label": 3})") == "label");
    CHECK_THROWS_AS(read_state_file("/nonexistent/state.json"), StateFileError);
}

TEST_CASE("written files read back bit-identically") {
    const std::vector<std::vector<std::size_t>> cases{{2}, {2, 3}, {2, 2, 2}, {3, 1, 2}};
    for (const auto& dims : cases) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const StateFile f{random_state(dims, seed), "seed " + std::to_string(seed)};
            const std::string text = format_state_file(f);
            const StateFile back = parse_state_file(text);
            CHECK(back.state == f.state);
            CHECK(back.label == f.label);
            CHECK(format_state_file(back) == text);
        }
    }
    const double tiny = std::numeric_limits<double>::denorm_min();
    const StateFile edge{PureState({2}, {Complex(tiny, -0.0), Complex(1.0 / 3.0, 1e300)}), std::nullopt};
    const StateFile back = parse_state_file(format_state_file(edge));
    CHECK(back.state[0].real() == tiny);
    CHECK(back.state[1] == edge.state[1]);
}
