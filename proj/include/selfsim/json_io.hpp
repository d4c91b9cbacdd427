#ifndef SELFSIM_JSON_IO_HPP
#define SELFSIM_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "selfsim/digit.hpp"
#include "selfsim/ifs.hpp"
#include "selfsim/interval_set.hpp"

namespace selfsim {

using Json = nlohmann::json;

/// A parsed system definition: always the similarity system, plus the digit
/// shorthand when that is how it was given.
struct SystemInput {
    IFS ifs;
    std::optional<DigitSystem> digits;
};

/// Accepts {"maps": [{"ratio": "1/3", "sign": 1, "translation": "0"}, ...]}
/// or {"digits": {"A": 4, "d": [0, 1, 6]}}. Rationals are strings "p/q";
/// plain integers are also accepted. Throws std::invalid_argument with the
/// offending field named.
SystemInput parse_system(const Json& j);
SystemInput parse_system_text(const std::string& text);

/// Canonical re-emission; re-parses to an identical system.
Json system_json(const SystemInput& in);

Json rational_json(const Rational& q);          // "p/q"
Json enclosure_json(const Enclosure& e);        // {"lower": dec, "upper": dec}
Json interval_json(const Interval& iv);         // {"lo","hi","lo_closed","hi_closed"}
Json interval_set_json(const IntervalSet& s);   // array of intervals
Json word_json(const Word& w);

/// Result envelope: {"schema": "v1", "command": ..., ...body}.
Json make_result(const std::string& command, Json body);

}  // namespace selfsim

#endif
