#include "selfsim/json_io.hpp"

#include <stdexcept>

namespace selfsim {
namespace {

Rational field_rational(const Json& j, const std::string& field) {
    const Json& v = j.at(field);
    try {
        if (v.is_string()) {
            return parse_rational(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Rational(static_cast<long>(v.get<long long>()));
        }
    } catch (const std::exception&) {
        // fall through to the uniform error below
    }
    throw std::invalid_argument("field '" + field +
                                "': expected a rational string \"p/q\" or an integer");
}

}  // namespace

SystemInput parse_system(const Json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("system definition must be a JSON object");
    }
    const bool has_maps = j.contains("maps");
    const bool has_digits = j.contains("digits");
    if (has_maps == has_digits) {
        throw std::invalid_argument(
            "system definition needs exactly one of 'maps' or 'digits'");
    }
    if (has_digits) {
        const Json& d = j.at("digits");
        DigitSystem sys;
        sys.base = field_rational(d, "A");
        if (!d.contains("d") || !d.at("d").is_array() || d.at("d").empty()) {
            throw std::invalid_argument("field 'd': expected a nonempty array");
        }
        for (std::size_t k = 0; k < d.at("d").size(); ++k) {
            const Json& entry = d.at("d").at(k);
            if (entry.is_string()) {
                sys.digits.push_back(parse_rational(entry.get<std::string>()));
            } else if (entry.is_number_integer()) {
                sys.digits.push_back(Rational(static_cast<long>(entry.get<long long>())));
            } else {
                throw std::invalid_argument("field 'd': entries must be integers or "
                                            "rational strings");
            }
        }
        IFS ifs = to_ifs(sys);
        return SystemInput{std::move(ifs), std::move(sys)};
    }
    const Json& maps = j.at("maps");
    if (!maps.is_array() || maps.size() < 2) {
        throw std::invalid_argument("field 'maps': expected an array of at least 2 maps");
    }
    std::vector<Similarity> sims;
    for (const Json& m : maps) {
        Similarity s;
        s.ratio = field_rational(m, "ratio");
        if (!(s.ratio > 0) || !(s.ratio < 1)) {
            throw std::invalid_argument("field 'ratio': must lie strictly between 0 "
                                        "and 1, got " + to_string(s.ratio));
        }
        s.translation = field_rational(m, "translation");
        s.sign = 1;
        if (m.contains("sign")) {
            const Json& sg = m.at("sign");
            if (!sg.is_number_integer() ||
                (sg.get<int>() != 1 && sg.get<int>() != -1)) {
                throw std::invalid_argument("field 'sign': must be 1 or -1");
            }
            s.sign = sg.get<int>();
        }
        sims.push_back(std::move(s));
    }
    return SystemInput{IFS::create(std::move(sims)), std::nullopt};
}

SystemInput parse_system_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw std::invalid_argument("input is not valid JSON");
    }
    return parse_system(j);
}

Json system_json(const SystemInput& in) {
    Json out;
    Json maps = Json::array();
    for (const Similarity& s : in.ifs.maps()) {
        maps.push_back(Json{{"ratio", to_string(s.ratio)},
                            {"sign", s.sign},
                            {"translation", to_string(s.translation)}});
    }
    out["maps"] = std::move(maps);
    if (in.digits) {
        Json d = Json::array();
        for (const Rational& q : in.digits->digits) {
            d.push_back(to_string(q));
        }
        out["digits"] = Json{{"A", to_string(in.digits->base)}, {"d", std::move(d)}};
    }
    return out;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json enclosure_json(const Enclosure& e) {
    return Json{{"lower", e.lower_string()}, {"upper", e.upper_string()}};
}

Json interval_json(const Interval& iv) {
    return Json{{"lo", to_string(iv.lo)},
                {"hi", to_string(iv.hi)},
                {"lo_closed", iv.lo_closed},
                {"hi_closed", iv.hi_closed}};
}

Json interval_set_json(const IntervalSet& s) {
    Json out = Json::array();
    for (const Interval& iv : s.parts()) {
        out.push_back(interval_json(iv));
    }
    return out;
}

Json word_json(const Word& w) {
    Json out = Json::array();
    for (int letter : w) {
        out.push_back(letter);
    }
    return out;
}

Json make_result(const std::string& command, Json body) {
    Json out;
    out["schema"] = "v1";
    out["command"] = command;
    out.update(body);
    return out;
}

}  // namespace selfsim
