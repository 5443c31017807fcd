#pragma once

// JSON space configurations:
// {
//   "ring": { "kind": "prime-field-p", "p": 3 },
//   "rank": 1,
//   "q_diag": ["1"],
//   "bilinear": [[0, 1, "1"], ...],      optional, 0-based indices
//   "splitting": { "kind": "ordinary" }  optional: "ordinary"|"paravector"
// }
// Ring kinds: "integers", "integers-mod-n" (with "n"), "prime-field-p"
// (with "p"), "laurent-over-prime-field-p" (with "p").

#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

#include "vahlen/qspace.hpp"

namespace vahlen {

struct Configuration {
    Ring ring;
    SpacePtr inner;                   // the space described by the file
    std::optional<SplitKind> split;   // requested splitting, if any
    SpacePtr ambient;                 // split extension of inner; == inner without one
    std::string summary;              // one line for reports
};

namespace detail {

[[noreturn]] inline void config_fail(const std::string& what) {
    throw ParseError(0, "config: " + what);
}

inline RingElement literal_in(const Ring& R, const nlohmann::json& j, const std::string& where) {
    try {
        if (j.is_number_integer())
            return RingElement::from_integer(R, Int(j.get<long long>()));
        if (j.is_string())
            return RingElement::parse(R, j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.position(), where + ": " + e.what());
    }
    config_fail(where + ": expected a ring literal (string or integer)");
}

} // namespace detail

inline Ring ring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        detail::config_fail("ring: expected an object with a \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    auto param = [&](const char* name) -> Int {
        if (!j.contains(name) || !j[name].is_number_integer())
            detail::config_fail("ring: \"" + kind + "\" requires integer \"" + name + "\"");
        return Int(j[name].get<long long>());
    };
    if (kind == "integers")
        return RingDescriptor::integers();
    if (kind == "integers-mod-n")
        return RingDescriptor::integers_mod(param("n"));
    if (kind == "prime-field-p")
        return RingDescriptor::prime_field(param("p"));
    if (kind == "laurent-over-prime-field-p")
        return RingDescriptor::laurent_over_prime_field(param("p"));
    detail::config_fail("ring: unknown kind \"" + kind + "\"");
}

inline Configuration configuration_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        detail::config_fail("expected a JSON object");
    Configuration cfg;
    cfg.ring = ring_from_json(j.contains("ring") ? j["ring"] : nlohmann::json());

    if (!j.contains("rank") || !j["rank"].is_number_unsigned())
        detail::config_fail("\"rank\" must be a non-negative integer");
    std::size_t rank = j["rank"].get<std::size_t>();

    std::vector<RingElement> q_diag;
    if (!j.contains("q_diag") || !j["q_diag"].is_array() || j["q_diag"].size() != rank)
        detail::config_fail("\"q_diag\" must be an array of length rank");
    for (std::size_t i = 0; i < rank; ++i)
        q_diag.push_back(
            detail::literal_in(cfg.ring, j["q_diag"][i], "q_diag[" + std::to_string(i) + "]"));

    std::vector<std::tuple<std::size_t, std::size_t, RingElement>> offdiag;
    if (j.contains("bilinear")) {
        if (!j["bilinear"].is_array())
            detail::config_fail("\"bilinear\" must be an array of [i, j, value] triples");
        for (std::size_t k = 0; k < j["bilinear"].size(); ++k) {
            const auto& entry = j["bilinear"][k];
            std::string where = "bilinear[" + std::to_string(k) + "]";
            if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
                !entry[1].is_number_unsigned())
                detail::config_fail(where + ": expected [i, j, value] with 0-based indices");
            std::size_t a = entry[0].get<std::size_t>(), b = entry[1].get<std::size_t>();
            if (a >= rank || b >= rank || a == b)
                detail::config_fail(where + ": indices out of range");
            offdiag.emplace_back(a, b, detail::literal_in(cfg.ring, entry[2], where));
        }
    }

    cfg.inner = QuadraticSpace::create(cfg.ring, std::move(q_diag), offdiag);

    if (j.contains("splitting")) {
        const auto& s = j["splitting"];
        if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
            detail::config_fail("\"splitting\" must be an object with a \"kind\"");
        std::string kind = s["kind"].get<std::string>();
        if (kind == "ordinary")
            cfg.split = SplitKind::Ordinary;
        else if (kind == "paravector")
            cfg.split = SplitKind::Paravector;
        else
            detail::config_fail("splitting: unknown kind \"" + kind + "\"");
        cfg.ambient = build_split_space(*cfg.split, cfg.inner);
    } else {
        cfg.ambient = cfg.inner;
    }

    std::string qs;
    for (std::size_t i = 0; i < cfg.inner->rank(); ++i)
        qs += (i ? ", " : "") + cfg.inner->q(i).to_string();
    cfg.summary = cfg.ring->name() + ", rank " + std::to_string(cfg.inner->rank()) + ", q = [" +
                  qs + "]";
    if (cfg.split)
        cfg.summary += *cfg.split == SplitKind::Ordinary ? ", ordinary split" : ", paravector split";
    return cfg;
}

inline Configuration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        detail::config_fail("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::size_t(e.byte), std::string("config: ") + e.what());
    }
    return configuration_from_json(j);
}

} // namespace vahlen
