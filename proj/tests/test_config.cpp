#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "helpers.hpp"

#include "vahlen/config.hpp"

using namespace vahlen;

namespace {

Configuration cfg_of(const char* text) {
    return configuration_from_json(nlohmann::json::parse(text));
}

} // namespace

TEST_CASE("ring descriptions parse from JSON", "[config]") {
    CHECK(*ring_from_json(nlohmann::json::parse(R"({"kind": "integers"})")) == *th::zz());
    CHECK(*ring_from_json(nlohmann::json::parse(R"({"kind": "integers-mod-n", "n": 6})")) ==
          *th::zn(6));
    CHECK(*ring_from_json(nlohmann::json::parse(R"({"kind": "prime-field-p", "p": 5})")) ==
          *th::gf(5));
    CHECK(*ring_from_json(nlohmann::json::parse(
              R"({"kind": "laurent-over-prime-field-p", "p": 2})")) == *th::laurent(2));

    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({"kind": "rationals"})")),
                    ParseError);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({"kind": "prime-field-p"})")),
                    ParseError);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({})")), ParseError);
    // validation bubbles up from the ring constructors
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({"kind": "prime-field-p", "p": 4})")),
                    UnsupportedError);
}

TEST_CASE("configurations wire rank, form and splitting", "[config]") {
    Configuration plain = cfg_of(
        R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 2, "q_diag": ["1", 2],
            "bilinear": [[0, 1, "1"]]})");
    CHECK(*plain.ring == *th::gf(3));
    CHECK(plain.inner->rank() == 2);
    CHECK(plain.inner->q(0) == th::rel(th::gf(3), 1));
    CHECK(plain.inner->q(1) == th::rel(th::gf(3), 2));
    CHECK(plain.inner->bilinear(0, 1) == th::rel(th::gf(3), 1));
    CHECK_FALSE(plain.split.has_value());
    CHECK(plain.ambient == plain.inner);

    Configuration split = cfg_of(
        R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 1, "q_diag": ["1"],
            "splitting": {"kind": "ordinary"}})");
    REQUIRE(split.split.has_value());
    CHECK(*split.split == SplitKind::Ordinary);
    CHECK(split.ambient->rank() == 3);
    CHECK(split.summary == "GF(3), rank 1, q = [1], ordinary split");

    Configuration para = cfg_of(
        R"({"ring": {"kind": "prime-field-p", "p": 2}, "rank": 1, "q_diag": [1],
            "splitting": {"kind": "paravector"}})");
    REQUIRE(para.split.has_value());
    CHECK(*para.split == SplitKind::Paravector);
    CHECK(para.ambient->rank() == 4);
    CHECK(para.summary == "GF(2), rank 1, q = [1], paravector split");

    // Laurent literals in q_diag
    Configuration lau = cfg_of(
        R"({"ring": {"kind": "laurent-over-prime-field-p", "p": 2}, "rank": 2,
            "q_diag": ["t", "1"]})");
    CHECK(lau.inner->q(0) == RingElement::laurent_term(th::laurent(2), Int(1), 1));
    CHECK(lau.summary == "GF(2)[t,t^-1], rank 2, q = [1*t^1, 1]");
}

TEST_CASE("malformed configurations fail with config-prefixed errors", "[config]") {
    auto fails_with = [](const char* text, const std::string& needle) {
        try {
            cfg_of(text);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            std::string msg = e.what();
            INFO("message: " << msg);
            CHECK(msg.find(needle) != std::string::npos);
        }
    };
    fails_with(R"([1, 2])", "expected a JSON object");
    fails_with(R"({"ring": {"kind": "prime-field-p", "p": 3}})", "rank");
    fails_with(R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 2, "q_diag": ["1"]})",
               "q_diag");
    fails_with(
        R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 1, "q_diag": ["x"]})",
        "q_diag[0]");
    fails_with(
        R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 2, "q_diag": [1, 1],
            "bilinear": [[0, 5, "1"]]})",
        "bilinear[0]");
    fails_with(
        R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 2, "q_diag": [1, 1],
            "bilinear": [[0, 0, "1"]]})",
        "bilinear[0]");
    fails_with(
        R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 1, "q_diag": [1],
            "splitting": {"kind": "diagonal"}})",
        "splitting");
}

TEST_CASE("configurations load from files", "[config]") {
    std::string path = "test_config_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 1, "q_diag": ["2"],
                   "splitting": {"kind": "ordinary"}})";
    }
    Configuration cfg = load_configuration(path);
    CHECK(cfg.summary == "GF(3), rank 1, q = [2], ordinary split");
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_configuration("does_not_exist.json"), ParseError);

    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_configuration(path), ParseError);
    std::remove(path.c_str());
}
