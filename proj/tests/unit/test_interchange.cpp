#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/interchange.hpp"

#include <doctest.h>

using namespace sqry;
using nlohmann::json;

TEST_CASE("document shape") {
    Program p(make_print("hi", make_ask_numeric("n", {{3, make_exit()}}, make_ask("q", {{"a", make_exit()}}))));
    json expected = json::parse(R"({
        "format": "sqry-tree",
        "version": 1,
        "root": {
            "kind": "print", "text": "hi",
            "next": {
                "kind": "ask_numeric", "prompt": "n",
                "thresholds": [{"limit": 3, "node": {"kind": "exit"}}],
                "otherwise": {
                    "kind": "ask", "prompt": "q",
                    "branches": [{"match": "a", "node": {"kind": "exit"}}]
                }
            }
        }
    })");
    CHECK(to_interchange(p) == expected);
    CHECK(from_interchange(expected) == p);
}

TEST_CASE("access point program round trips through text") {
    Program p = sqry::testing::wifi_program();
    CHECK(from_interchange(json::parse(to_interchange(p).dump())) == p);
    CHECK(!to_interchange(p)["root"].contains("otherwise"));
}

TEST_CASE("generated programs round trip") {
    sqry::testing::Rng rng(31);
    for (int i = 0; i < 500; ++i) {
        Program p = sqry::testing::random_program(rng);
        REQUIRE(from_interchange(json::parse(to_interchange(p).dump())) == p);
    }
}

TEST_CASE("extreme limits survive") {
    Program p(make_ask_numeric("n", {{INT64_MAX, make_exit()}, {INT64_MIN, make_exit()}}));
    CHECK(from_interchange(json::parse(to_interchange(p).dump())) == p);
}

TEST_CASE("invalid UTF-8 cannot be exported") {
    CHECK_THROWS_AS(to_interchange(Program(make_print("\xff"))), InterchangeError);
    CHECK_THROWS_AS(to_interchange(Program(make_print("\xc0\x80"))), InterchangeError);
    CHECK_THROWS_AS(to_interchange(Program(make_print("\xed\xa0\x80"))), InterchangeError);
    CHECK_NOTHROW(to_interchange(Program(make_print("é € \xF0\x9F\x98\x80"))));
}

TEST_CASE("schema violations") {
    auto doc = [](json root) { return json{{"format", "sqry-tree"}, {"version", 1}, {"root", root}}; };
    CHECK_THROWS_AS(from_interchange(json::array()), InterchangeError);
    CHECK_THROWS_AS(from_interchange(json{{"format", "other"}, {"version", 1}, {"root", {{"kind", "exit"}}}}),
                    InterchangeError);
    CHECK_THROWS_AS(from_interchange(json{{"format", "sqry-tree"}, {"version", 2}, {"root", {{"kind", "exit"}}}}),
                    InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc({{"kind", "jump"}})), InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc({{"kind", "print"}, {"text", 5}, {"next", {{"kind", "exit"}}}})),
                    InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc({{"kind", "print"}, {"text", "x"}})), InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc({{"kind", "ask"}, {"prompt", "q"}, {"branches", json::array()}})),
                    InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc(json::parse(
                        R"({"kind":"ask_numeric","prompt":"n","thresholds":[{"limit":1.5,"node":{"kind":"exit"}}]})"))),
                    InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc(json::parse(
                        R"({"kind":"ask_numeric","prompt":"n","thresholds":[{"limit":9223372036854775808,"node":{"kind":"exit"}}]})"))),
                    InterchangeError);
    CHECK_THROWS_AS(from_interchange(doc(json::parse(
                        R"({"kind":"ask_numeric","prompt":"n","thresholds":[{"limit":1,"node":{"kind":"exit"}},{"limit":2,"node":{"kind":"exit"}}]})"))),
                    InterchangeError);
    try {
        from_interchange(doc(json::parse(R"({"kind":"ask","prompt":"q","branches":[{"match":"a"}]})")));
        FAIL("no error");
    } catch (const InterchangeError& e) {
        CHECK(std::string(e.what()) == "root.branches[0]: missing field 'node'");
    }
}
