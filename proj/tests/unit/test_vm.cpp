#include "fixtures.hpp"

#include "sqry/vm.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace sqry;
using namespace sqry::vm;

namespace {

Session play(const Session& start, const nlohmann::json& answers) {
    Session s = start;
    for (const auto& a : answers) {
        if (a.is_number_integer())
            s = s.answer_number(a.get<std::int64_t>());
        else
            s = s.answer_choice(a.get<std::string>());
    }
    return s;
}

std::string numeric_route(const Session& start, std::int64_t value) {
    Session s = start.answer_choice("Generic information").answer_choice("Standard").answer_number(value);
    REQUIRE(std::holds_alternative<Finished>(s.state()));
    REQUIRE(s.output_log().size() == 1);
    return s.output_log()[0];
}

} // namespace

TEST_CASE("every leaf path of the access point program") {
    Session start = Session::start(sqry::testing::wifi_program());
    auto golden =
        nlohmann::json::parse(sqry::testing::read_file(sqry::testing::source_dir() / "tests/golden/wifi_paths.json"));
    REQUIRE(golden["paths"].size() == 22);
    for (const auto& path : golden["paths"]) {
        INFO(path.dump());
        Session end = play(start, path["answers"]);
        CHECK(std::holds_alternative<Finished>(end.state()));
        CHECK(end.output_log() == path["output"].get<std::vector<std::string>>());
    }
}

TEST_CASE("first prompt") {
    Session s = Session::start(sqry::testing::wifi_program());
    const auto& w = std::get<AwaitingChoice>(s.state());
    CHECK(w.prompt == "Operation?");
    CHECK(w.options == std::vector<std::string>{"Check status", "Configuration", "Generic information"});
    CHECK(s.output_log().empty());
    CHECK_FALSE(s.done());
}

TEST_CASE("numeric boundaries use strict greater-than") {
    Session start = Session::start(sqry::testing::wifi_program());
    CHECK(numeric_route(start, 9601) == "802.11be (Wi-Fi 7)");
    CHECK(numeric_route(start, 9600) == "802.11ax (Wi-Fi 6)");
    CHECK(numeric_route(start, 3501) == "802.11ax (Wi-Fi 6)");
    CHECK(numeric_route(start, 3500) == "802.11ac (Wi-Fi 5)");
    CHECK(numeric_route(start, 601) == "802.11ac (Wi-Fi 5)");
    CHECK(numeric_route(start, 600) == "802.11n (Wi-Fi 4)");
    CHECK(numeric_route(start, 55) == "802.11n (Wi-Fi 4)");
    CHECK(numeric_route(start, 54) == "802.11g");
    CHECK(numeric_route(start, INT64_MIN) == "802.11g");
    CHECK(numeric_route(start, INT64_MAX) == "802.11be (Wi-Fi 7)");
}

TEST_CASE("answers are trimmed") {
    Session s = Session::start(sqry::testing::wifi_program()).answer_choice("  Configuration\t");
    CHECK(std::get<AwaitingChoice>(s.state()).prompt == "What do you need?");
    Program spaced(make_ask("Q", {{" yes ", make_print("Y")}}));
    CHECK(Session::start(spaced).answer_choice("yes").output_log() == std::vector<std::string>{"Y"});
}

TEST_CASE("unmatched answer fails the session") {
    Session s = Session::start(sqry::testing::wifi_program()).answer_choice("configuration");
    REQUIRE(std::holds_alternative<Failed>(s.state()));
    CHECK(std::get<Failed>(s.state()).reason == kUnmatchedAnswer);
    CHECK(s.done());
}

TEST_CASE("numeric question without fallback") {
    Program p(make_ask_numeric("n", {{10, make_print("big")}}));
    Session s = Session::start(p);
    CHECK(s.answer_number(11).output_log() == std::vector<std::string>{"big"});
    Session low = s.answer_number(10);
    REQUIRE(std::holds_alternative<Failed>(low.state()));
    CHECK(std::get<Failed>(low.state()).reason == kNoMatchingBranch);
}

TEST_CASE("wrong kind of answer is a logic error") {
    Session s = Session::start(sqry::testing::wifi_program());
    CHECK_THROWS_AS(s.answer_number(1), std::logic_error);
    Session n = s.answer_choice("Generic information").answer_choice("Standard");
    CHECK_THROWS_AS(n.answer_choice("1"), std::logic_error);
    Session done = n.answer_number(1);
    CHECK_THROWS_AS(done.answer_number(1), std::logic_error);
    CHECK_THROWS_AS(done.answer_choice("x"), std::logic_error);
}

TEST_CASE("leading prints and chained prints") {
    Program p(make_print("a", make_print("b", make_ask("q", {{"x", make_print("c")}}))));
    Session s = Session::start(p);
    CHECK(s.output_log() == std::vector<std::string>{"a", "b"});
    CHECK(s.answer_choice("x").output_log() == std::vector<std::string>{"a", "b", "c"});
    CHECK(Session::start(Program(make_exit())).done());
}

TEST_CASE("sessions are values") {
    Session a = Session::start(sqry::testing::wifi_program());
    Session b = a.answer_choice("Configuration");
    Session c = b.answer_choice("IP");
    CHECK(std::holds_alternative<AwaitingChoice>(a.state()));
    CHECK(std::get<AwaitingChoice>(b.state()).prompt == "What do you need?");
    CHECK(c.output_log() == std::vector<std::string>{"192.168.4.2"});
    // back navigation: answer differently from an earlier snapshot
    Session d = b.answer_choice("Network access SSID / Password");
    CHECK(d.output_log() == std::vector<std::string>{"SSID: my_net", "Password: 123456"});
}
