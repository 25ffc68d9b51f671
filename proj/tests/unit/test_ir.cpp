#include "sqry/error.hpp"
#include "sqry/ir.hpp"

#include <doctest.h>

using namespace sqry;

TEST_CASE("builders and equality") {
    Node a = make_ask("q", {{"x", make_print("p")}, {"y", make_exit()}});
    Node b = make_ask("q", {{"x", make_print("p")}, {"y", make_exit()}});
    Node c = make_ask("q", {{"x", make_print("P")}, {"y", make_exit()}});
    CHECK(a == b);
    CHECK_FALSE(a == c);
    Node copy = a;
    CHECK(copy == a);
    std::get<Ask>(copy.value).prompt = "changed";
    CHECK(std::get<Ask>(a.value).prompt == "q");
}

TEST_CASE("string inventory is pre-order") {
    Node root = make_print("hello",
                           make_ask("q1", {{"a", make_ask_numeric("n", {{5, make_print("five")}}, make_print("else"))},
                                           {"b", make_exit()}}));
    Program p(root);
    std::vector<std::string> expected = {"hello", "q1", "a", "n", "five", "else", "b"};
    CHECK(p.strings() == expected);
    CHECK(collect_strings(make_exit()).empty());
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Program(make_ask("q", {})), InvalidProgram);
    CHECK_THROWS_AS(Program(make_ask("q", {{"a", make_exit()}, {"a", make_exit()}})), InvalidProgram);
    CHECK_THROWS_AS(Program(make_ask_numeric("n", {})), InvalidProgram);
    CHECK_THROWS_AS(Program(make_ask_numeric("n", {{1, make_exit()}, {1, make_exit()}})), InvalidProgram);
    CHECK_THROWS_AS(Program(make_ask_numeric("n", {{1, make_exit()}, {2, make_exit()}})), InvalidProgram);
    CHECK_THROWS_AS(Program(make_print(std::string("a\0", 2))), InvalidProgram);
    CHECK_THROWS_AS(Program(make_print("ok", make_ask("q\x03", {{"a", make_exit()}}))), InvalidProgram);
    CHECK_NOTHROW(Program(make_ask_numeric("n", {{2, make_exit()}, {-2, make_exit()}}, make_exit())));
    CHECK_NOTHROW(Program(make_print("")));
}

TEST_CASE("forbidden characters") {
    CHECK(has_forbidden_char(std::string("\0", 1)));
    CHECK(has_forbidden_char("\x03"));
    CHECK_FALSE(has_forbidden_char("\x01\x02\x04\n"));
}
