#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/error.hpp"
#include "sqry/frontend.hpp"

#include <doctest.h>

using namespace sqry;

namespace {

int error_line(std::string_view source) {
    try {
        parse(source);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string error_message(std::string_view source) {
    try {
        parse(source);
    } catch (const ParseError& e) {
        return e.message();
    }
    return {};
}

} // namespace

TEST_CASE("access point program") {
    Program p = sqry::testing::wifi_program();
    CHECK(p.strings().size() == 56);
    std::size_t chars = 0;
    for (const auto& s : p.strings())
        chars += s.size();
    CHECK(chars == 860);
    CHECK(p.strings().front() == "Operation?");
    CHECK(p.strings().back() == "802.11g");
    const auto& root = std::get<Ask>(p.root().value);
    CHECK(root.branches.size() == 3);
}

TEST_CASE("small programs") {
    CHECK(parse("exit\n").root() == make_exit());
    CHECK(parse("print \"a\" exit").root() == make_print("a"));
    CHECK(parse("print \"a\"\nprint \"b\"\nexit\n").root() == make_print("a", make_print("b")));
    CHECK(parse("input \"q\"\nif \"x\":\n  exit\nelse if \"y\":\n    print \"z\" exit\n").root() ==
          make_ask("q", {{"x", make_exit()}, {"y", make_print("z")}}));
    CHECK(parse("inputs \"n\"\nifc > 10:\n exit\nelse ifc > -3:\n exit\nelse:\n print \"low\" exit\n").root() ==
          make_ask_numeric("n", {{10, make_exit()}, {-3, make_exit()}}, make_print("low")));
}

TEST_CASE("blank lines, CRLF and indented root") {
    CHECK(parse("\r\n   \n  print \"a\" exit\r\n\n").root() == make_print("a"));
}

TEST_CASE("escapes") {
    CHECK(parse(R"(print "q\"b\\n\n\r\t\x7f\x01" exit)").root() == make_print("q\"b\\n\n\r\t\x7f\x01"));
    CHECK(parse("print \"caf\xc3\xa9\" exit").root() == make_print("café"));
    CHECK(error_message(R"(print "\q" exit)").find("unknown escape") != std::string::npos);
    CHECK(error_message(R"(print "\x4" exit)").find("two hex digits") != std::string::npos);
    CHECK(error_message(R"(print "\x00" exit)").find("NUL or ETX") != std::string::npos);
    CHECK(error_message(R"(print "\x03" exit)").find("NUL or ETX") != std::string::npos);
}

TEST_CASE("integer range") {
    CHECK(parse("inputs \"n\"\nifc > 9223372036854775807:\n exit\nelse ifc > -9223372036854775808:\n exit\n")
              .root() == make_ask_numeric("n", {{INT64_MAX, make_exit()}, {INT64_MIN, make_exit()}}));
    CHECK(error_message("inputs \"n\"\nifc > 9223372036854775808:\n exit\n") == "integer literal out of range");
}

TEST_CASE("errors carry line numbers") {
    CHECK(error_line("") == 1);
    CHECK(error_message("") == "empty program");
    CHECK(error_message("\n  \n") == "empty program");
    CHECK(error_line("exit\nexit\n") == 2);
    CHECK(error_message("exit\nexit\n") == "unreachable statement");
    CHECK(error_line("print \"a\n") == 1);
    CHECK(error_message("print \"a\n").find("cannot span lines") != std::string::npos);
    CHECK(error_line("print \"a\"\n") == 1);
    CHECK(error_message("print \"a\"\n") == "missing 'exit' after print");
    CHECK(error_message("goto \"x\"") == "unknown keyword 'goto'");
    CHECK(error_line("input \"q\"\nif \"a\":\n\texit\n") == 3);
    CHECK(error_line("input \"q\"\nif \"a\":\n    exit\n  else if \"b\":\n    exit\n") == 4);
    CHECK(error_message("if \"a\":\n exit\n") == "'if' without preceding input");
    CHECK(error_message("else:\n exit\n") == "'else' without preceding 'if'");
    CHECK(error_message("input \"q\"\nif \"a\":\n exit\nelse:\n exit\n") == "'else:' is only allowed after inputs");
    CHECK(error_message("input \"q\"\nexit\n") == "expected 'if' after input");
    CHECK(error_message("inputs \"q\"\nif \"a\":\n exit\n") == "expected 'ifc' after inputs");
    CHECK(error_message("input \"q\"\nif \"a\":\nexit\n") == "expected an indented block");
    CHECK(error_line("inputs \"n\"\nifc > 5:\n exit\nelse ifc > 5:\n exit\n") == 4);
    CHECK(error_message("inputs \"n\"\nifc > 5:\n exit\nelse ifc > 6:\n exit\n") ==
          "ifc thresholds must be strictly decreasing");
    CHECK(error_message("input \"q\"\nif \"a\":\n exit\nelse if \"a\":\n exit\n") == "duplicate answer \"a\"");
    CHECK(error_message("input \"q\"\nif \"a\":\n exit\n exit\n") == "unreachable statement");
    CHECK(error_message("print \"a\" exit exit") == "unexpected 'exit'");
    CHECK(error_message("inputs \"n\"\nifc 5:\n exit\n") == "expected '>' after 'ifc'");
}

TEST_CASE("parse error text") {
    try {
        parse("exit\n\nexit\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 3: unreachable statement");
    }
}

TEST_CASE("format is canonical") {
    std::string src = "input \"Q\"\n"
                      "if \"a\":\n"
                      "   print \"x\"\n"
                      "   inputs \"n\"\n"
                      "   ifc > 1:\n"
                      "      print \"big\" exit\n"
                      "   else:\n"
                      "      exit\n"
                      "else if \"b\\n\":\n"
                      "   print \"tab\\there\" exit\n";
    CHECK(format(parse(src)) == src);
    CHECK(format(parse("print \"a\"\nexit")) == "print \"a\" exit\n");
}

TEST_CASE("format of the access point program parses back") {
    Program p = sqry::testing::wifi_program();
    std::string text = format(p);
    CHECK(parse(text) == p);
    CHECK(format(parse(text)) == text);
}

TEST_CASE("parse(format(p)) == p for generated programs") {
    sqry::testing::Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        Program p = sqry::testing::random_program(rng);
        std::string text = format(p);
        INFO(text);
        REQUIRE(parse(text) == p);
    }
}
