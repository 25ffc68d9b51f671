#pragma once

// Textual decision-tree language.
//
//   input "<prompt>"            string question, followed at the same
//   if "<answer>":              indentation by an if / else if chain
//   else if "<answer>":
//   inputs "<prompt>"           numeric question, followed by
//   ifc > <int>:                ifc / else ifc cascade with strictly
//   else ifc > <int>:           decreasing limits and an optional
//   else:                       fallback
//   print "<text>" [exit]
//   exit
//
// Each branch body is indented deeper than its header. Literals are
// single-line; escapes are \" \\ \n \r \t and \xHH.

#include "sqry/ir.hpp"

#include <string>
#include <string_view>

namespace sqry {

/// Throws ParseError (with a 1-based line number) on malformed input.
Program parse(std::string_view source);

/// Canonical source: 3-space indentation, `print "x" exit` on one line when
/// a print is directly followed by exit.
std::string format(const Program& program);
std::string format(const Node& root);

} // namespace sqry
