#pragma once

#include "mdim/design.hpp"

#include <iosfwd>
#include <string>

namespace mdim {

// Text format, ASCII, 0-based indices, '#' lines are comments:
//
//   SD v k lambda            |  STD g k lambda
//   <v block lines>          |  <k class lines>
//                            |  <lambda*g^2 block lines>
//
// Each class or block line lists its point indices ascending, space separated.

/// Throws ParseError on malformed, truncated, or over-long input.
Design read_design(std::istream& in);
void write_design(std::ostream& out, const Design& d);

Design load_design(const std::string& path);
void save_design(const std::string& path, const Design& d);

/// Reads the next non-comment, non-blank line; false at end of input.
bool next_content_line(std::istream& in, std::string& line);

} // namespace mdim
