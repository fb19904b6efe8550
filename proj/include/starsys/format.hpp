#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starsys/core.hpp"

namespace starsys {

/// Malformed ".star"/".cstar" input; what() carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// ".star":  first line "n e", then one block per line "root: p1 ... pe".
// ".cstar": same header, block lines "label | root: p1 ... pe".
// '#' starts a comment line, blank lines are ignored.  Several systems may be
// concatenated, separated by a line holding "---".

star_system parse_star(std::string_view text);
coloured_star_system parse_cstar(std::string_view text);

/// True when the first block line carries a "label |" prefix.
bool looks_coloured(std::string_view text);

std::vector<star_system> parse_star_stream(std::string_view text);

std::string to_star(const star_system& sys);
/// Blocks are written grouped by class, classes in order.  parse_cstar of
/// the result yields the same classes; block indices follow that grouping.
std::string to_cstar(const coloured_star_system& c);

void write_star_stream(std::ostream& os, const std::vector<star_system>& systems);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace starsys
