#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permclass/automaton.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

/// Malformed input; `line()` is 1-indexed (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text form of an automaton:
///
///   alphabet <k>
///   states <m>
///   initial <i>
///   final <i1> <i2> ...
///   direction <forward|reversed>
///   t <src> <label> <dst>        (label 0 is epsilon)
///
/// `#` starts a comment. Serialization lists transitions in sorted order, so
/// serialize(parse(serialize(a))) == serialize(a).
std::string serialize_automaton(const Automaton& a);
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(const std::string& text);

/// One whitespace-separated integer sequence per line; a blank line is the
/// empty sequence. Lines whose first non-blank character is `#` are skipped.
std::vector<std::vector<int>> parse_integer_lines(std::istream& in);

/// Each line must be a permutation of 1..n.
std::vector<Permutation> parse_permutations(std::istream& in);

}  // namespace permclass
