#include "permclass/io.hpp"

#include <limits>
#include <optional>
#include <sstream>

namespace permclass {

std::string serialize_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "alphabet " << a.alphabet() << '\n';
  out << "states " << a.state_count() << '\n';
  out << "initial " << a.initial() << '\n';
  out << "final";
  for (int f : a.finals()) out << ' ' << f;
  out << '\n';
  out << "direction " << (a.direction() == Direction::forward ? "forward" : "reversed") << '\n';
  for (const Transition& t : a.transitions()) {
    out << "t " << t.source << ' ' << t.label << ' ' << t.target << '\n';
  }
  return out.str();
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

long read_int(std::istringstream& fields, std::size_t line_no, const std::string& what) {
  std::string token;
  if (!(fields >> token)) throw ParseError(line_no, "missing " + what);
  try {
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::logic_error&) {
    throw ParseError(line_no, "expected an integer for " + what + ", got \"" + token + "\"");
  }
}

void expect_end(std::istringstream& fields, std::size_t line_no) {
  std::string extra;
  if (fields >> extra) throw ParseError(line_no, "unexpected token \"" + extra + "\"");
}

}  // namespace

Automaton parse_automaton(std::istream& in) {
  std::optional<long> alphabet, states, initial;
  std::optional<Direction> direction;
  std::optional<std::vector<long>> finals;
  std::vector<std::pair<std::size_t, Transition>> transitions;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(strip_comment(raw));
    std::string key;
    if (!(fields >> key)) continue;
    const auto once = [&](bool seen) {
      if (seen) throw ParseError(line_no, "duplicate \"" + key + "\" line");
    };
    if (key == "alphabet") {
      once(alphabet.has_value());
      alphabet = read_int(fields, line_no, "alphabet size");
      if (*alphabet < 0) throw ParseError(line_no, "alphabet size must be non-negative");
      expect_end(fields, line_no);
    } else if (key == "states") {
      once(states.has_value());
      states = read_int(fields, line_no, "state count");
      if (*states < 1) throw ParseError(line_no, "an automaton needs at least one state");
      expect_end(fields, line_no);
    } else if (key == "initial") {
      once(initial.has_value());
      initial = read_int(fields, line_no, "initial state");
      expect_end(fields, line_no);
    } else if (key == "final") {
      once(finals.has_value());
      finals.emplace();
      std::string token;
      while (fields >> token) {
        std::istringstream one(token);
        finals->push_back(read_int(one, line_no, "final state"));
      }
    } else if (key == "direction") {
      once(direction.has_value());
      std::string value;
      if (!(fields >> value)) throw ParseError(line_no, "missing direction");
      if (value == "forward") {
        direction = Direction::forward;
      } else if (value == "reversed") {
        direction = Direction::reversed;
      } else {
        throw ParseError(line_no, "direction must be forward or reversed, got \"" + value + "\"");
      }
      expect_end(fields, line_no);
    } else if (key == "t") {
      Transition t;
      t.source = static_cast<int>(read_int(fields, line_no, "source state"));
      t.label = static_cast<int>(read_int(fields, line_no, "label"));
      t.target = static_cast<int>(read_int(fields, line_no, "target state"));
      expect_end(fields, line_no);
      transitions.emplace_back(line_no, t);
    } else {
      throw ParseError(line_no, "unknown directive \"" + key + "\"");
    }
  }

  if (!alphabet) throw ParseError(0, "missing \"alphabet\" line");
  if (!states) throw ParseError(0, "missing \"states\" line");
  if (!initial) throw ParseError(0, "missing \"initial\" line");
  if (!finals) throw ParseError(0, "missing \"final\" line");
  if (!direction) throw ParseError(0, "missing \"direction\" line");

  Automaton a(static_cast<int>(*alphabet), *direction);
  for (long s = 0; s < *states; ++s) a.add_state(false);
  if (*initial < 0 || *initial >= *states) throw ParseError(0, "initial state out of range");
  a.set_initial(static_cast<int>(*initial));
  for (long f : *finals) {
    if (f < 0 || f >= *states) throw ParseError(0, "final state " + std::to_string(f) + " out of range");
    a.set_final(static_cast<int>(f));
  }
  for (const auto& [where, t] : transitions) {
    if (t.source < 0 || t.source >= *states || t.target < 0 || t.target >= *states) {
      throw ParseError(where, "transition references a missing state");
    }
    if (t.label < 0 || t.label > *alphabet) {
      throw ParseError(where, "label " + std::to_string(t.label) + " outside alphabet");
    }
    a.add_transition(t.source, t.label, t.target);
  }
  return a;
}

Automaton parse_automaton(const std::string& text) {
  std::istringstream in(text);
  return parse_automaton(in);
}

namespace {

// nullopt for a comment line.
std::optional<std::vector<int>> parse_row(const std::string& raw, std::size_t line_no) {
  const auto first = raw.find_first_not_of(" \t\r");
  if (first != std::string::npos && raw[first] == '#') return std::nullopt;
  std::istringstream fields(raw);
  std::vector<int> row;
  std::string token;
  while (fields >> token) {
    std::istringstream one(token);
    const long v = read_int(one, line_no, "entry");
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw ParseError(line_no, "integer out of range");
    }
    row.push_back(static_cast<int>(v));
  }
  return row;
}

}  // namespace

std::vector<std::vector<int>> parse_integer_lines(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    if (auto row = parse_row(raw, ++line_no)) rows.push_back(std::move(*row));
  }
  return rows;
}

std::vector<Permutation> parse_permutations(std::istream& in) {
  std::vector<Permutation> perms;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    auto row = parse_row(raw, ++line_no);
    if (!row) continue;
    try {
      perms.emplace_back(std::move(*row));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return perms;
}

}  // namespace permclass
