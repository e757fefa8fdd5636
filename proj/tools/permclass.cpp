// permclass: command-line front end for rank-encoded permutation classes.
//
// Every command reads plain text and writes plain text. Boolean answers are
// also reported through the exit status: 0 = true, 1 = false, 2 = error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permclass/automaton.hpp"
#include "permclass/bounded_class.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/io.hpp"
#include "permclass/machines.hpp"
#include "permclass/monotone.hpp"
#include "permclass/permutation.hpp"

namespace {

using namespace permclass;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open " + path);
  }
  std::istream& stream() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

 private:
  std::ifstream file_;
};

Automaton read_automaton(const std::string& path) {
  Input in(path);
  try {
    return parse_automaton(in.stream());
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<Permutation> read_permutations(const std::string& path) {
  Input in(path);
  try {
    return parse_permutations(in.stream());
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

BoundedClass read_class(const std::string& path) {
  const Automaton a = read_automaton(path);
  return BoundedClass::from_language(a, std::max(a.alphabet(), 1));
}

void print_list(const std::vector<mpz_class>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
  std::cout << '\n';
}

void print_gf(const RationalGF& gf) {
  std::cout << gf.numerator.to_string() << '\n' << gf.denominator.to_string() << '\n';
}

int print_bool(bool value) {
  std::cout << (value ? "true" : "false") << '\n';
  return value ? kExitTrue : kExitFalse;
}

// Applies `fn` to each stdin line parsed as an integer sequence; errors name
// the line.
template <typename Fn>
void for_each_input_line(Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(std::cin, raw)) {
    ++line_no;
    std::istringstream one(raw);
    const auto rows = parse_integer_lines(one);
    if (rows.empty() && !raw.empty()) continue;  // comment
    try {
      fn(rows.empty() ? std::vector<int>{} : rows.front());
    } catch (const std::exception& e) {
      throw std::runtime_error("stdin line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

MembershipPredicate oracle_from_name(const std::string& name) {
  if (name == "riffle") return [](const Permutation& p) { return riffle_member(p); };
  if (name == "stack") return [](const Permutation& p) { return generates(StackMachine{}, p); };
  if (name == "stack2") return [](const Permutation& p) { return generates(StackMachine{2}, p); };
  if (name.rfind("avoid:", 0) == 0) {
    auto basis = read_permutations(name.substr(6));
    return [basis = std::move(basis)](const Permutation& p) {
      for (const Permutation& b : basis) {
        if (involves(b, p)) return false;
      }
      return true;
    };
  }
  throw std::runtime_error("unknown oracle \"" + name + "\" (riffle, stack, stack2, avoid:FILE)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation classes as regular languages of rank encodings"};
  app.require_subcommand(1);

  int result = kExitTrue;

  auto* encode = app.add_subcommand("encode", "Rank-encode permutations read from stdin");
  encode->callback([] {
    for_each_input_line([](const std::vector<int>& row) {
      std::cout << to_string(rank_encode(Permutation(row))) << '\n';
    });
  });

  auto* decode = app.add_subcommand("decode", "Decode rank encodings read from stdin");
  decode->callback([] {
    for_each_input_line([](const std::vector<int>& row) { std::cout << to_string(rank_decode(row)) << '\n'; });
  });

  int omega_k = 0;
  auto* omega = app.add_subcommand("omega", "Acceptor of E(Omega_k)");
  omega->add_option("--k", omega_k, "Letter bound")->required()->check(CLI::PositiveNumber);
  omega->callback([&] { std::cout << serialize_automaton(omega_acceptor(omega_k)); });

  int closure_k = 0;
  std::string closure_basis;
  std::string closure_basis_lang;
  auto* closure = app.add_subcommand("closure", "Class acceptor from a basis file");
  closure->add_option("--k", closure_k, "Letter bound")->required()->check(CLI::PositiveNumber);
  auto* by_perms = closure->add_option("--basis", closure_basis, "Permutation file");
  auto* by_lang = closure->add_option("--basis-lang", closure_basis_lang, "Automaton file of basis encodings");
  by_perms->excludes(by_lang);
  by_lang->excludes(by_perms);
  closure->callback([&] {
    if (!closure_basis_lang.empty()) {
      Automaton b = read_automaton(closure_basis_lang);
      if (b.alphabet() < closure_k) b = widen(b, closure_k);
      std::cout << serialize_automaton(closed_from_basis(b, closure_k).forward_acceptor());
      return;
    }
    if (closure_basis.empty()) throw std::runtime_error("closure needs --basis or --basis-lang");
    const auto basis = read_permutations(closure_basis);
    for (const Permutation& p : split_by_bound(basis, closure_k).implied) {
      std::cerr << "note: " << to_string(p) << " lies outside Omega_" << closure_k
                << " and is implied by the bound\n";
    }
    const BoundedClass x = closed_from_basis(basis, closure_k);
    std::cout << serialize_automaton(x.forward_acceptor());
  });

  std::string basis_class = "-";
  bool basis_list = false;
  int basis_maxlen = 8;
  auto* basis_cmd = app.add_subcommand("basis", "Basis acceptor of a closed class");
  basis_cmd->add_option("--class", basis_class, "Class automaton file (- for stdin)");
  basis_cmd->add_flag("--list", basis_list, "Also list basis permutations as comments");
  basis_cmd->add_option("--maxlen", basis_maxlen, "Length bound for --list")->check(CLI::NonNegativeNumber);
  basis_cmd->callback([&] {
    const BoundedClass x = read_class(basis_class);
    std::cout << serialize_automaton(minimize(with_direction(basis_from_closed(x), Direction::forward)));
    if (!basis_list) return;
    std::cout << "# basis restricted to length <= " << basis_maxlen << '\n';
    for (const Permutation& p : list_basis(x, basis_maxlen)) {
      std::cout << "# " << to_string(p);
      if (max_rank(p) > x.bound()) std::cout << "  (outside Omega_" << x.bound() << ")";
      std::cout << '\n';
    }
  });

  int closed_k = 0;
  std::string closed_lang = "-";
  auto* is_closed = app.add_subcommand("is-closed", "Is the language E(X) for a closed X in Omega_k?");
  is_closed->add_option("--k", closed_k, "Letter bound")->required()->check(CLI::PositiveNumber);
  is_closed->add_option("--lang", closed_lang, "Automaton file (- for stdin)");
  is_closed->callback([&] { result = print_bool(is_closed_language(read_automaton(closed_lang), closed_k)); });

  std::string fb_class = "-";
  auto* finitely = app.add_subcommand("is-finitely-based", "Does the class have a finite basis?");
  finitely->add_option("--class", fb_class, "Class automaton file (- for stdin)");
  finitely->callback([&] { result = print_bool(is_finitely_based(read_class(fb_class))); });

  std::string member_class;
  auto* member_cmd = app.add_subcommand("member", "Membership of stdin permutations");
  member_cmd->add_option("--class", member_class, "Class automaton file")->required();
  member_cmd->callback([&] {
    const BoundedClass x = read_class(member_class);
    for_each_input_line([&](const std::vector<int>& row) {
      std::cout << (member(x, Permutation(row)) ? "in" : "out") << '\n';
    });
  });

  std::string count_lang = "-";
  int count_upto = 10;
  auto* count = app.add_subcommand("count", "Accepted words of each length");
  count->add_option("--lang", count_lang, "Automaton file (- for stdin)");
  count->add_option("--upto", count_upto, "Largest length")->check(CLI::NonNegativeNumber);
  count->callback([&] { print_list(count_words(read_automaton(count_lang), count_upto)); });

  std::string gf_lang = "-";
  auto* gf = app.add_subcommand("gf", "Rational generating function (numerator, denominator)");
  gf->add_option("--lang", gf_lang, "Automaton file (- for stdin)");
  gf->callback([&] { print_gf(generating_function(read_automaton(gf_lang))); });

  std::string rec_lang = "-";
  auto* recurrence = app.add_subcommand("recurrence", "Linear recurrence of the length counts");
  recurrence->add_option("--lang", rec_lang, "Automaton file (- for stdin)");
  recurrence->callback([&] {
    const LinearRecurrence rec = linear_recurrence(generating_function(read_automaton(rec_lang)));
    std::cout << "order " << rec.order << '\n' << "coefficients";
    for (const auto& c : rec.coefficients) std::cout << ' ' << c;
    std::cout << '\n' << "initial";
    for (const auto& a : rec.initial) std::cout << ' ' << a;
    std::cout << '\n';
  });

  std::string phi_text;
  std::string mono_basis;
  auto* monotone = app.add_subcommand("monotone", "Monotone segment classes W_phi");
  monotone->require_subcommand(1);
  const auto add_phi = [&](CLI::App* sub) {
    sub->add_option("--phi", phi_text, "Sign string such as +-- (use --phi=-+ for a leading minus)")
        ->required()
        ->allow_extra_args(false);
  };
  auto* mono_decode = monotone->add_subcommand("decode", "Decode computation words from stdin");
  add_phi(mono_decode);
  mono_decode->callback([&] {
    const SignSequence phi(phi_text);
    for_each_input_line([&](const std::vector<int>& row) { std::cout << to_string(decode_word(phi, row)) << '\n'; });
  });
  auto* mono_greedy = monotone->add_subcommand("greedy", "Greedy encodings of stdin permutations");
  add_phi(mono_greedy);
  mono_greedy->callback([&] {
    const SignSequence phi(phi_text);
    for_each_input_line([&](const std::vector<int>& row) {
      std::cout << to_string(greedy_encoding(phi, Permutation(row))) << '\n';
    });
  });
  auto* mono_enc = monotone->add_subcommand("encodings", "All encodings of stdin permutations");
  add_phi(mono_enc);
  mono_enc->callback([&] {
    const SignSequence phi(phi_text);
    for_each_input_line([&](const std::vector<int>& row) {
      const Permutation p(row);
      std::cout << "# " << to_string(p) << '\n';
      for (const Word& w : encodings(phi, p)) std::cout << to_string(w) << '\n';
    });
  });
  auto* mono_gf = monotone->add_subcommand("gf", "Generating function of a closed subset of W_phi");
  add_phi(mono_gf);
  mono_gf->add_option("--basis", mono_basis, "Permutation file (omit for all of W_phi)");
  mono_gf->callback([&] {
    const auto basis = mono_basis.empty() ? std::vector<Permutation>{} : read_permutations(mono_basis);
    print_gf(gf_monotone(SignSequence(phi_text), basis));
  });
  auto* mono_member = monotone->add_subcommand("member", "Membership of stdin permutations");
  add_phi(mono_member);
  mono_member->add_option("--basis", mono_basis, "Permutation file (omit for all of W_phi)");
  mono_member->callback([&] {
    const auto basis = mono_basis.empty() ? std::vector<Permutation>{} : read_permutations(mono_basis);
    const MonotoneClass x(SignSequence(phi_text), basis);
    for_each_input_line([&](const std::vector<int>& row) {
      std::cout << (x.contains(Permutation(row)) ? "in" : "out") << '\n';
    });
  });

  auto* simulate = app.add_subcommand("simulate", "Exhaustive machine simulation");
  simulate->require_subcommand(1);
  std::optional<int> sim_capacity;
  int sim_n = 0;
  auto* sim_stack = simulate->add_subcommand("stack", "Outputs of a (bounded) stack");
  sim_stack->add_option("--capacity", sim_capacity, "Stack capacity (omit for unbounded)");
  sim_stack->add_option("--n", sim_n, "Input length")->required()->check(CLI::NonNegativeNumber);
  sim_stack->callback([&] {
    for (const Permutation& p : stack_outputs(sim_capacity, sim_n)) std::cout << to_string(p) << '\n';
  });
  auto* sim_riffle = simulate->add_subcommand("riffle", "Outputs of a riffle shuffler");
  sim_riffle->add_option("--n", sim_n, "Input length")->required()->check(CLI::NonNegativeNumber);
  sim_riffle->callback([&] {
    for (const Permutation& p : riffle_outputs(sim_n)) std::cout << to_string(p) << '\n';
  });

  std::string bb_oracle;
  int bb_maxlen = 5;
  auto* brute = app.add_subcommand("brute-basis", "Basis of an oracle class up to a length");
  brute->add_option("--oracle", bb_oracle, "riffle | stack | stack2 | avoid:FILE")->required();
  brute->add_option("--maxlen", bb_maxlen, "Length bound")->check(CLI::NonNegativeNumber);
  brute->callback([&] {
    const RestrictedBasis basis = brute_basis(oracle_from_name(bb_oracle), bb_maxlen);
    std::cout << "# basis restricted to length <= " << basis.maxlen << '\n';
    for (const Permutation& p : basis.elements) std::cout << to_string(p) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitError;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return result;
}
