#pragma once

#include <optional>
#include <set>
#include <variant>

#include "permclass/permutation.hpp"

namespace permclass {

/// A stack holding at most `capacity` tokens; unbounded when empty.
struct StackMachine {
  std::optional<int> capacity;
};

/// Cuts the input 1..n into 1..j and j+1..n and interleaves the two parts.
struct RiffleShuffler {};

using Machine = std::variant<StackMachine, RiffleShuffler>;

/// Outputs of a machine on inputs of one length.
struct MachineRun {
  Machine machine;
  int length = 0;
  std::set<Permutation> outputs;
};

/// All outputs of a stack on input 1..n, by exhaustive simulation of every
/// push/pop schedule.
std::set<Permutation> stack_outputs(std::optional<int> capacity, int n);

/// All riffle shuffles of 1..n, by enumerating every cut and interleaving.
std::set<Permutation> riffle_outputs(int n);

MachineRun run(const Machine& machine, int n);

/// Linear check: for some j, the values 1..j and j+1..n each appear in
/// increasing order.
bool riffle_member(const Permutation& p);

/// Whether the machine can turn input 1..n into p.
bool generates(const Machine& machine, const Permutation& p);

/// Whether the machine can turn p into the identity; equals
/// generates(machine, inverse(p)).
bool sorts(const Machine& machine, const Permutation& p);

}  // namespace permclass
