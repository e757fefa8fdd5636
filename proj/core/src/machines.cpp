#include "permclass/machines.hpp"

#include <vector>

namespace permclass {

namespace {

void stack_search(int n, std::optional<int> capacity, int next_input, std::vector<int>& stack,
                  std::vector<int>& output, std::set<Permutation>& found) {
  if (static_cast<int>(output.size()) == n) {
    found.emplace(output);
    return;
  }
  if (next_input <= n && (!capacity || static_cast<int>(stack.size()) < *capacity)) {
    stack.push_back(next_input);
    stack_search(n, capacity, next_input + 1, stack, output, found);
    stack.pop_back();
  }
  if (!stack.empty()) {
    const int top = stack.back();
    stack.pop_back();
    output.push_back(top);
    stack_search(n, capacity, next_input, stack, output, found);
    output.pop_back();
    stack.push_back(top);
  }
}

// Greedy stack realisation: push inputs until the wanted value is on top.
bool stack_generates(std::optional<int> capacity, const Permutation& p) {
  std::vector<int> stack;
  int next_input = 1;
  for (int want : p) {
    while (next_input <= want) {
      stack.push_back(next_input++);
      if (capacity && static_cast<int>(stack.size()) > *capacity) return false;
    }
    if (stack.empty() || stack.back() != want) return false;
    stack.pop_back();
  }
  return true;
}

}  // namespace

std::set<Permutation> stack_outputs(std::optional<int> capacity, int n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  if (capacity && *capacity < 0) throw std::invalid_argument("capacity must be non-negative");
  std::set<Permutation> found;
  std::vector<int> stack, output;
  stack_search(n, capacity, 1, stack, output, found);
  return found;
}

std::set<Permutation> riffle_outputs(int n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  std::set<Permutation> found;
  std::vector<int> out;
  for (int cut = 0; cut <= n; ++cut) {
    // Interleave 1..cut with cut+1..n.
    const auto merge = [&](auto&& self, int low, int high) -> void {
      if (low > cut && high > n) {
        found.emplace(out);
        return;
      }
      if (low <= cut) {
        out.push_back(low);
        self(self, low + 1, high);
        out.pop_back();
      }
      if (high <= n) {
        out.push_back(high);
        self(self, low, high + 1);
        out.pop_back();
      }
    };
    merge(merge, 1, cut + 1);
  }
  return found;
}

MachineRun run(const Machine& machine, int n) {
  MachineRun result{machine, n, {}};
  if (const auto* stack = std::get_if<StackMachine>(&machine)) {
    result.outputs = stack_outputs(stack->capacity, n);
  } else {
    result.outputs = riffle_outputs(n);
  }
  return result;
}

bool riffle_member(const Permutation& p) {
  const auto n = static_cast<int>(p.size());
  const Permutation where = inverse(p);  // where.at(v) = position of value v
  // low_ok[j]: values 1..j appear in increasing positions.
  std::vector<bool> low_ok(static_cast<std::size_t>(n) + 1, true);
  for (int j = 2; j <= n; ++j) low_ok[j] = low_ok[j - 1] && where.at(j - 1) < where.at(j);
  bool high_ok = true;  // values j+1..n increasing, for the current j
  for (int j = n; j >= 0; --j) {
    if (j + 2 <= n) high_ok = high_ok && where.at(j + 1) < where.at(j + 2);
    if (low_ok[j] && high_ok) return true;
  }
  return false;
}

bool generates(const Machine& machine, const Permutation& p) {
  if (const auto* stack = std::get_if<StackMachine>(&machine)) return stack_generates(stack->capacity, p);
  return riffle_member(p);
}

bool sorts(const Machine& machine, const Permutation& p) { return generates(machine, inverse(p)); }

}  // namespace permclass
