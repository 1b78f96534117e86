#pragma once

#include <exception>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fano {

namespace detail {
/// Child plans for a split, in exploration order.
std::vector<BranchPlan> split_plans(const BranchPlan& plan, const ZeroDivisorSplit& split);
}  // namespace detail

template <class F>
auto explore_branches(F&& attempt, int max_attempts) -> decltype(attempt(std::declval<const BranchPlan&>())) {
  std::vector<BranchPlan> stack{BranchPlan{}};
  std::exception_ptr last_error;
  int attempts = 0;
  while (!stack.empty()) {
    if (++attempts > max_attempts) throw std::runtime_error("branch exploration exceeded its attempt limit");
    const BranchPlan plan = std::move(stack.back());
    stack.pop_back();
    try {
      return attempt(plan);
    } catch (const ZeroDivisorSplit& split) {
      auto children = detail::split_plans(plan, split);
      for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    } catch (const std::exception&) {
      last_error = std::current_exception();
    }
  }
  if (last_error) std::rethrow_exception(last_error);
  throw std::logic_error("branch exploration ran no attempt");
}

}  // namespace fano
