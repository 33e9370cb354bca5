#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ldikit {

/* Raised when a requested search would exceed its enumeration budget.
   The search is refused up front rather than silently truncated, so a
   caller can tell "no witness below the bound" apart from "gave up". */
struct BudgetExceeded : std::runtime_error {
  std::string required; /* decimal count the search would need */
  std::string budget;   /* decimal budget that was configured */

  BudgetExceeded(std::string required_, std::string budget_,
                 const std::string &what_)
      : std::runtime_error(what_), required(std::move(required_)),
        budget(std::move(budget_)) {}
};

} // namespace ldikit
