#pragma once

#include <stdexcept>

namespace bcr {

/// A configured work or memory budget would be exceeded.
class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace bcr
