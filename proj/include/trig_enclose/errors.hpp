#ifndef TRIG_ENCLOSE_ERRORS_HPP
#define TRIG_ENCLOSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trig_enclose {

// Argument outside the mathematical domain of an operation (or inside its
// guard band around a singular endpoint).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A certified tail could not be pushed below the requested target within the
// term/layer budget.  best_bound_ is the tightest bound that was achieved,
// as a decimal string so the exception stays trivially copyable.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string best_bound)
        : std::runtime_error(what), best_bound_(std::move(best_bound)) {}
    const std::string& best_bound() const { return best_bound_; }

private:
    std::string best_bound_;
};

// Rejected input: unknown identifier, out-of-range index, bad flag value.
class RejectedInput : public std::invalid_argument {
public:
    explicit RejectedInput(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace trig_enclose

#endif
