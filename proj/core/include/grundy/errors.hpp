#ifndef GRUNDY_ERRORS_HPP
#define GRUNDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grundy {

// Thrown when an exact routine is asked to exceed its documented size cap,
// or when a solver blows through its state budget. Solvers that already
// decided some values report the largest k decided so far (-1 if none).
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what, int largest_k_decided = -1)
        : std::runtime_error(what), largest_k(largest_k_decided) {}

    int largest_k = -1;
};

} // namespace grundy

#endif
