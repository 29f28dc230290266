#ifndef RASE_ERRORS_HPP
#define RASE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rase {

// Invalid user-supplied configuration (bad grid spans, events off the grid, ...).
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// A map failed a physicality precondition (e.g. symplectic residual too large).
class physicality_error : public std::runtime_error {
public:
    explicit physicality_error(const std::string& what) : std::runtime_error(what) {}
};

// Correlation ratio requested for a state with vanishing intensity.
class degenerate_state_error : public std::runtime_error {
public:
    explicit degenerate_state_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rase

#endif
