#pragma once

#include <stdexcept>
#include <string>

namespace wcdim {

// Malformed or out-of-range input. Maps to CLI exit status 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters valid for construction but outside a closed-form result's hypotheses.
class HypothesisError : public InputError {
public:
    explicit HypothesisError(const std::string& what) : InputError(what) {}
};

// Resource guard tripped (e.g. too many maximal independent sets). CLI exit status 3.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wcdim
