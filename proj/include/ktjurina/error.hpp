#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktjurina {

// Base of everything the library throws on bad input or failed preconditions.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class arity_mismatch : public error {
public:
    using error::error;
};

// A partial derivative vanishes identically; f cannot have an isolated singularity.
class degenerate_variable : public error {
public:
    using error::error;
};

class inadmissible_weights : public error {
public:
    using error::error;
};

class not_weighted_homogeneous : public error {
public:
    using error::error;
};

// The graded quotient still had deficient pieces past the degree bound.
class dimension_not_finite : public error {
public:
    using error::error;
};

class out_of_validity_range : public error {
public:
    using error::error;
};

class ingredient_unavailable : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace ktjurina
