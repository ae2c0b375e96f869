#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace recolour {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input violates the documented contract of an operation.
class precondition_error : public error {
public:
    using error::error;
};

// A configured vertex, colouring or state bound would be exceeded.
class limit_exceeded : public error {
public:
    explicit limit_exceeded(const std::string& what, std::size_t partial_count = 0)
        : error(what), partial_count_(partial_count) {}

    std::size_t partial_count() const noexcept { return partial_count_; }

private:
    std::size_t partial_count_;
};

// Malformed graph, colouring or sequence file.
class parse_error : public error {
public:
    using error::error;
};

// A recolouring step that is not a valid move in the recolouring graph.
class sequence_error : public precondition_error {
public:
    sequence_error(const std::string& what, std::size_t step_index)
        : precondition_error(what), step_index_(step_index) {}

    std::size_t step_index() const noexcept { return step_index_; }

private:
    std::size_t step_index_;
};

} // namespace recolour
