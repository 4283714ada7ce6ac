#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparemine {

// Input text was not valid UTF-8; carries the byte offset of the first bad byte.
class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(std::size_t byte_offset)
        : std::runtime_error("invalid UTF-8 sequence at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// A support/confidence ratio whose denominator is zero.
class UndefinedMeasureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Item has no node / no active header entry where one is required.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sparemine
