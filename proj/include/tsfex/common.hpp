#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsfex {

// Input text that violates one of the documented file formats.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Contract violation on in-memory data: wrong shapes, empty inputs,
// schema drift, unmatched ids.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal representation that parses back to the same double.
std::string fmt_double(double v);

uint64_t fnv1a64(const void* data, std::size_t n);
uint64_t fnv1a64(const std::string& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tsfex
