#pragma once

#include <stdexcept>
#include <string>

namespace ks2 {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new failure kinds should derive from one of the groups below.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data (exit code 2 in the CLI).
class input_error : public error {
 public:
  using error::error;
};

class empty_sample : public input_error {
 public:
  empty_sample() : input_error("sample is empty") {}
};

class non_finite_value : public input_error {
 public:
  explicit non_finite_value(std::size_t index)
      : input_error("sample value at index " + std::to_string(index) +
                    " is not finite"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// A value occurs in both samples and the tie policy is reject.
class tie_rejected : public error {
 public:
  explicit tie_rejected(double value)
      : error("value " + std::to_string(value) + " occurs in both samples"),
        value_(value) {}

  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Problem size exceeds a configured cost guard (exit code 4 in the CLI).
class resource_limit : public error {
 public:
  using error::error;
};

class table_too_large : public resource_limit {
 public:
  using resource_limit::resource_limit;
};

class too_many_paths : public resource_limit {
 public:
  using resource_limit::resource_limit;
};

}  // namespace ks2
