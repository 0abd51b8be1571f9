#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace mmfvs {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

// Cooperative time limit; solvers poll check() at every search node.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = clock::now() + std::chrono::duration_cast<clock::duration>(budget);
    return d;
  }

  bool expired() const { return at_ && clock::now() >= *at_; }

  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<clock::time_point> at_;
};

}  // namespace mmfvs
