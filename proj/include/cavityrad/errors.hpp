#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cavityrad {

/// Raised when an argument lies outside the domain of an operation
/// (non-finite input, non-positive temperature or length, negative frequency).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The rod density diverges as an inverse square root where omega/c meets a
/// transverse wavenumber. Evaluation inside the guard window is refused.
class ThresholdSingularity : public DomainError {
 public:
  ThresholdSingularity(std::int64_t n1, std::int64_t n2, double omega_threshold);

  std::int64_t n1() const noexcept { return n1_; }
  std::int64_t n2() const noexcept { return n2_; }
  double omega_threshold() const noexcept { return omega_threshold_; }

 private:
  std::int64_t n1_;
  std::int64_t n2_;
  double omega_threshold_;
};

/// A mode enumeration would need more lattice points than the configured cap.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(std::uint64_t required, std::uint64_t cap);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace cavityrad
