#include "cavityrad/errors.hpp"

namespace cavityrad {

ThresholdSingularity::ThresholdSingularity(std::int64_t n1, std::int64_t n2,
                                           double omega_threshold)
    : DomainError("threshold singularity: transverse mode (" + std::to_string(n1) + ", " +
                  std::to_string(n2) + ") opens at omega = " + std::to_string(omega_threshold) +
                  " rad/s"),
      n1_(n1),
      n2_(n2),
      omega_threshold_(omega_threshold) {}

ResourceLimitExceeded::ResourceLimitExceeded(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error("mode enumeration needs about " + std::to_string(required) +
                         " lattice points, cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

}  // namespace cavityrad
