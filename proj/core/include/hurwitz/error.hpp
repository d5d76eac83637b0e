#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact algebra
struct division_by_zero : error {
  explicit division_by_zero(const std::string& msg = "division by zero") : error(msg) {}
};
struct nonzero_remainder : error {
  explicit nonzero_remainder(const std::string& msg = "division left a nonzero remainder") : error(msg) {}
};
struct precision_mismatch : error {
  explicit precision_mismatch(const std::string& msg) : error(msg) {}
};
struct bad_reduction_prime : error {
  explicit bad_reduction_prime(const std::string& msg) : error(msg) {}
};

// permutations
struct degree_mismatch : error {
  explicit degree_mismatch(const std::string& msg = "permutation degrees differ") : error(msg) {}
};
struct degree_too_large : error {
  explicit degree_too_large(const std::string& msg) : error(msg) {}
};
struct bad_permutation : error {
  explicit bad_permutation(const std::string& msg) : error(msg) {}
};

// tuple classes
struct invalid_class_index : error {
  explicit invalid_class_index(const std::string& msg) : error(msg) {}
};
struct wrong_cycle_type : error {
  explicit wrong_cycle_type(const std::string& msg) : error(msg) {}
};
struct point_not_in_support : error {
  explicit point_not_in_support(const std::string& msg) : error(msg) {}
};
struct odd_cycle_length : error {
  explicit odd_cycle_length(const std::string& msg) : error(msg) {}
};
struct invalid_parameter : error {
  explicit invalid_parameter(const std::string& msg) : error(msg) {}
};

// lifting
struct singular_jacobian : error {
  singular_jacobian(const std::string& msg, std::vector<std::vector<std::string>> kernel_basis)
      : error(msg), kernel(std::move(kernel_basis)) {}
  std::vector<std::vector<std::string>> kernel;
};
struct insufficient_precision : error {
  explicit insufficient_precision(const std::string& msg) : error(msg) {}
};
struct generator_degenerate : error {
  explicit generator_degenerate(const std::string& msg) : error(msg) {}
};
struct verification_failure : error {
  explicit verification_failure(const std::string& msg) : error(msg) {}
};
struct ramification_check_failed : verification_failure {
  explicit ramification_check_failed(const std::string& msg) : verification_failure(msg) {}
};
struct identity_failed : verification_failure {
  explicit identity_failed(const std::string& msg) : verification_failure(msg) {}
};
struct ramification_mismatch : verification_failure {
  explicit ramification_mismatch(const std::string& msg) : verification_failure(msg) {}
};
struct non_unit_leading : error {
  explicit non_unit_leading(const std::string& msg) : error(msg) {}
};

// specialization
struct parameter_at_pole : error {
  explicit parameter_at_pole(const std::string& msg) : error(msg) {}
};
struct degenerate_fiber : error {
  explicit degenerate_fiber(const std::string& msg) : error(msg) {}
};
struct empty_interval : error {
  explicit empty_interval(const std::string& msg) : error(msg) {}
};
struct all_primes_bad : error {
  explicit all_primes_bad(const std::string& msg) : error(msg) {}
};

}  // namespace hurwitz
