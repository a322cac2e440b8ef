#ifndef SEMICOV_ERROR_HPP
#define SEMICOV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace semicov {

// Stable machine-readable error codes; the CLI prints them verbatim.
enum class errc {
  invalid_input,
  gcd_not_one,
  not_a_member,
  no_gaps,
  not_special_gap,
  not_minimal_generator,
  not_closed,
  is_minimum,
  no_removable_generator,
  limit_exceeded,
  not_an_fset,
  not_theta_set,
  even_frobenius,
  contains_zero,
  out_of_range,
  bound_exceeded,
};

inline const char* code_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid_input";
    case errc::gcd_not_one: return "gcd_not_one";
    case errc::not_a_member: return "not_a_member";
    case errc::no_gaps: return "no_gaps";
    case errc::not_special_gap: return "not_special_gap";
    case errc::not_minimal_generator: return "not_minimal_generator";
    case errc::not_closed: return "not_closed";
    case errc::is_minimum: return "is_minimum";
    case errc::no_removable_generator: return "no_removable_generator";
    case errc::limit_exceeded: return "limit_exceeded";
    case errc::not_an_fset: return "not_an_fset";
    case errc::not_theta_set: return "not_theta_set";
    case errc::even_frobenius: return "even_frobenius";
    case errc::contains_zero: return "contains_zero";
    case errc::out_of_range: return "out_of_range";
    case errc::bound_exceeded: return "bound_exceeded";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_str() const noexcept { return code_name(code_); }

 private:
  errc code_;
};

}  // namespace semicov

#endif  // SEMICOV_ERROR_HPP
