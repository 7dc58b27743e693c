#pragma once

#include <stdexcept>
#include <string>

namespace peierls {

enum class Errc {
  flux_parse,
  rational_flux_unsupported,
  non_reduced_fraction,
  depth_exceeds_expansion,
  incompatible_periodicity,
  invalid_parameters,
  truncation_too_small,
  dataset_format,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace peierls
