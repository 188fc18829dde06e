#pragma once

#include <stdexcept>
#include <string>

namespace neumaier {

enum class Errc {
  invalid_argument,
  parse_error,
  group_too_large,
  unbound_name,
  identity_in_set,
  not_inverse_closed,
  not_a_subgroup,
  not_a_clique,
  group_mismatch,
  not_connected,
  non_square_discriminant,
  search_too_large,
  unknown_entry,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace neumaier
