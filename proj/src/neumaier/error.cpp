#include "neumaier/error.hpp"

namespace neumaier {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse_error: return "parse_error";
    case Errc::group_too_large: return "group_too_large";
    case Errc::unbound_name: return "unbound_name";
    case Errc::identity_in_set: return "identity_in_set";
    case Errc::not_inverse_closed: return "not_inverse_closed";
    case Errc::not_a_subgroup: return "not_a_subgroup";
    case Errc::not_a_clique: return "not_a_clique";
    case Errc::group_mismatch: return "group_mismatch";
    case Errc::not_connected: return "not_connected";
    case Errc::non_square_discriminant: return "non_square_discriminant";
    case Errc::search_too_large: return "search_too_large";
    case Errc::unknown_entry: return "unknown_entry";
  }
  return "unknown";
}

}  // namespace neumaier
