#include "gwmax/error.hpp"

namespace gwmax {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::group_too_large: return "group-too-large";
    case Errc::oracle_too_large: return "oracle-too-large";
    case Errc::parse_error: return "parse-error";
    case Errc::not_admissible: return "not-admissible";
    case Errc::not_quasihomogeneous: return "not-quasihomogeneous";
    case Errc::weights_not_unique: return "weights-not-unique";
    case Errc::too_many_monomials: return "too-many-monomials";
    case Errc::not_square: return "not-square";
    case Errc::not_decomposable: return "not-decomposable";
    case Errc::exponent_too_small: return "exponent-too-small";
    case Errc::rank_deficient: return "rank-deficient";
    case Errc::timeout: return "timeout";
  }
  return "unknown";
}

}  // namespace gwmax
