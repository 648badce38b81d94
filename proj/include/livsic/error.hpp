#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace livsic {

enum class Errc {
  not_primitive,
  inadmissible_boundary_word,
  too_shallow,
  non_convergent_eigensolve,
  word_too_short,
  inadmissible_pair,
  not_in_domain,
  no_common_leaf,
  malformed_instance,
  missing_pair_value,
  depth_too_shallow,
  missing_boundary_data,
  negative_gap,
  ratio_sum_mismatch,
  no_root,
  mismatched_systems,
  gap_on_dual_side,
  parse_error,
  unknown_builtin,
};

constexpr std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::inadmissible_boundary_word: return "InadmissibleBoundaryWord";
    case Errc::too_shallow: return "TooShallow";
    case Errc::non_convergent_eigensolve: return "NonConvergentEigensolve";
    case Errc::word_too_short: return "WordTooShort";
    case Errc::inadmissible_pair: return "InadmissiblePair";
    case Errc::not_in_domain: return "NotInDomain";
    case Errc::no_common_leaf: return "NoCommonLeaf";
    case Errc::malformed_instance: return "MalformedInstance";
    case Errc::missing_pair_value: return "MissingPairValue";
    case Errc::depth_too_shallow: return "DepthTooShallow";
    case Errc::missing_boundary_data: return "MissingBoundaryData";
    case Errc::negative_gap: return "NegativeGap";
    case Errc::ratio_sum_mismatch: return "RatioSumMismatch";
    case Errc::no_root: return "NoRoot";
    case Errc::mismatched_systems: return "MismatchedSystems";
    case Errc::gap_on_dual_side: return "GapOnDualSide";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_builtin: return "UnknownBuiltin";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace livsic
