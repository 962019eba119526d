#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kjdt {

enum class errc {
  invalid_partition,
  invalid_tableau,
  shape_exceeds_rectangle,
  invalid_chain,
  not_a_short_ribbon,
  not_an_inner_corner,
  not_an_outer_corner,
  incomplete_order,
  precondition_violated,
  not_straight_shape,
  shapes_do_not_abut,
  not_in_span,
  parse_error,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_partition: return "InvalidPartition";
    case errc::invalid_tableau: return "InvalidTableau";
    case errc::shape_exceeds_rectangle: return "ShapeExceedsRectangle";
    case errc::invalid_chain: return "InvalidChain";
    case errc::not_a_short_ribbon: return "NotAShortRibbon";
    case errc::not_an_inner_corner: return "NotAnInnerCorner";
    case errc::not_an_outer_corner: return "NotAnOuterCorner";
    case errc::incomplete_order: return "IncompleteOrder";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::not_straight_shape: return "NotStraightShape";
    case errc::shapes_do_not_abut: return "ShapesDoNotAbut";
    case errc::not_in_span: return "NotInSpan";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so the
// CLI can print a machine-readable line without string matching.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace kjdt
