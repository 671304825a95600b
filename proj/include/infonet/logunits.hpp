#ifndef INFONET_LOGUNITS_HPP
#define INFONET_LOGUNITS_HPP

// Dimensionless logarithmic information units (bit, nat, dB, byte, cent,
// CDROM) and dimensional physical quantities. A unit carries two independent
// aspects: dimension and magnitude. Information units are dimensionless but
// have a magnitude, stored here as bits-per-unit so that conversion is a
// single division. Checked arithmetic refuses to combine a bare flow with a
// flow-information product.

#include <map>
#include <string>
#include <vector>

#include "infonet/errors.hpp"

namespace infonet::logunits {

// A dimensionless logarithmic unit. bits_per_unit equals log2 of the
// logarithm base the unit corresponds to; it is positive and finite.
struct InfoUnit {
  std::string symbol;
  double bits_per_unit = 1.0;

  friend bool operator==(const InfoUnit&, const InfoUnit&) = default;
};

// Built-in units, in registry order:
//   bit    1
//   byte   8                 (base 2^8)
//   nat    log2(e)           (base e)
//   dB     log2(10)/10       (base 10^(1/10))
//   cent   1/1200            (base 2^(1/1200))
//   CDROM  666000*1024*8     (content of a Red Book Mode-1 CD-ROM)
const std::vector<InfoUnit>& unit_registry();

const InfoUnit& unit_bit();

// Accepts a registry symbol or "custom:<b>" with real b > 1
// (bits_per_unit = log2 b). Anything else is a UnitError.
InfoUnit parse_info_unit(const std::string& spec);

// Physical dimension: exponent map over base-dimension names ("mass",
// "length", "time") plus free annotation symbols carried verbatim ("C").
// Canonical form stores no zero exponents; equality is map equality.
// The default-constructed Dimension is dimensionless.
class Dimension {
 public:
  Dimension() = default;
  explicit Dimension(const std::map<std::string, int>& exponents);

  bool dimensionless() const { return exponents_.empty(); }
  const std::map<std::string, int>& exponents() const { return exponents_; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  std::map<std::string, int> exponents_;
};

// A physical quantity. scale is a power-of-ten exponent relative to the
// coherent reference units gram, metre, year, kept exact as an integer.
struct DimQuantity {
  double value = 0.0;
  int scale = 0;
  Dimension dimension;
};

// An amount of information. value >= 0; +infinity is legal (the surprisal
// of a zero-probability event).
struct InfoQuantity {
  double value = 0.0;
  InfoUnit unit;
};

// Product of a flow and an information measure, e.g. ascendency in
// mg C bit m^-2 y^-1. The dimension is that of the flow factor.
struct FlowInfoQuantity {
  double value = 0.0;
  InfoUnit unit;
  int scale = 0;
  Dimension dimension;
};

// Exact power of ten for integer exponents.
double pow10i(int exponent);

// value * bits_per(source) / bits_per(target); +inf maps to +inf.
InfoQuantity convert_info(const InfoQuantity& q, const InfoUnit& target);

struct ParsedDimension {
  Dimension dimension;
  int scale = 0;  // aggregate power of ten from SI prefixes
};

// Grammar: whitespace-separated tokens "<si-prefix?><symbol>" with an
// optional exponent "^<int>" (or the compact form "m-2"). Prefixes
// p, n, u, m, k attach to the base symbols g (mass), m (length), y (time);
// every other alphabetic token is a free annotation symbol. "mg C m^-2 y^-1"
// yields {mass:1, C:1, length:-2, time:-1} at scale 10^-3. Errors carry the
// 1-based column of the offending token.
ParsedDimension parse_dimension(const std::string& spec);

// value rescaled by (bits_per source / bits_per target) * 10^(dscale);
// the dimension is unchanged.
FlowInfoQuantity convert_flow_info(const FlowInfoQuantity& q,
                                   const InfoUnit& target_unit,
                                   int target_scale);

// Sums with the left operand's scale (and unit); the right operand is
// converted first. Mismatched dimensions throw DimensionError, as does any
// mix of a bare flow with a flow-information product.
DimQuantity checked_add(const DimQuantity& a, const DimQuantity& b);
FlowInfoQuantity checked_add(const FlowInfoQuantity& a,
                             const FlowInfoQuantity& b);
[[noreturn]] DimQuantity checked_add(const DimQuantity& a,
                                     const FlowInfoQuantity& b);
[[noreturn]] FlowInfoQuantity checked_add(const FlowInfoQuantity& a,
                                          const DimQuantity& b);

// Forms a flow-information product. An infinite information value cannot be
// flow-weighted and throws DomainError.
FlowInfoQuantity flow_times_info(const DimQuantity& flow,
                                 const InfoQuantity& info);

// Scale-free canonical text, e.g. "g C m^-2 y^-1". Dimensionless gives "".
std::string format_dimension(const Dimension& d);

// Canonical unit text with SI prefixes chosen to encode the power-of-ten
// scale. residual_scale is the part of the scale the prefix grammar cannot
// express (callers fold 10^residual into the numeric value); it is zero for
// every prefix-reachable scale.
struct FormattedUnit {
  std::string text;
  int residual_scale = 0;
};
FormattedUnit format_dim_unit(const Dimension& d, int scale);
// Same with the information unit symbol inserted between the positive- and
// negative-exponent factors: "mg C bit m^-2 y^-1".
FormattedUnit format_flow_info_unit(const Dimension& d, int scale,
                                    const InfoUnit& unit);

// A unit expression, as written on the command line: a pure information
// unit ("bit"), a bare physical dimension ("mg C m^-2 y^-1"), or a
// flow-information product containing exactly one information token
// ("mg C bit m^-2 y^-1").
struct UnitExpression {
  enum class Kind { info, flow, flow_info };
  Kind kind = Kind::flow;
  InfoUnit unit;        // meaningful for info and flow_info
  Dimension dimension;  // meaningful for flow and flow_info
  int scale = 0;
};

UnitExpression parse_unit_expression(const std::string& spec);

// Canonical description used in mismatch diagnostics.
std::string describe(const UnitExpression& e);

// The target expression convert_between actually converts into: a bare
// information unit named against a flow-information source adopts the
// source's dimension and scale (the usual shape of a conversion list, where
// one measured flow is restated bit -> dB -> byte). All other expressions
// pass through unchanged.
UnitExpression resolved_target(const UnitExpression& from,
                               const UnitExpression& to);

// Converts between two unit expressions of the same kind and dimension,
// after target resolution as above. Everything else throws DimensionError
// naming both canonical forms; in particular a bare flow never converts to
// a flow-information product.
double convert_between(double value, const UnitExpression& from,
                       const UnitExpression& to);

}  // namespace infonet::logunits

#endif  // INFONET_LOGUNITS_HPP
