#include "infonet/logunits.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace infonet::logunits {

namespace {

// SI prefixes admitted in unit strings, exact powers of ten. The set is
// deliberately small: it covers every magnitude that occurs in flow data
// (pg through kg) without dragging in a general-purpose prefix table.
struct Prefix {
  char symbol;
  int power;
};

constexpr Prefix kPrefixes[] = {
    {'p', -12}, {'n', -9}, {'u', -6}, {'m', -3}, {'k', 3},
};

constexpr int prefix_power(char c) {
  for (const auto& p : kPrefixes) {
    if (p.symbol == c) return p.power;
  }
  return 0;
}

constexpr bool is_prefix(char c) { return prefix_power(c) != 0; }

// Base symbols with a reserved meaning; everything else alphabetic is a
// free annotation carried verbatim.
const char* base_dimension(char c) {
  switch (c) {
    case 'g':
      return "mass";
    case 'm':
      return "length";
    case 'y':
      return "time";
    default:
      return nullptr;
  }
}

char base_symbol(const std::string& dimension_name) {
  if (dimension_name == "mass") return 'g';
  if (dimension_name == "length") return 'm';
  if (dimension_name == "time") return 'y';
  return '\0';
}

// Canonical print order: positive exponents before negative ones, mass
// before annotations before length before time, annotations alphabetical
// among themselves. Gives "g C m^-2 y^-1" for the typical flow dimension.
int class_rank(const std::string& dimension_name) {
  if (dimension_name == "mass") return 0;
  if (dimension_name == "length") return 2;
  if (dimension_name == "time") return 3;
  return 1;
}

struct RawToken {
  std::string text;
  std::size_t column = 0;  // 1-based position in the source string
};

std::vector<RawToken> split_tokens(const std::string& spec) {
  std::vector<RawToken> tokens;
  std::size_t i = 0;
  while (i < spec.size()) {
    if (std::isspace(static_cast<unsigned char>(spec[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < spec.size() &&
           !std::isspace(static_cast<unsigned char>(spec[i]))) {
      ++i;
    }
    tokens.push_back({spec.substr(start, i - start), start + 1});
  }
  return tokens;
}

struct DimToken {
  std::string key;  // dimension name or annotation symbol
  int exponent = 1;
  int prefix = 0;  // power of ten contributed per unit exponent
};

// One token of the dimension grammar: <si-prefix?><symbol> optionally
// followed by ^<int> (the caret may be omitted, "m-2" == "m^-2").
DimToken resolve_dim_token(const RawToken& token) {
  const std::string& text = token.text;

  std::size_t head_end = 0;
  while (head_end < text.size()) {
    char c = text[head_end];
    if (c == '^' || c == '+' || c == '-' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      break;
    }
    ++head_end;
  }
  if (head_end == 0) {
    throw ParseError("expected a unit symbol in token '" + text + "'", 0,
                     token.column);
  }
  std::string head = text.substr(0, head_end);

  DimToken out;
  std::string tail = text.substr(head_end);
  if (!tail.empty()) {
    if (tail.front() == '^') tail.erase(0, 1);
    int exponent = 0;
    auto [ptr, ec] =
        std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
    if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
      throw ParseError("malformed exponent in token '" + text + "'", 0,
                       token.column);
    }
    out.exponent = exponent;
  }

  if (const char* base = base_dimension(head.size() == 1 ? head[0] : '\0')) {
    out.key = base;
  } else if (head.size() == 2 && is_prefix(head[0]) && base_dimension(head[1])) {
    out.key = base_dimension(head[1]);
    out.prefix = prefix_power(head[0]);
  } else {
    out.key = head;  // free annotation, kept verbatim
  }
  return out;
}

bool is_info_token(const std::string& text) {
  if (text.rfind("custom:", 0) == 0) return true;
  for (const auto& u : unit_registry()) {
    if (u.symbol == text) return true;
  }
  return false;
}

std::string dim_name(const Dimension& d) {
  std::string s = format_dimension(d);
  return s.empty() ? std::string("dimensionless") : s;
}

// Canonical token sequence of a dimension, exponent signs preserved.
struct UnitToken {
  std::string key;
  char base = '\0';  // reserved base symbol, or 0 for annotations
  int exponent = 0;
};

std::vector<UnitToken> canonical_tokens(const Dimension& d) {
  std::vector<UnitToken> tokens;
  for (const auto& [key, exponent] : d.exponents()) {
    tokens.push_back({key, base_symbol(key), exponent});
  }
  std::sort(tokens.begin(), tokens.end(),
            [](const UnitToken& a, const UnitToken& b) {
              bool a_neg = a.exponent < 0;
              bool b_neg = b.exponent < 0;
              if (a_neg != b_neg) return b_neg;
              int ra = class_rank(a.key);
              int rb = class_rank(b.key);
              if (ra != rb) return ra < rb;
              return a.key < b.key;
            });
  return tokens;
}

std::string token_text(const UnitToken& t, const char* prefix) {
  std::string s = prefix;
  s += t.base ? std::string(1, t.base) : t.key;
  if (t.exponent != 1) {
    s += '^';
    s += std::to_string(t.exponent);
  }
  return s;
}

// Candidate prefixes per token. Non-empty prefixes come first: once the
// budget pass below has fixed how many tokens carry a prefix at all, the
// prefix should land on the earliest token in canonical order (the mass
// factor), giving "mg C m^-2 y^-1" rather than "g C m^-2 ky^-1".
struct PrefixChoice {
  const char* name;
  int power;
};

constexpr PrefixChoice kPrefixChoices[] = {
    {"m", -3}, {"u", -6}, {"n", -9}, {"p", -12}, {"k", 3}, {"", 0},
};

// Assign prefixes to the prefixable tokens so their aggregate power of ten
// equals target, using at most max_prefixed non-empty prefixes. Depth-first
// over the (tiny) choice space.
bool assign_prefixes(const std::vector<UnitToken>& tokens, std::size_t index,
                     int target, int max_prefixed,
                     std::vector<const char*>& chosen) {
  if (index == tokens.size()) return target == 0;
  if (!tokens[index].base) {
    chosen[index] = "";
    return assign_prefixes(tokens, index + 1, target, max_prefixed, chosen);
  }
  for (const auto& choice : kPrefixChoices) {
    if (choice.power != 0 && max_prefixed == 0) continue;
    int contribution = choice.power * tokens[index].exponent;
    chosen[index] = choice.name;
    if (assign_prefixes(tokens, index + 1, target - contribution,
                        max_prefixed - (choice.power != 0 ? 1 : 0), chosen)) {
      return true;
    }
  }
  return false;
}

// Shared body of format_dim_unit / format_flow_info_unit: the prefixed
// token texts in canonical order, plus whatever scale could not be encoded.
struct PrefixedTokens {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  int residual_scale = 0;
};

PrefixedTokens prefixed_tokens(const Dimension& d, int scale) {
  auto tokens = canonical_tokens(d);
  std::vector<const char*> chosen(tokens.size(), "");

  std::size_t prefixable =
      static_cast<std::size_t>(std::count_if(tokens.begin(), tokens.end(),
                                             [](const UnitToken& t) {
                                               return t.base != '\0';
                                             }));
  bool solved = false;
  // Prefer solutions touching as few tokens as possible: "pg" rather than
  // "mg" with the remainder pushed onto k-prefixed length and time factors.
  for (std::size_t budget = 0; budget <= prefixable && !solved; ++budget) {
    solved = assign_prefixes(tokens, 0, scale, static_cast<int>(budget), chosen);
  }

  PrefixedTokens out;
  if (!solved) {
    out.residual_scale = scale;
    std::fill(chosen.begin(), chosen.end(), "");
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto& side = tokens[i].exponent < 0 ? out.negative : out.positive;
    side.push_back(token_text(tokens[i], chosen[i]));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

}  // namespace

const std::vector<InfoUnit>& unit_registry() {
  static const std::vector<InfoUnit> units = {
      {"bit", 1.0},
      {"byte", 8.0},
      {"nat", std::numbers::log2e},
      {"dB", std::log2(10.0) / 10.0},
      {"cent", 1.0 / 1200.0},
      {"CDROM", 5455872000.0},  // 666000 * 1024 * 8
  };
  return units;
}

const InfoUnit& unit_bit() { return unit_registry().front(); }

InfoUnit parse_info_unit(const std::string& spec) {
  for (const auto& u : unit_registry()) {
    if (u.symbol == spec) return u;
  }
  if (spec.rfind("custom:", 0) == 0) {
    std::string body = spec.substr(7);
    double base = 0.0;
    auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), base);
    if (ec != std::errc{} || ptr != body.data() + body.size()) {
      throw UnitError("custom unit base is not a number: '" + spec + "'");
    }
    if (!(base > 1.0) || !std::isfinite(base)) {
      throw UnitError("custom unit base must be a finite real > 1, got '" +
                      body + "'");
    }
    return {spec, std::log2(base)};
  }
  throw UnitError("unknown information unit '" + spec + "'");
}

Dimension::Dimension(const std::map<std::string, int>& exponents) {
  for (const auto& [key, exponent] : exponents) {
    if (exponent != 0) exponents_.emplace(key, exponent);
  }
}

double pow10i(int exponent) {
  // Powers up to 10^22 are exactly representable; build everything else
  // from exact chunks so the result stays within an ulp.
  static const double kExact[] = {
      1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,  1e8,  1e9,  1e10, 1e11,
      1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18, 1e19, 1e20, 1e21, 1e22,
  };
  if (exponent < 0) return 1.0 / pow10i(-exponent);
  double result = 1.0;
  while (exponent > 22) {
    result *= 1e22;
    exponent -= 22;
  }
  return result * kExact[exponent];
}

InfoQuantity convert_info(const InfoQuantity& q, const InfoUnit& target) {
  return {q.value * (q.unit.bits_per_unit / target.bits_per_unit), target};
}

ParsedDimension parse_dimension(const std::string& spec) {
  std::map<std::string, int> exponents;
  int scale = 0;
  for (const auto& raw : split_tokens(spec)) {
    DimToken token = resolve_dim_token(raw);
    exponents[token.key] += token.exponent;
    scale += token.prefix * token.exponent;
  }
  return {Dimension(exponents), scale};
}

FlowInfoQuantity convert_flow_info(const FlowInfoQuantity& q,
                                   const InfoUnit& target_unit,
                                   int target_scale) {
  double factor = (q.unit.bits_per_unit / target_unit.bits_per_unit) *
                  pow10i(q.scale - target_scale);
  return {q.value * factor, target_unit, target_scale, q.dimension};
}

DimQuantity checked_add(const DimQuantity& a, const DimQuantity& b) {
  if (!(a.dimension == b.dimension)) {
    throw DimensionError("dimension mismatch: '" + dim_name(a.dimension) +
                         "' vs '" + dim_name(b.dimension) + "'");
  }
  return {a.value + b.value * pow10i(b.scale - a.scale), a.scale, a.dimension};
}

FlowInfoQuantity checked_add(const FlowInfoQuantity& a,
                             const FlowInfoQuantity& b) {
  if (!(a.dimension == b.dimension)) {
    throw DimensionError("dimension mismatch: '" + dim_name(a.dimension) +
                         "' vs '" + dim_name(b.dimension) + "'");
  }
  FlowInfoQuantity converted = convert_flow_info(b, a.unit, a.scale);
  return {a.value + converted.value, a.unit, a.scale, a.dimension};
}

namespace {

[[noreturn]] void throw_mixed_add(const Dimension& flow_dim,
                                  const Dimension& info_dim,
                                  const InfoUnit& unit) {
  throw DimensionError(
      "dimension mismatch: a bare flow ('" + dim_name(flow_dim) +
      "') and a flow-information product ('" +
      format_flow_info_unit(info_dim, 0, unit).text +
      "') cannot be added or compared");
}

}  // namespace

DimQuantity checked_add(const DimQuantity& a, const FlowInfoQuantity& b) {
  throw_mixed_add(a.dimension, b.dimension, b.unit);
}

FlowInfoQuantity checked_add(const FlowInfoQuantity& a, const DimQuantity& b) {
  throw_mixed_add(b.dimension, a.dimension, a.unit);
}

FlowInfoQuantity flow_times_info(const DimQuantity& flow,
                                 const InfoQuantity& info) {
  if (!std::isfinite(info.value)) {
    throw DomainError(
        "infinite information content cannot enter a flow-scaled product");
  }
  return {flow.value * info.value, info.unit, flow.scale, flow.dimension};
}

std::string format_dimension(const Dimension& d) {
  std::vector<std::string> parts;
  for (const auto& t : canonical_tokens(d)) {
    parts.push_back(token_text(t, ""));
  }
  return join(parts);
}

FormattedUnit format_dim_unit(const Dimension& d, int scale) {
  PrefixedTokens tokens = prefixed_tokens(d, scale);
  std::vector<std::string> parts = tokens.positive;
  parts.insert(parts.end(), tokens.negative.begin(), tokens.negative.end());
  return {join(parts), tokens.residual_scale};
}

FormattedUnit format_flow_info_unit(const Dimension& d, int scale,
                                    const InfoUnit& unit) {
  PrefixedTokens tokens = prefixed_tokens(d, scale);
  std::vector<std::string> parts = tokens.positive;
  parts.push_back(unit.symbol);
  parts.insert(parts.end(), tokens.negative.begin(), tokens.negative.end());
  return {join(parts), tokens.residual_scale};
}

UnitExpression parse_unit_expression(const std::string& spec) {
  UnitExpression expr;
  std::map<std::string, int> exponents;
  bool have_info = false;

  for (const auto& raw : split_tokens(spec)) {
    if (is_info_token(raw.text)) {
      if (have_info) {
        throw ParseError(
            "more than one information unit in '" + spec + "'", 0, raw.column);
      }
      expr.unit = parse_info_unit(raw.text);
      have_info = true;
      continue;
    }
    DimToken token = resolve_dim_token(raw);
    exponents[token.key] += token.exponent;
    expr.scale += token.prefix * token.exponent;
  }

  expr.dimension = Dimension(exponents);
  bool have_dim = !expr.dimension.dimensionless() || expr.scale != 0;
  if (have_info && !have_dim) {
    expr.kind = UnitExpression::Kind::info;
    expr.scale = 0;
  } else if (have_info) {
    expr.kind = UnitExpression::Kind::flow_info;
  } else {
    expr.kind = UnitExpression::Kind::flow;
  }
  return expr;
}

std::string describe(const UnitExpression& e) {
  FormattedUnit fu;
  switch (e.kind) {
    case UnitExpression::Kind::info:
      return e.unit.symbol;
    case UnitExpression::Kind::flow:
      fu = format_dim_unit(e.dimension, e.scale);
      break;
    case UnitExpression::Kind::flow_info:
      fu = format_flow_info_unit(e.dimension, e.scale, e.unit);
      break;
  }
  std::string text = fu.text.empty() ? std::string("dimensionless") : fu.text;
  if (fu.residual_scale != 0) {
    text = "10^" + std::to_string(fu.residual_scale) + " " + text;
  }
  return text;
}

UnitExpression resolved_target(const UnitExpression& from,
                               const UnitExpression& to) {
  if (from.kind == UnitExpression::Kind::flow_info &&
      to.kind == UnitExpression::Kind::info) {
    UnitExpression promoted = to;
    promoted.kind = UnitExpression::Kind::flow_info;
    promoted.dimension = from.dimension;
    promoted.scale = from.scale;
    return promoted;
  }
  return to;
}

double convert_between(double value, const UnitExpression& from,
                       const UnitExpression& raw_target) {
  UnitExpression to = resolved_target(from, raw_target);
  auto refuse = [&](const char* why) -> double {
    throw DimensionError("cannot convert '" + describe(from) + "' to '" +
                         describe(to) + "': " + why);
  };
  if (from.kind != to.kind) {
    auto kind_name = [](UnitExpression::Kind k) {
      switch (k) {
        case UnitExpression::Kind::info:
          return "an information unit";
        case UnitExpression::Kind::flow:
          return "a bare flow";
        case UnitExpression::Kind::flow_info:
          return "a flow-information product";
      }
      return "";
    };
    std::string why = std::string(kind_name(from.kind)) + " and " +
                      kind_name(to.kind) + " are never comparable";
    return refuse(why.c_str());
  }
  switch (from.kind) {
    case UnitExpression::Kind::info:
      return value * (from.unit.bits_per_unit / to.unit.bits_per_unit);
    case UnitExpression::Kind::flow:
      if (!(from.dimension == to.dimension)) return refuse("dimensions differ");
      return value * pow10i(from.scale - to.scale);
    case UnitExpression::Kind::flow_info:
      if (!(from.dimension == to.dimension)) return refuse("dimensions differ");
      return value * (from.unit.bits_per_unit / to.unit.bits_per_unit) *
             pow10i(from.scale - to.scale);
  }
  return refuse("unreachable");
}

}  // namespace infonet::logunits
