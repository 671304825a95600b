#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "infonet/logunits.hpp"

using namespace infonet;
using namespace infonet::logunits;

TEST_SUITE("logunits") {

TEST_CASE("registry magnitudes") {
  CHECK(unit_bit().bits_per_unit == 1.0);
  CHECK(parse_info_unit("byte").bits_per_unit == 8.0);
  // Independent arithmetic for the irrational magnitudes.
  CHECK(parse_info_unit("nat").bits_per_unit ==
        doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-15));
  CHECK(parse_info_unit("dB").bits_per_unit ==
        doctest::Approx(1.0 / (10.0 * std::log10(2.0))).epsilon(1e-15));
  CHECK(parse_info_unit("cent").bits_per_unit == 1.0 / 1200.0);
  CHECK(parse_info_unit("CDROM").bits_per_unit == 666000.0 * 1024.0 * 8.0);
  CHECK(parse_info_unit("CDROM").bits_per_unit == 5455872000.0);
  CHECK(parse_info_unit("byte").bits_per_unit /
            parse_info_unit("bit").bits_per_unit ==
        8.0);
}

TEST_CASE("custom bases") {
  CHECK(parse_info_unit("custom:4").bits_per_unit == 2.0);
  CHECK(parse_info_unit("custom:2.718281828459045").bits_per_unit ==
        doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(parse_info_unit("custom:1"), UnitError);
  CHECK_THROWS_AS(parse_info_unit("custom:0.5"), UnitError);
  CHECK_THROWS_AS(parse_info_unit("custom:x"), UnitError);
  CHECK_THROWS_AS(parse_info_unit("custom:"), UnitError);
  CHECK_THROWS_AS(parse_info_unit("furlong"), UnitError);
}

TEST_CASE("convert_info quoted equivalences") {
  InfoQuantity one_bit{1.0, unit_bit()};
  CHECK(convert_info(one_bit, parse_info_unit("byte")).value == 0.125);
  CHECK(convert_info(one_bit, parse_info_unit("dB")).value ==
        doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-15));
  InfoQuantity one_nat{1.0, parse_info_unit("nat")};
  CHECK(convert_info(one_nat, unit_bit()).value ==
        doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-15));

  InfoQuantity zero{0.0, unit_bit()};
  CHECK(convert_info(zero, parse_info_unit("nat")).value == 0.0);

  InfoQuantity infinite{std::numeric_limits<double>::infinity(), unit_bit()};
  CHECK(std::isinf(convert_info(infinite, parse_info_unit("CDROM")).value));
}

TEST_CASE("conversion round trip and linearity") {
  const double values[] = {0.0, 1e-6, 0.34567, 1.0, 7.25, 1e3, 1e6};
  for (const auto& u : unit_registry()) {
    for (const auto& v : unit_registry()) {
      for (double x : values) {
        InfoQuantity q{x, u};
        double back = convert_info(convert_info(q, v), u).value;
        CHECK(std::abs(back - x) <= 1e-12 * std::max(1.0, std::abs(x)));
      }
      // convert(a*x + b*y) == a*convert(x) + b*convert(y)
      double a = 3.5, b = -1.25, x = 0.875, y = 2.0;
      double lhs = convert_info({a * x + b * y, u}, v).value;
      double rhs = a * convert_info({x, u}, v).value +
                   b * convert_info({y, u}, v).value;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("parse_dimension grammar") {
  auto parsed = parse_dimension("mg C m^-2 y^-1");
  std::map<std::string, int> expected = {
      {"mass", 1}, {"C", 1}, {"length", -2}, {"time", -1}};
  CHECK(parsed.dimension.exponents() == expected);
  CHECK(parsed.scale == -3);

  auto empty = parse_dimension("");
  CHECK(empty.dimension.dimensionless());
  CHECK(empty.scale == 0);

  auto pico = parse_dimension("pg C");
  CHECK(pico.scale == -12);
  CHECK(pico.dimension.exponents().at("mass") == 1);
  CHECK(pico.dimension.exponents().at("C") == 1);

  // Compact exponents, caret optional.
  CHECK(parse_dimension("m-2").dimension ==
        parse_dimension("m^-2").dimension);

  // Prefix power multiplies the token exponent: (kg)^2 = 10^6 g^2.
  auto kg2 = parse_dimension("kg^2");
  CHECK(kg2.scale == 6);
  CHECK(kg2.dimension.exponents().at("mass") == 2);

  // Repeated symbols accumulate; zero exponents drop out entirely.
  CHECK(parse_dimension("g g").dimension.exponents().at("mass") == 2);
  CHECK(parse_dimension("g^0").dimension.dimensionless());
  CHECK(parse_dimension("g g^-1").dimension.dimensionless());

  // A prefix letter in front of a non-base symbol is just an annotation.
  CHECK(parse_dimension("pC").dimension.exponents().count("pC") == 1);
  CHECK(parse_dimension("pC").scale == 0);
}

TEST_CASE("parse_dimension errors carry the token position") {
  CHECK_THROWS_AS(parse_dimension("g^"), ParseError);
  CHECK_THROWS_AS(parse_dimension("g^x"), ParseError);
  CHECK_THROWS_AS(parse_dimension("^2"), ParseError);
  CHECK_THROWS_AS(parse_dimension("m^1.5"), ParseError);
  try {
    parse_dimension("g zz^ y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);  // "zz^" starts at column 3
    CHECK(e.line() == 0);
  }
}

TEST_CASE("canonical formatting") {
  auto d = parse_dimension("y^-1 C mg m^-2").dimension;
  CHECK(format_dimension(d) == "g C m^-2 y^-1");
  CHECK(format_dimension(Dimension{}) == "");

  // format then parse is a fixed point of the grammar
  auto reparsed = parse_dimension(format_dimension(d));
  CHECK(reparsed.dimension == d);
  CHECK(reparsed.scale == 0);
}

TEST_CASE("scale encoding picks the natural prefix") {
  auto d = parse_dimension("g C m^-2 y^-1").dimension;

  auto milli = format_dim_unit(d, -3);
  CHECK(milli.text == "mg C m^-2 y^-1");
  CHECK(milli.residual_scale == 0);

  auto pico = format_dim_unit(d, -12);
  CHECK(pico.text == "pg C m^-2 y^-1");
  CHECK(pico.residual_scale == 0);

  auto kilo = format_dim_unit(d, 3);
  CHECK(kilo.text == "kg C m^-2 y^-1");
  CHECK(kilo.residual_scale == 0);

  auto plain = format_dim_unit(d, 0);
  CHECK(plain.text == "g C m^-2 y^-1");
  CHECK(plain.residual_scale == 0);

  // Powers of ten the prefix grammar cannot express stay as residual.
  auto odd = format_dim_unit(d, -1);
  CHECK(odd.text == "g C m^-2 y^-1");
  CHECK(odd.residual_scale == -1);

  auto annotations_only = format_dim_unit(parse_dimension("C").dimension, 5);
  CHECK(annotations_only.residual_scale == 5);

  // Round trip through the parser for every prefix-reachable scale.
  for (int scale : {-12, -9, -6, -3, 0, 3}) {
    auto formatted = format_dim_unit(d, scale);
    REQUIRE(formatted.residual_scale == 0);
    auto back = parse_dimension(formatted.text);
    CHECK(back.dimension == d);
    CHECK(back.scale == scale);
  }
}

TEST_CASE("flow-information unit text") {
  auto d = parse_dimension("g C m^-2 y^-1").dimension;
  auto text = format_flow_info_unit(d, -3, unit_bit());
  CHECK(text.text == "mg C bit m^-2 y^-1");
  CHECK(text.residual_scale == 0);

  auto bare = format_flow_info_unit(Dimension{}, 0, parse_info_unit("nat"));
  CHECK(bare.text == "nat");
}

TEST_CASE("pow10i is exact in the working range") {
  CHECK(pow10i(0) == 1.0);
  CHECK(pow10i(3) == 1000.0);
  CHECK(pow10i(-3) == 1e-3);
  CHECK(pow10i(12) == 1e12);
  CHECK(pow10i(-12) == 1e-12);
  CHECK(pow10i(22) == 1e22);
}

TEST_CASE("unit expression classification") {
  auto info = parse_unit_expression("bit");
  CHECK(info.kind == UnitExpression::Kind::info);
  CHECK(info.unit.symbol == "bit");

  auto flow = parse_unit_expression("mg C m^-2 y^-1");
  CHECK(flow.kind == UnitExpression::Kind::flow);
  CHECK(flow.scale == -3);

  auto product = parse_unit_expression("mg C bit m^-2 y^-1");
  CHECK(product.kind == UnitExpression::Kind::flow_info);
  CHECK(product.unit.symbol == "bit");
  CHECK(product.scale == -3);
  CHECK(product.dimension == flow.dimension);

  auto custom = parse_unit_expression("g custom:4 y^-1");
  CHECK(custom.kind == UnitExpression::Kind::flow_info);
  CHECK(custom.unit.bits_per_unit == 2.0);

  CHECK_THROWS_AS(parse_unit_expression("bit nat"), ParseError);
  CHECK(describe(product) == "mg C bit m^-2 y^-1");
  CHECK(describe(parse_unit_expression("")) == "dimensionless");
}

TEST_CASE("convert_between on the ascendency figure") {
  auto from = parse_unit_expression("mg C bit m^-2 y^-1");
  const double a = 53.9;

  // dB: 1 bit = 10*log10(2) dB, dimension and scale carried over
  auto to_db = parse_unit_expression("dB");
  CHECK(convert_between(a, from, to_db) ==
        doctest::Approx(a * 10.0 * std::log10(2.0)).epsilon(1e-12));
  CHECK(describe(resolved_target(from, to_db)) == "mg C dB m^-2 y^-1");

  // byte: exact factor 8
  CHECK(convert_between(a, from, parse_unit_expression("byte")) ==
        a / 8.0);

  // full target strings rescale the decimal prefix too
  CHECK(convert_between(a, from, parse_unit_expression("g C cent m^-2 y^-1")) ==
        doctest::Approx(a * 1200.0 * 1e-3).epsilon(1e-12));
  CHECK(convert_between(a, from,
                        parse_unit_expression("pg C CDROM m^-2 y^-1")) ==
        doctest::Approx(a * 1e9 / 5455872000.0).epsilon(1e-12));
  CHECK(convert_between(a, from, parse_unit_expression("mg C nat m^-2 y^-1")) ==
        doctest::Approx(a * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("convert_between guards") {
  auto flow = parse_unit_expression("mg C m^-2 y^-1");
  auto product = parse_unit_expression("mg C bit m^-2 y^-1");
  auto other = parse_unit_expression("g m^-2");

  CHECK_THROWS_AS(convert_between(1.0, flow, product), DimensionError);
  CHECK_THROWS_AS(convert_between(1.0, product, flow), DimensionError);
  CHECK_THROWS_AS(convert_between(1.0, flow, other), DimensionError);
  CHECK_THROWS_AS(
      convert_between(1.0, parse_unit_expression("bit"), product),
      DimensionError);

  // the error text names both canonical forms
  try {
    convert_between(1.0, flow, product);
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    std::string what = e.what();
    CHECK(what.find("mg C m^-2 y^-1") != std::string::npos);
    CHECK(what.find("mg C bit m^-2 y^-1") != std::string::npos);
  }

  // plain decimal rescaling within one dimension is allowed
  CHECK(convert_between(1000.0, parse_unit_expression("g"),
                        parse_unit_expression("kg")) == 1.0);
}

TEST_CASE("checked_add aligns scales and units") {
  auto dim = parse_dimension("g C m^-2 y^-1").dimension;

  DimQuantity grams{1.0, 0, dim};
  DimQuantity kilos{1.0, 3, dim};
  CHECK(checked_add(grams, kilos).value == 1001.0);
  CHECK(checked_add(grams, kilos).scale == 0);

  DimQuantity zero{0.0, 0, dim};
  CHECK(checked_add(grams, zero).value == grams.value);

  FlowInfoQuantity a{53.9, unit_bit(), -3, dim};
  FlowInfoQuantity phi{121.3, unit_bit(), -3, dim};
  auto c = checked_add(a, phi);
  CHECK(c.value == doctest::Approx(175.2).epsilon(1e-12));
  CHECK(c.unit.symbol == "bit");

  // the same sum with the reserve restated in bytes
  FlowInfoQuantity phi_bytes{121.3 / 8.0, parse_info_unit("byte"), -3, dim};
  CHECK(checked_add(a, phi_bytes).value ==
        doctest::Approx(175.2).epsilon(1e-12));
}

TEST_CASE("checked_add refuses mixed kinds and dimensions") {
  auto dim = parse_dimension("g C m^-2 y^-1").dimension;
  auto other = parse_dimension("g m^-3").dimension;

  DimQuantity flow{102.6, -3, dim};
  DimQuantity mismatched{1.0, 0, other};
  CHECK_THROWS_AS(checked_add(flow, mismatched), DimensionError);

  FlowInfoQuantity product{53.9, unit_bit(), -3, dim};
  CHECK_THROWS_AS(checked_add(flow, product), DimensionError);
  CHECK_THROWS_AS(checked_add(product, flow), DimensionError);
  try {
    checked_add(flow, product);
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    std::string what = e.what();
    CHECK(what.find("g C m^-2 y^-1") != std::string::npos);
    CHECK(what.find("bit") != std::string::npos);
  }
}

TEST_CASE("flow_times_info") {
  auto dim = parse_dimension("g C m^-2 y^-1").dimension;
  DimQuantity total{102.6, -3, dim};
  InfoQuantity x{0.525, unit_bit()};

  auto a = flow_times_info(total, x);
  CHECK(a.value == doctest::Approx(102.6 * 0.525));
  CHECK(a.scale == -3);
  CHECK(a.dimension == dim);
  CHECK(a.unit.symbol == "bit");

  InfoQuantity infinite{std::numeric_limits<double>::infinity(), unit_bit()};
  CHECK_THROWS_AS(flow_times_info(total, infinite), DomainError);
}

}  // TEST_SUITE
