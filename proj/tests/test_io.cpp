#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "nlgames/builtins.hpp"
#include "nlgames/io.hpp"

using namespace nlg;

TEST_CASE("fraction strings") {
  CHECK(to_fraction_string(make_fraction(8, 9)) == "8/9");
  CHECK(to_fraction_string(make_fraction(0)) == "0/1");
  CHECK(to_fraction_string(make_fraction(8)) == "8/1");
  CHECK(to_fraction_string(make_fraction(2, -4)) == "-1/2");
  CHECK(parse_fraction("8/9") == make_fraction(8, 9));
  CHECK(parse_fraction("-3/4") == make_fraction(-3, 4));
  CHECK(parse_fraction("6/8") == make_fraction(3, 4));
  CHECK(parse_fraction("5") == 5);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
}

TEST_CASE("game documents round-trip") {
  const GameRelation chsh = chsh_game();
  const std::string canonical = serialize_game(chsh);
  CHECK(parse_game(canonical) == chsh);
  CHECK(serialize_game(parse_game(canonical)) == canonical);

  const std::string messy =
      "# scrambled but equivalent\n"
      "game v1\n"
      "inputs 2 2\n"
      "outputs 2 2\n\n"
      "win 1 1 1 0\n"
      "win 0 0 0 0   # duplicate follows\n"
      "win 0 0 0 0\n"
      "win 0 0 1 1\n"
      "win 0 1 0 0\n"
      "win 0 1 1 1\n"
      "win 1 0 0 0\n"
      "win 1 0 1 1\n"
      "win 1 1 0 1\n"
      "end\n";
  CHECK(parse_game(messy) == chsh);
  CHECK(serialize_game(parse_game(messy)) == canonical);
}

TEST_CASE("game parse errors carry positions") {
  const auto check_error = [](const std::string& text, int line, int column) {
    try {
      parse_game(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  check_error("", 1, 1);
  check_error("game v2\ninputs 1 1\noutputs 1 1\nend\n", 1, 1);
  check_error("game v1\noutputs 1 1\ninputs 1 1\nend\n", 2, 1);
  check_error("game v1\ninputs 1 1\noutputs 1 x\nend\n", 3, 11);
  check_error("game v1\ninputs 1 1\noutputs 2 2\nwin 0 0 2 0\nend\n", 4, 9);
  check_error("game v1\ninputs 1 1\noutputs 2 2\nwin 0 0 0 0\n", 4, 1);
  check_error("game v1\ninputs 1 1\noutputs 2 2\nend\nwin 0 0 0 0\n", 5, 1);
  check_error("game v1\ninputs 0 1\noutputs 2 2\nend\n", 1, 1);
}

TEST_CASE("expression documents round-trip") {
  const BellExpression expression = magic_square_inequality(MsqInequalityForm::kRestricted4);
  const std::string canonical = serialize_expression(expression);
  const BellExpression reparsed = parse_expression(canonical);
  CHECK(reparsed.params == expression.params);
  CHECK(reparsed.local_bound == expression.local_bound);
  CHECK(reparsed.coefficients == expression.coefficients);
  CHECK(serialize_expression(reparsed) == canonical);

  const std::string with_fractions =
      "bell v1\n"
      "inputs 1 1\n"
      "outputs 2 2\n"
      "bound 3/2\n"
      "coeff 0 0 0 0 1/2\n"
      "coeff 0 0 1 1 -2/6\n"
      "end\n";
  const BellExpression parsed = parse_expression(with_fractions);
  CHECK(parsed.coefficient(0, 0, 1, 1) == make_fraction(-1, 3));
  CHECK(serialize_expression(parsed).find("-1/3") != std::string::npos);
}

TEST_CASE("expression parse errors") {
  CHECK_THROWS_AS(parse_expression("bell v1\ninputs 1 1\noutputs 2 2\nend\n"), ParseError);
  CHECK_THROWS_AS(
      parse_expression("bell v1\ninputs 1 1\noutputs 2 2\nbound 1/0\nend\n"), ParseError);
  CHECK_THROWS_AS(
      parse_expression("bell v1\ninputs 1 1\noutputs 2 2\nbound 1\ncoeff 0 0 0 5 1\nend\n"),
      ParseError);
}

TEST_CASE("quantum strategy export lists amplitudes and projectors") {
  const auto setup = builtin_quantum("chsh");
  REQUIRE(setup.has_value());
  const std::string text = serialize_quantum_strategy(setup->strategy);
  CHECK(text.find("quantum-strategy v1\n") == 0);
  CHECK(text.find("dims 2 2") != std::string::npos);
  CHECK(text.find("amp 0 0.7071067811865") != std::string::npos);
  CHECK(text.find("measurement alice 0 outcomes 2") != std::string::npos);
  CHECK(text.find("measurement bob 1 outcomes 2") != std::string::npos);
  CHECK(text.rfind("end\n") == text.size() - 4);
}

TEST_CASE("matrix export is one row per line") {
  const std::vector<std::vector<BigInt>> matrix{{BigInt(1), BigInt(0)},
                                                {BigInt(-3), BigInt(42)}};
  CHECK(matrix_to_text(matrix) == "1 0\n-3 42\n");
}

TEST_CASE("report documents are deterministic apart from elapsed time") {
  ReportBuilder a("classical-value");
  a.add_input("game", "chsh");
  a.add_result("value", "3/4");
  ReportBuilder b("classical-value");
  b.add_input("game", "chsh");
  b.add_result("value", "3/4");
  CHECK(a.document(5) != a.document(6));
  CHECK(a.document(7) == b.document(7));
  CHECK(a.plain() == "result value 3/4\n");

  ReportBuilder checks("reproduce");
  checks.add_check("classical-value", "8/9", "8/9", true);
  checks.add_check("rank", "99", "98", false);
  CHECK_FALSE(checks.all_checks_passed());
  CHECK(checks.failed_checks() == 1);
  CHECK(checks.document(0).find("check rank expected 99 actual 98 fail") != std::string::npos);
}

TEST_CASE("doubles render at seventeen significant digits") {
  CHECK(format_double(0.5) == "0.5");
  // 17 significant digits are enough to reproduce any double exactly.
  for (double value : {1.0 / 3.0, (2.0 + std::sqrt(2.0)) / 4.0, 2.0 / 9.0, 1e-300, -4.5}) {
    CHECK(std::stod(format_double(value)) == value);
  }
}
