#include "nlgames/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace nlg {

namespace {

struct Token {
  int column = 0;  // 1-based
  std::string text;
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int line_number = 0;
  std::size_t position = 0;
  while (position <= text.size()) {
    const std::size_t newline = text.find('\n', position);
    std::string_view raw = text.substr(
        position, newline == std::string_view::npos ? std::string_view::npos : newline - position);
    ++line_number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{line_number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(Token{static_cast<int>(start) + 1,
                                  std::string(raw.substr(start, i - start))});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (newline == std::string_view::npos) break;
    position = newline + 1;
  }
  return lines;
}

int parse_int(const Line& line, const Token& token, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
    throw ParseError(line.number, token.column,
                     std::string(what) + " must be an integer, got '" + token.text + "'");
  }
  return value;
}

Rational parse_rational_token(const Line& line, const Token& token, const char* what) {
  try {
    return parse_fraction(token.text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line.number, token.column,
                     std::string(what) + " must be a fraction, got '" + token.text + "'");
  }
}

void expect_token_count(const Line& line, std::size_t count, const char* form) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, line.tokens.front().column,
                     std::string("expected '") + form + "'");
  }
}

struct HeaderedDocument {
  int m_a = 0, m_b = 0, n_a = 0, n_b = 0;
  std::vector<Line> body;
};

// Shared layout of game and expression documents: a "<kind> v1" header,
// then inputs and outputs lines, then kind-specific body lines, then "end".
HeaderedDocument parse_header(std::string_view text, const std::string& kind) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document, expected '" + kind + " v1'");
  std::size_t at = 0;
  const auto& header = lines[at];
  if (header.tokens.size() != 2 || header.tokens[0].text != kind ||
      header.tokens[1].text != "v1") {
    throw ParseError(header.number, header.tokens[0].column,
                     "expected header '" + kind + " v1'");
  }
  ++at;
  HeaderedDocument doc;
  if (at >= lines.size() || lines[at].tokens[0].text != "inputs") {
    const auto& line = at < lines.size() ? lines[at] : header;
    throw ParseError(line.number, line.tokens[0].column, "expected 'inputs M_A M_B'");
  }
  expect_token_count(lines[at], 3, "inputs M_A M_B");
  doc.m_a = parse_int(lines[at], lines[at].tokens[1], "m_A");
  doc.m_b = parse_int(lines[at], lines[at].tokens[2], "m_B");
  ++at;
  if (at >= lines.size() || lines[at].tokens[0].text != "outputs") {
    const auto& line = at < lines.size() ? lines[at] : header;
    throw ParseError(line.number, line.tokens[0].column, "expected 'outputs N_A N_B'");
  }
  expect_token_count(lines[at], 3, "outputs N_A N_B");
  doc.n_a = parse_int(lines[at], lines[at].tokens[1], "n_A");
  doc.n_b = parse_int(lines[at], lines[at].tokens[2], "n_B");
  ++at;
  bool ended = false;
  for (; at < lines.size(); ++at) {
    if (lines[at].tokens[0].text == "end") {
      expect_token_count(lines[at], 1, "end");
      ended = true;
      ++at;
      break;
    }
    doc.body.push_back(lines[at]);
  }
  if (!ended) {
    const auto& last = lines.back();
    throw ParseError(last.number, last.tokens[0].column, "missing 'end'");
  }
  if (at != lines.size()) {
    throw ParseError(lines[at].number, lines[at].tokens[0].column, "content after 'end'");
  }
  return doc;
}

void check_range(const Line& line, const Token& token, int value, int bound, const char* what) {
  if (value < 0 || value >= bound) {
    throw ParseError(line.number, token.column,
                     std::string(what) + " " + std::to_string(value) + " out of range [0, " +
                         std::to_string(bound) + ")");
  }
}

}  // namespace

GameRelation parse_game(std::string_view text) {
  const HeaderedDocument doc = parse_header(text, "game");
  if (doc.m_a < 1 || doc.m_b < 1 || doc.n_a < 1 || doc.n_b < 1) {
    throw ParseError(1, 1, "input and output counts must be at least 1");
  }
  std::vector<std::array<int, 4>> wins;
  for (const Line& line : doc.body) {
    if (line.tokens[0].text != "win") {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected 'win X Y A B' or 'end', got '" + line.tokens[0].text + "'");
    }
    expect_token_count(line, 5, "win X Y A B");
    const int x = parse_int(line, line.tokens[1], "x");
    const int y = parse_int(line, line.tokens[2], "y");
    const int a = parse_int(line, line.tokens[3], "a");
    const int b = parse_int(line, line.tokens[4], "b");
    check_range(line, line.tokens[1], x, doc.m_a, "x");
    check_range(line, line.tokens[2], y, doc.m_b, "y");
    check_range(line, line.tokens[3], a, doc.n_a, "a");
    check_range(line, line.tokens[4], b, doc.n_b, "b");
    wins.push_back({x, y, a, b});
  }
  return GameRelation::from_win_list(doc.m_a, doc.m_b, doc.n_a, doc.n_b, wins);
}

std::string serialize_game(const GameRelation& game) {
  std::ostringstream out;
  out << "game v1\n";
  out << "inputs " << game.m_a() << " " << game.m_b() << "\n";
  out << "outputs " << game.n_a() << " " << game.n_b() << "\n";
  for (int x = 0; x < game.m_a(); ++x)
    for (int y = 0; y < game.m_b(); ++y)
      for (int a = 0; a < game.n_a(); ++a)
        for (int b = 0; b < game.n_b(); ++b)
          if (game.wins(x, y, a, b))
            out << "win " << x << " " << y << " " << a << " " << b << "\n";
  out << "end\n";
  return out.str();
}

BellExpression parse_expression(std::string_view text) {
  const HeaderedDocument doc = parse_header(text, "bell");
  if (doc.m_a < 1 || doc.m_b < 1 || doc.n_a < 1 || doc.n_b < 1) {
    throw ParseError(1, 1, "input and output counts must be at least 1");
  }
  BellExpression expression =
      zero_expression(PolytopeParams{doc.m_a, doc.m_b, doc.n_a, doc.n_b});
  bool have_bound = false;
  for (const Line& line : doc.body) {
    if (line.tokens[0].text == "bound") {
      expect_token_count(line, 2, "bound P/Q");
      expression.local_bound = parse_rational_token(line, line.tokens[1], "bound");
      have_bound = true;
      continue;
    }
    if (line.tokens[0].text != "coeff") {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected 'bound', 'coeff' or 'end', got '" + line.tokens[0].text + "'");
    }
    expect_token_count(line, 6, "coeff X Y A B P/Q");
    const int x = parse_int(line, line.tokens[1], "x");
    const int y = parse_int(line, line.tokens[2], "y");
    const int a = parse_int(line, line.tokens[3], "a");
    const int b = parse_int(line, line.tokens[4], "b");
    check_range(line, line.tokens[1], x, doc.m_a, "x");
    check_range(line, line.tokens[2], y, doc.m_b, "y");
    check_range(line, line.tokens[3], a, doc.n_a, "a");
    check_range(line, line.tokens[4], b, doc.n_b, "b");
    expression.coefficient(x, y, a, b) = parse_rational_token(line, line.tokens[5], "coefficient");
  }
  if (!have_bound) throw ParseError(1, 1, "expression document has no 'bound' line");
  return expression;
}

std::string serialize_expression(const BellExpression& expression) {
  std::ostringstream out;
  out << "bell v1\n";
  out << "inputs " << expression.params.m_a << " " << expression.params.m_b << "\n";
  out << "outputs " << expression.params.n_a << " " << expression.params.n_b << "\n";
  out << "bound " << to_fraction_string(expression.local_bound) << "\n";
  for (int x = 0; x < expression.params.m_a; ++x)
    for (int y = 0; y < expression.params.m_b; ++y)
      for (int a = 0; a < expression.params.n_a; ++a)
        for (int b = 0; b < expression.params.n_b; ++b) {
          const Rational& value = expression.coefficient(x, y, a, b);
          if (value != 0) {
            out << "coeff " << x << " " << y << " " << a << " " << b << " "
                << to_fraction_string(value) << "\n";
          }
        }
  out << "end\n";
  return out.str();
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

void write_matrix_rows(std::ostringstream& out, const CMatrix& matrix) {
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    out << "row";
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      out << " " << format_double(matrix(r, c).real()) << " "
          << format_double(matrix(r, c).imag());
    }
    out << "\n";
  }
}

void write_measurements(std::ostringstream& out, const char* party,
                        const std::vector<ProjectiveMeasurement>& measurements) {
  for (std::size_t input = 0; input < measurements.size(); ++input) {
    out << "measurement " << party << " " << input << " outcomes "
        << measurements[input].outcomes().size() << "\n";
    for (const auto& outcome : measurements[input].outcomes()) {
      out << "outcome " << outcome.label << "\n";
      write_matrix_rows(out, outcome.projector);
    }
  }
}

}  // namespace

std::string serialize_quantum_strategy(const QuantumStrategy& strategy) {
  std::ostringstream out;
  out << "quantum-strategy v1\n";
  out << "dims " << strategy.state.dim_a << " " << strategy.state.dim_b << "\n";
  for (Eigen::Index i = 0; i < strategy.state.amplitudes.size(); ++i) {
    out << "amp " << i << " " << format_double(strategy.state.amplitudes(i).real()) << " "
        << format_double(strategy.state.amplitudes(i).imag()) << "\n";
  }
  write_measurements(out, "alice", strategy.alice);
  write_measurements(out, "bob", strategy.bob);
  out << "end\n";
  return out.str();
}

std::string matrix_to_text(const std::vector<std::vector<BigInt>>& matrix) {
  std::ostringstream out;
  for (const auto& row : matrix) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << " ";
      out << row[i].get_str();
    }
    out << "\n";
  }
  return out.str();
}

ReportBuilder::ReportBuilder(std::string command) : command_(std::move(command)) {}

void ReportBuilder::add_input(std::string_view key, std::string_view value) {
  input_lines_.push_back("input " + std::string(key) + " " + std::string(value));
}

void ReportBuilder::add_result(std::string_view key, std::string_view value) {
  result_lines_.push_back("result " + std::string(key) + " " + std::string(value));
}

void ReportBuilder::add_check(std::string_view name, std::string_view expected,
                              std::string_view actual, bool passed) {
  result_lines_.push_back("check " + std::string(name) + " expected " + std::string(expected) +
                          " actual " + std::string(actual) + " " + (passed ? "pass" : "fail"));
  if (!passed) ++failed_checks_;
}

std::string ReportBuilder::document(long elapsed_ms) const {
  std::ostringstream out;
  out << "report v1\n";
  out << "command " << command_ << "\n";
  out << "version " << kArtifactVersion << "\n";
  for (const auto& line : input_lines_) out << line << "\n";
  for (const auto& line : result_lines_) out << line << "\n";
  out << "elapsed-ms " << elapsed_ms << "\n";
  out << "end\n";
  return out.str();
}

std::string ReportBuilder::plain() const {
  std::ostringstream out;
  for (const auto& line : result_lines_) out << line << "\n";
  return out.str();
}

}  // namespace nlg
