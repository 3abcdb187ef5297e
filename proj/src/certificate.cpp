#include "supercong/certificate.hpp"

#include <array>
#include <cctype>
#include <climits>
#include <fstream>
#include <sstream>

namespace supercong {

namespace {

struct Section {
  char label;
  std::size_t label_pos;
  std::size_t begin;  // first character after "X:"
  std::size_t end;
  int line;
  int column;
};

// Line and column of a character offset, 1-based.
std::pair<int, int> position(const std::string& text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// The text with everything outside [begin, end) blanked, newlines kept, so
// parse errors report positions in the whole file.
std::string isolate(const std::string& text, std::size_t begin, std::size_t end) {
  std::string out = text;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((i < begin || i >= end) && out[i] != '\n') out[i] = ' ';
  }
  return out;
}

BiPoly univariate_in_k(const std::string& text, const Section& s) {
  const BiPoly p = parse_polynomial(isolate(text, s.begin, s.end));
  if (p.is_zero()) throw ParseError(std::string(1, s.label) + " is zero", s.line, s.column);
  if (p.degree_n() > 0) {
    throw ParseError(std::string(1, s.label) + " must not depend on n", s.line, s.column);
  }
  return p;
}

bool identity_holds(const Certificate& c, long n, long k) {
  try {
    const Rational lhs = c.p_poly.eval(0, k) * eval(c.F, n, k - 1) -
                         c.q_poly.eval(0, k) * eval(c.F, n, k);
    const Rational rhs = eval(c.G, n + 1, k) - eval(c.G, n, k);
    return lhs == rhs;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::string Certificate::to_string() const {
  return "F: " + F.to_string() + "\nG: " + G.to_string() + "\np: " + p_poly.to_string() +
         "\nq: " + q_poly.to_string() + "\n";
}

Certificate parse_certificate(const std::string& input) {
  // Comments become blanks so positions are preserved.
  std::string text = input;
  bool comment = false;
  for (char& ch : text) {
    if (ch == '\n') {
      comment = false;
    } else if (ch == '#' || comment) {
      comment = true;
      ch = ' ';
    }
  }

  std::vector<Section> sections;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::size_t i = line_start;
    while (i < line_end && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i < line_end && std::string("FGpq").find(text[i]) != std::string::npos) {
      std::size_t j = i + 1;
      while (j < line_end && (text[j] == ' ' || text[j] == '\t')) ++j;
      if (j < line_end && text[j] == ':') {
        const auto [line, column] = position(text, i);
        if (!sections.empty()) sections.back().end = i;
        sections.push_back({text[i], i, j + 1, text.size(), line, column});
      }
    }
    line_start = line_end + 1;
  }

  // Anything before the first label must be blank.
  const std::size_t first = sections.empty() ? text.size() : sections.front().label_pos;
  for (std::size_t i = 0; i < first; ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      const auto [line, column] = position(text, i);
      throw ParseError("text outside a section (expected F:, G:, p: or q:)", line, column);
    }
  }

  std::array<const Section*, 4> found{};
  const std::string labels = "FGpq";
  for (const auto& s : sections) {
    const auto idx = labels.find(s.label);
    if (found[idx]) {
      throw ParseError(std::string("duplicate section ") + s.label + ":", s.line, s.column);
    }
    found[idx] = &s;
  }
  const auto end_pos = position(text, text.size());
  for (std::size_t i = 0; i < 4; ++i) {
    if (!found[i]) {
      throw ParseError(std::string("missing section ") + labels[i] + ":", end_pos.first,
                       end_pos.second);
    }
  }

  Certificate c;
  c.F = parse_term(isolate(text, found[0]->begin, found[0]->end));
  c.G = parse_term(isolate(text, found[1]->begin, found[1]->end));
  c.p_poly = univariate_in_k(text, *found[2]);
  c.q_poly = univariate_in_k(text, *found[3]);
  return c;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str());
}

Certificate series_certificate() {
  Certificate c;
  c.F = parse_term(kSeriesTermF);
  c.G = parse_term(kSeriesTermG);
  c.p_poly = BiPoly::linear(0, 4, -3);
  c.q_poly = BiPoly::linear(0, 4, -2);
  return c;
}

bool verify_certificate_symbolic(const Certificate& c) {
  const RationalFunction r1 = shift_ratio(c.F, 0, -1);
  const RationalFunction r2 = cross_ratio(c.G, c.F, 1, 0);
  const RationalFunction r3 = cross_ratio(c.G, c.F, 0, 0);
  const RationalFunction lhs = RationalFunction(c.p_poly) * r1 - RationalFunction(c.q_poly);
  const RationalFunction rhs = r2 - r3;
  return lhs.numerator() * rhs.denominator() == rhs.numerator() * lhs.denominator();
}

std::optional<std::pair<long, long>> first_grid_failure(const Certificate& c, long n_max,
                                                        Execution exec) {
  if (n_max < 0) return std::nullopt;
  if (exec == Execution::Serial) {
    for (long n = 0; n <= n_max; ++n) {
      for (long k = 0; k <= n; ++k) {
        if (!identity_holds(c, n, k)) return std::pair{n, k};
      }
    }
    return std::nullopt;
  }
  // Row-major index of the first failure; the minimum is schedule independent.
  long first = LONG_MAX;
#pragma omp parallel for schedule(dynamic) reduction(min : first)
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      if (!identity_holds(c, n, k)) {
        first = std::min(first, n * (n + 1) / 2 + k);
        break;
      }
    }
  }
  if (first == LONG_MAX) return std::nullopt;
  long n = 0;
  while ((n + 1) * (n + 2) / 2 <= first) ++n;
  return std::pair{n, first - n * (n + 1) / 2};
}

bool verify_certificate_numeric(const Certificate& c, long n_max, Execution exec) {
  return !first_grid_failure(c, n_max, exec).has_value();
}

std::pair<Rational, Rational> telescope_sum(const Certificate& c, long N, long k) {
  Rational prev = 0;
  Rational cur = 0;
  for (long n = 0; n <= N; ++n) {
    prev += eval(c.F, n, k - 1);
    cur += eval(c.F, n, k);
  }
  const Rational lhs = c.p_poly.eval(0, k) * prev - c.q_poly.eval(0, k) * cur;
  const Rational rhs = eval(c.G, N + 1, k) - eval(c.G, 0, k);
  return {lhs, rhs};
}

bool is_wz_pair(const Certificate& c) { return c.p_poly == c.q_poly.shifted(0, -1); }

}  // namespace supercong
