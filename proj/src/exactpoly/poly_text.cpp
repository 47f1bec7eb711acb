// Polynomial text syntax:
//   poly  := [sign] term { sign term }
//   term  := coeff [ ['*'] mono ] | mono
//   coeff := digits [ '/' digits ]
//   mono  := name ['^' digits] { '*' name ['^' digits] }
// Whitespace is ignored everywhere.
#include <cctype>

#include "cstar/errors.hpp"
#include "cstar/polynomial.hpp"

namespace cstar {
namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    original_ = std::string(text);
  }

  Polynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + original_ + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (digit(peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Term term() {
    const Field f = ring_->field();
    Scalar coeff(f, 1);
    bool have_coeff = false;
    if (digit(peek())) {
      mpz_class num = digits();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      try {
        coeff = Scalar(f, num, den);
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (!ident_start(peek())) fail("expected variable after '*'");
      }
    }
    std::vector<int> exps(ring_->nvars(), 0);
    if (ident_start(peek())) {
      factor(exps);
      while (peek() == '*') {
        ++pos_;
        factor(exps);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    return Term{ring_->monomial(exps), coeff};
  }

  void factor(std::vector<int>& exps) {
    if (!ident_start(peek())) fail("expected variable");
    const std::size_t start = pos_;
    while (ident_char(peek())) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    const auto& names = ring_->names();
    std::size_t idx = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) idx = i;
    if (idx == names.size()) fail("unknown variable '" + name + "'");
    long e = 1;
    if (peek() == '^') {
      ++pos_;
      const mpz_class z = digits();
      if (z > 0xFFFF) fail("exponent too large");
      e = z.get_si();
    }
    exps[idx] += static_cast<int>(e);
    if (exps[idx] > 0xFFFF) fail("exponent too large");
  }

  const RingPtr& ring_;
  std::string s_;
  std::string original_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring,
                                              std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_polynomial(ring, text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> scan_variable_names(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      const std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string n(text.substr(start, i - start));
      bool seen = false;
      for (const auto& m : names) seen = seen || m == n;
      if (!seen) names.push_back(std::move(n));
    } else {
      ++i;
    }
  }
  return names;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool neg = t.coeff.is_negative();
    if (k == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string abs = t.coeff.abs_string();
    if (t.mono.is_one()) {
      out += abs;
    } else {
      if (abs != "1") out += abs + "*";
      out += ring_->monomial_string(t.mono);
    }
  }
  return out;
}

}  // namespace cstar
