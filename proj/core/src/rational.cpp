#include "rigidity/rational.hpp"

#include "rigidity/error.hpp"

#include <cctype>

namespace rigidity {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::InvalidMonodromy: return "invalid monodromy";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Schema: return "schema violation";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::NonRealizable: return "non-realizable";
    case ErrorKind::HypothesisViolated: return "theorem hypothesis violated";
    case ErrorKind::Generation: return "generation error";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown error";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  if (!is_integer_literal(num, true) ||
      (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\"");
  }

  // mpz does not accept a leading '+'.
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace rigidity
