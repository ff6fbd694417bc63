#include "rankmech/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rankmech {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string render_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

std::string render_decimal(const Rational& value, int digits) {
  bool negative = value < 0;
  Rational mag = negative ? Rational(-value) : value;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up on the magnitude
  Rational doubled = mag * scale * 2 + 1;
  Int scaled = numerator(doubled) / (denominator(doubled) * 2);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += ".";
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Int psi(long lo, long hi) {
  if (hi < lo - 1) {
    throw std::invalid_argument("psi: upper bound below empty-product range");
  }
  Int result = 1;
  for (long v = lo; v <= hi; ++v) result *= v;
  return result;
}

Int alternating_binomial_prefix(unsigned n, unsigned r) {
  if (r > n) {
    throw std::invalid_argument("alternating_binomial_prefix: r > n");
  }
  Int sum = 0;
  for (unsigned j = 0; j <= r; ++j) {
    Int term = binomial(n, j);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace rankmech
