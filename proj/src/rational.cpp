#include "syzstab/rational.hpp"

#include <cctype>

namespace syzstab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat x(n, d);
  x.canonicalize();
  return negative ? Rat(-x) : x;
}

std::string to_string(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_fraction_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::int64_t to_int64(const Rat& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw std::overflow_error("rational " + to_string(x) + " is not a machine integer");
  return x.get_num().get_si();
}

BigInt binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace syzstab
