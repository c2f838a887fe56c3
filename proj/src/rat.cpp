#include "framegeo/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace framegeo {

Rat::Rat(long n, long d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "' (expected p or p/q with q > 0)");
  };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) fail();
  const std::string num(text.substr(0, pos));
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) fail();
    den = std::string(text.substr(den_begin));
  }
  mpz_class d(den);
  if (sgn(d) == 0) fail();
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace framegeo
