#include "g5/rational.hpp"

#include <stdexcept>

namespace g5 {

std::string to_string(const Q& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Q parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Q(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int p(s.substr(0, slash));
    boost::multiprecision::cpp_int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Q(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

}  // namespace g5
