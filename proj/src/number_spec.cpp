#include "cfladder/number_spec.hpp"

#include <utility>
#include <vector>

namespace cfl {

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw spec_parse_error("bad number spec '" + text + "': " + why);
}

Integer parse_integer(const std::string& text, const std::string& field) {
  try {
    return Integer(field);
  } catch (const std::invalid_argument&) {
    bad(text, "'" + field + "' is not an integer");
  }
}

// integer or a/b
Rational parse_endpoint(const std::string& text, const std::string& field) {
  const auto slash = field.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, field));
  const Integer num = parse_integer(text, field.substr(0, slash));
  const Integer den = parse_integer(text, field.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator in '" + field + "'");
  return make_frac(num, den);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) break;
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string endpoint_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

AlgebraicNumber parse_number_spec(const std::string& text) {
  if (text == "golden") {
    return AlgebraicNumber::make_root(
        IntPolynomial({Integer(1), Integer(-1), Integer(-1)}), Rational(1),
        Rational(2));
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad(text, "expected prefix:payload");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);

  if (kind == "rat") {
    const auto slash = rest.find('/');
    if (slash == std::string::npos) {
      return AlgebraicNumber::make_rational(parse_integer(text, rest),
                                            Integer(1));
    }
    return AlgebraicNumber::make_rational(
        parse_integer(text, rest.substr(0, slash)),
        parse_integer(text, rest.substr(slash + 1)));
  }
  if (kind == "sqrt") {
    return AlgebraicNumber::nth_root(parse_integer(text, rest), 2);
  }
  if (kind == "cbrt") {
    return AlgebraicNumber::nth_root(parse_integer(text, rest), 3);
  }
  if (kind == "root") {
    const auto parts = split(rest, ':');
    if (parts.size() != 3) bad(text, "expected root:coeffs:lo:hi");
    const auto coeff_fields = split(parts[0], ',');
    std::vector<Integer> coeffs;
    coeffs.reserve(coeff_fields.size());
    for (const auto& f : coeff_fields) coeffs.push_back(parse_integer(text, f));
    return AlgebraicNumber::make_root(IntPolynomial(std::move(coeffs)),
                                      parse_endpoint(text, parts[1]),
                                      parse_endpoint(text, parts[2]));
  }
  bad(text, "unknown prefix '" + kind + "'");
}

std::string canonical_spec(const AlgebraicNumber& x) {
  if (x.is_rational()) {
    const Rational& q = x.rational();
    return "rat:" + q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  const auto& rt = x.root();
  std::string out = "root:";
  const auto& coeffs = rt.poly.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ',';
    out += coeffs[i].get_str();
  }
  out += ':';
  out += endpoint_text(rt.interval.lo);
  out += ':';
  out += endpoint_text(rt.interval.hi);
  return out;
}

}  // namespace cfl
