#include "leglab/geometry.hpp"

#include <regex>
#include <stdexcept>

namespace leglab {

namespace {

int half(const Vec& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; }

// +1 / -1 for a ccw / cw pass of the positive x axis when turning from a to b
// the short way.
int wrap_step(const Vec& a, const Vec& b) {
  const int c = sgn(cross(a, b));
  if (c > 0) return angle_less(b, a) ? 1 : 0;
  if (c < 0) return angle_less(a, b) ? -1 : 0;
  if (sgn(dot(a, b)) < 0) throw std::invalid_argument("direction reverses");
  return 0;
}

}  // namespace

bool angle_less(const Vec& a, const Vec& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

std::int64_t open_turning_wraps(const std::vector<Vec>& dirs) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) w += wrap_step(dirs[i], dirs[i + 1]);
  return w;
}

std::int64_t closed_turning(const std::vector<Vec>& dirs) {
  if (dirs.empty()) return 0;
  return open_turning_wraps(dirs) + wrap_step(dirs.back(), dirs.front());
}

mpq_class signed_area(const std::vector<Point>& poly) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    s += a.q * b.p - b.q * a.p;
  }
  return s / 2;
}

std::optional<mpq_class> parse_rational(const std::string& s) {
  static const std::regex fraction(R"([+-]?\d+(/\d+)?)");
  static const std::regex decimal(R"(([+-]?)(\d*)\.(\d+))");
  std::smatch m;
  if (std::regex_match(s, fraction)) {
    std::string t = s[0] == '+' ? s.substr(1) : s;
    mpq_class v;
    if (v.set_str(t, 10) != 0) return std::nullopt;
    if (t.find('/') != std::string::npos && v.get_den() == 0) return std::nullopt;
    if (auto slash = t.find('/'); slash != std::string::npos && t.substr(slash + 1).find_first_not_of('0') == std::string::npos)
      return std::nullopt;
    v.canonicalize();
    return v;
  }
  if (std::regex_match(s, m, decimal)) {
    const std::string digits = (m[2].str().empty() ? "0" : m[2].str()) + m[3].str();
    mpq_class v(mpz_class(digits, 10), mpz_class("1" + std::string(m[3].length(), '0'), 10));
    v.canonicalize();
    if (m[1] == "-") v = -v;
    return v;
  }
  return std::nullopt;
}

}  // namespace leglab
