#include "leglab/dga.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "leglab/errors.hpp"

namespace leglab {

GradingGroup::GradingGroup(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 0) throw std::invalid_argument("grading modulus must be nonnegative");
}

Degree GradingGroup::reduce(Degree d) const {
  if (modulus_ == 0) return d;
  Degree r = d % modulus_;
  return r < 0 ? r + modulus_ : r;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Polynomial::Polynomial(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), canonical_less);
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms_.push_back(std::move(terms[i]));
    i = j;
  }
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, canonical_less);
}

bool Polynomial::involves(int generator) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Monomial& m) {
    return std::find(m.begin(), m.end(), generator) != m.end();
  });
}

void Polynomial::add(const Monomial& m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, canonical_less);
  if (it != terms_.end() && *it == m)
    terms_.erase(it);
  else
    terms_.insert(it, m);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged), canonical_less);
  terms_ = std::move(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Monomial> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial w = x;
      w.insert(w.end(), y.begin(), y.end());
      out.push_back(std::move(w));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::component(std::size_t k) const {
  Polynomial out;
  for (const auto& m : terms_)
    if (m.size() == k) out.terms_.push_back(m);
  return out;
}

Degree DGA::degree_of(const Monomial& m) const {
  Degree total = 0;
  for (int g : m) total += degrees.at(static_cast<std::size_t>(g));
  return grading.reduce(total);
}

int DGA::add_generator(std::string name, Degree degree, Polynomial diff) {
  names.push_back(std::move(name));
  degrees.push_back(grading.reduce(degree));
  diffs.push_back(std::move(diff));
  return static_cast<int>(names.size()) - 1;
}

std::optional<int> DGA::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

std::string to_string(const DGA& d, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : p.terms()) {
    if (!first) os << " + ";
    first = false;
    if (m.empty()) {
      os << "1";
      continue;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) os << ' ';
      auto g = static_cast<std::size_t>(m[k]);
      if (g < d.names.size())
        os << d.names[g];
      else
        os << '#' << m[k];
    }
  }
  return os.str();
}

namespace {

bool in_range(const DGA& d, const Polynomial& p) {
  const int n = static_cast<int>(d.size());
  for (const auto& m : p.terms())
    for (int g : m)
      if (g < 0 || g >= n) return false;
  return true;
}

void require_in_range(const DGA& d, const Polynomial& p) {
  if (!in_range(d, p)) throw std::out_of_range("polynomial uses a generator index out of range");
}

}  // namespace

ValidationReport validate_dga(const DGA& d) {
  ValidationReport report;
  const int n = static_cast<int>(d.size());
  bool structurally_sound = d.degrees.size() == d.size() && d.diffs.size() == d.size();
  if (!structurally_sound) {
    report.violations.push_back({Violation::Kind::IndexOutOfRange, -1,
                                 "generator, degree and differential lists differ in length", {}});
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (!in_range(d, d.diffs[i])) {
      report.violations.push_back({Violation::Kind::IndexOutOfRange, i,
                                   "differential of " + d.names[i] + " uses an unknown generator",
                                   {}});
      structurally_sound = false;
    }
  }
  if (!structurally_sound) return report;

  for (int i = 0; i < n; ++i) {
    const Degree want = d.grading.reduce(d.degrees[i] - 1);
    Polynomial bad;
    for (const auto& m : d.diffs[i].terms())
      if (d.degree_of(m) != want) bad.add(m);
    if (!bad.is_zero()) {
      report.violations.push_back({Violation::Kind::NotHomogeneous, i,
                                   "d(" + d.names[i] + ") has terms not of degree " +
                                       std::to_string(want) + ": " + to_string(d, bad),
                                   bad});
    }
  }
  for (int i = 0; i < n; ++i) {
    Polynomial dd = apply_differential(d, d.diffs[i]);
    if (!dd.is_zero()) {
      report.violations.push_back({Violation::Kind::DifferentialSquare, i,
                                   "d^2(" + d.names[i] + ") = " + to_string(d, dd), dd});
    }
  }
  return report;
}

Polynomial apply_differential(const DGA& d, const Polynomial& p) {
  require_in_range(d, p);
  std::vector<Monomial> out;
  for (const auto& w : p.terms()) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      for (const auto& t : d.diffs[static_cast<std::size_t>(w[j])].terms()) {
        Monomial x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
        x.insert(x.end(), t.begin(), t.end());
        x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
        out.push_back(std::move(x));
      }
    }
  }
  return Polynomial(std::move(out));
}

Polynomial substitute(const Polynomial& p, std::span<const std::optional<Polynomial>> images) {
  std::vector<Monomial> out;
  for (const auto& w : p.terms()) {
    // Expand the product of images letter by letter.
    std::vector<Monomial> partial{Monomial{}};
    for (int g : w) {
      const auto gi = static_cast<std::size_t>(g);
      if (gi >= images.size() || !images[gi]) {
        for (auto& m : partial) m.push_back(g);
        continue;
      }
      std::vector<Monomial> next;
      next.reserve(partial.size() * images[gi]->terms().size());
      for (const auto& m : partial) {
        for (const auto& t : images[gi]->terms()) {
          Monomial x = m;
          x.insert(x.end(), t.begin(), t.end());
          next.push_back(std::move(x));
        }
      }
      partial = Polynomial(std::move(next)).terms();
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return Polynomial(std::move(out));
}

namespace {

std::vector<std::optional<Polynomial>> shift_images(const DGA& d, const ShiftAutomorphism& g) {
  if (g.shifts.size() != d.size())
    throw std::invalid_argument("shift automorphism has the wrong number of generators");
  std::vector<std::optional<Polynomial>> images(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!g.shifts[i]) continue;
    if (d.degrees[i] != 0)
      throw std::invalid_argument("shift on generator " + d.names[i] + " of nonzero degree");
    images[i] = Polynomial::generator(static_cast<int>(i)) + Polynomial::one();
  }
  return images;
}

}  // namespace

DGA conjugate(const DGA& d, const ShiftAutomorphism& g) {
  const auto images = shift_images(d, g);
  DGA out = d;
  // g(a_i) - a_i is a constant, so d(g(a_i)) = d(a_i); g is its own inverse.
  for (std::size_t i = 0; i < d.size(); ++i) out.diffs[i] = substitute(d.diffs[i], images);
  return out;
}

std::vector<ShiftAutomorphism> find_augmentation_shifts(const DGA& d, int max_degree_zero) {
  std::vector<int> zero;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.degrees[i] == 0) zero.push_back(static_cast<int>(i));
  if (static_cast<int>(zero.size()) > max_degree_zero) {
    throw CapExceeded(std::to_string(zero.size()) + " degree-0 generators exceed the cap of " +
                      std::to_string(max_degree_zero));
  }
  std::vector<ShiftAutomorphism> found;
  const std::uint64_t total = std::uint64_t{1} << zero.size();
  std::vector<bool> c(d.size(), false);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < zero.size(); ++k) c[static_cast<std::size_t>(zero[k])] = (mask >> k) & 1U;
    // The constant term of g(d a_i) is the sum over monomials of the product
    // of the shifts of their letters.
    bool all_zero = true;
    for (std::size_t i = 0; i < d.size() && all_zero; ++i) {
      bool constant = false;
      for (const auto& m : d.diffs[i].terms()) {
        bool term = true;
        for (int g : m) {
          if (!c[static_cast<std::size_t>(g)]) {
            term = false;
            break;
          }
        }
        constant ^= term;
      }
      all_zero = !constant;
    }
    if (all_zero) found.push_back(ShiftAutomorphism{c});
  }
  return found;
}

PoincarePolynomial::PoincarePolynomial(GradingGroup grading, std::map<Degree, int> coeffs)
    : grading_(grading) {
  for (auto [deg, c] : coeffs) {
    if (c < 0) throw std::invalid_argument("negative Poincare coefficient");
    if (c != 0) coeffs_[grading_.reduce(deg)] += c;
  }
}

int PoincarePolynomial::coefficient(Degree d) const {
  auto it = coeffs_.find(grading_.reduce(d));
  return it == coeffs_.end() ? 0 : it->second;
}

std::optional<std::int64_t> PoincarePolynomial::at_minus_one() const {
  if (grading_.modulus() % 2 == 1) return std::nullopt;
  std::int64_t total = 0;
  for (auto [deg, c] : coeffs_) total += (deg % 2 == 0) ? c : -c;
  return total;
}

std::int64_t PoincarePolynomial::at_one() const {
  std::int64_t total = 0;
  for (const auto& entry : coeffs_) total += entry.second;
  return total;
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto [deg, c] : coeffs_) {
    if (!out.empty()) out += '+';
    if (deg == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (deg != 1) out += "^" + std::to_string(deg);
  }
  return out;
}

namespace {

// Rank over Z/2 of a set of vectors given as sorted index lists.
std::size_t rank_gf2(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t k = col; k < cols; ++k) rows[r][k] = rows[r][k] ^ rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

PoincarePolynomial linearized_poincare(const DGA& d, const ShiftAutomorphism& g) {
  const DGA dg = conjugate(d, g);
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dg.diffs[i].has_constant())
      throw std::invalid_argument("shift does not augment: constant term in d(" + d.names[i] + ")");
  }
  // Matrix of d_1 on A_1: row i is the linear part of d(a_i).
  std::vector<std::vector<bool>> lin(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial linear = dg.diffs[i].component(1);
    for (const auto& m : linear.terms()) lin[i][static_cast<std::size_t>(m[0])] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> sq(n, false);
    for (std::size_t j = 0; j < n; ++j)
      if (lin[i][j])
        for (std::size_t k = 0; k < n; ++k) sq[k] = sq[k] ^ lin[j][k];
    if (std::find(sq.begin(), sq.end(), true) != sq.end())
      throw std::invalid_argument("linearized differential does not square to zero");
  }

  std::map<Degree, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < n; ++i) by_degree[d.degrees[i]].push_back(i);
  std::map<Degree, std::size_t> rank_from;  // rank of d_1 restricted to degree lambda
  for (const auto& [deg, gens] : by_degree) {
    std::vector<std::vector<bool>> rows;
    for (auto i : gens) rows.push_back(lin[i]);
    rank_from[deg] = rank_gf2(std::move(rows));
  }
  std::map<Degree, int> coeffs;
  for (const auto& [deg, gens] : by_degree) {
    std::size_t incoming = 0;
    auto it = rank_from.find(d.grading.reduce(deg + 1));
    if (it != rank_from.end()) incoming = it->second;
    const auto h = static_cast<std::int64_t>(gens.size()) - static_cast<std::int64_t>(rank_from[deg]) -
                   static_cast<std::int64_t>(incoming);
    if (h < 0) throw std::logic_error("negative homology dimension");
    coeffs[deg] = static_cast<int>(h);
  }
  return PoincarePolynomial(d.grading, std::move(coeffs));
}

InvariantSet invariant_I(const DGA& d, int max_degree_zero) {
  InvariantSet out;
  for (const auto& g : find_augmentation_shifts(d, max_degree_zero)) out.insert(linearized_poincare(d, g));
  return out;
}

std::string fresh_generator_name(const DGA& d) {
  for (std::size_t k = d.size() + 1;; ++k) {
    std::string name = "a" + std::to_string(k);
    if (!d.index_of(name)) return name;
  }
}

DGA stabilize_dga(const DGA& d, Degree l) {
  DGA out = d;
  const int upper = out.add_generator(fresh_generator_name(out), l);
  const int lower = out.add_generator(fresh_generator_name(out), l - 1);
  out.diffs[static_cast<std::size_t>(upper)] = Polynomial::generator(lower);
  return out;
}

DGA apply_elementary(const DGA& d, int i, const Polynomial& v) {
  if (i < 0 || static_cast<std::size_t>(i) >= d.size())
    throw std::invalid_argument("elementary automorphism on unknown generator");
  require_in_range(d, v);
  if (v.involves(i))
    throw std::invalid_argument("elementary automorphism: v involves " + d.names[static_cast<std::size_t>(i)]);
  for (const auto& m : v.terms()) {
    if (d.degree_of(m) != d.degrees[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("elementary automorphism: term of wrong degree in v");
    }
  }
  if (v.is_zero()) return d;
  std::vector<std::optional<Polynomial>> phi(d.size());
  phi[static_cast<std::size_t>(i)] = Polynomial::generator(i) + v;
  DGA out = d;
  for (std::size_t k = 0; k < d.size(); ++k) {
    Polynomial moved = d.diffs[k];
    if (static_cast<int>(k) == i) moved += apply_differential(d, v);
    out.diffs[k] = substitute(moved, phi);
  }
  return out;
}

DGA mirror_dga(const DGA& d) {
  DGA out = d;
  for (auto& p : out.diffs) {
    std::vector<Monomial> terms = p.terms();
    for (auto& m : terms) std::reverse(m.begin(), m.end());
    p = Polynomial(std::move(terms));
  }
  return out;
}

}  // namespace leglab
