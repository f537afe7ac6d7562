#include "nsd/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace nsd {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(std::int64_t n) const {
  Rational acc{0};
  const Rational x{n};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t Polynomial::sign_stable_from() const {
  if (degree() <= 0) return 0;
  const Rational lead = leading().abs();
  Rational worst{0};
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    worst = std::max(worst, coeffs_[i].abs() / lead);
  // every real root r satisfies |r| < 1 + worst
  return static_cast<std::uint64_t>((worst + Rational{1}).floor() + 1);
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Rational c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    first = false;
    if (d == 0) {
      os << c;
      continue;
    }
    if (c != Rational{1}) os << c << "*";
    os << "n";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

}  // namespace nsd
