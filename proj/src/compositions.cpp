#include "walkarea/compositions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walkarea {

Composition::Composition(std::vector<int> parts, int g) : parts_(std::move(parts)), g_(g), total_(0) {
  if (g_ < 2) throw std::domain_error("g-composition requires g >= 2");
  if (parts_.empty()) throw std::domain_error("g-composition must have at least one part");
  if (parts_.front() <= 0 || parts_.back() <= 0) {
    throw std::domain_error("g-composition: first and last parts must be positive");
  }
  int run = 0;
  for (int p : parts_) {
    if (p < 0) throw std::domain_error("g-composition: negative part");
    run = (p == 0) ? run + 1 : 0;
    if (run > g_ - 2) {
      throw std::domain_error("g-composition: more than g-2 consecutive zeros");
    }
    total_ += p;
  }
}

Composition Composition::reversed() const {
  std::vector<int> r(parts_.rbegin(), parts_.rend());
  return Composition(std::move(r), g_);
}

std::string to_string(const Composition& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) os << ",";
    os << c.parts()[i];
  }
  os << ")";
  return os.str();
}

GCompositions::GCompositions(int n, int g) : n_(n), g_(g), remaining_(n) {
  if (n < 1) throw std::domain_error("g_compositions: n must be >= 1");
  if (g < 2) throw std::domain_error("g_compositions: g must be >= 2");
}

void GCompositions::complete_greedily() {
  while (remaining_ > 0) {
    const int run = zero_run_.empty() ? 0 : zero_run_.back();
    if (!parts_.empty() && run < g_ - 2) {
      parts_.push_back(0);
      zero_run_.push_back(run + 1);
    } else {
      parts_.push_back(1);
      zero_run_.push_back(0);
      remaining_ -= 1;
    }
  }
}

std::optional<Composition> GCompositions::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    complete_greedily();
    return Composition(parts_, g_);
  }
  while (!parts_.empty()) {
    const int v = parts_.back();
    parts_.pop_back();
    zero_run_.pop_back();
    remaining_ += v;
    if (v + 1 <= remaining_) {
      parts_.push_back(v + 1);
      zero_run_.push_back(0);
      remaining_ -= v + 1;
      complete_greedily();
      return Composition(parts_, g_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Composition> g_compositions(int n, int g) {
  std::vector<Composition> out;
  GCompositions gen(n, g);
  while (auto c = gen.next()) out.push_back(std::move(*c));
  return out;
}

namespace {

// Parts padded with trailing zeros up to length `len`.
std::vector<long> padded(const Composition& c, std::size_t len) {
  std::vector<long> l(c.parts().begin(), c.parts().end());
  if (l.size() < len) l.resize(len, 0);
  return l;
}

long window_sum(const std::vector<long>& l, std::size_t start, std::size_t width) {
  long s = 0;
  for (std::size_t t = start; t < start + width; ++t) s += l[t];
  return s;
}

}  // namespace

Rational exclusion_weight(const Composition& c) {
  const auto g = static_cast<std::size_t>(c.g());
  const std::size_t j = c.size();
  const auto l = padded(c, std::max(j, g - 1));

  // (l_1 + ... + l_{g-1} - 1)! / (l_1! ... l_{g-1}!)
  Rational w(factorial(window_sum(l, 0, g - 1) - 1));
  for (std::size_t i = 0; i + 1 < g; ++i) w /= Rational(factorial(l[i]));

  // prod_{i=1}^{j-g+1} C(l_i + ... + l_{i+g-1} - 1, l_{i+g-1})
  for (std::size_t i = 0; i + g <= j; ++i) {
    w *= Rational(binomial(window_sum(l, i, g) - 1, l[i + g - 1]));
  }
  return w;
}

Rational exclusion_weight_factorial_form(const Composition& c) {
  const auto g = static_cast<std::size_t>(c.g());
  // Padding with g-1 trailing zeros leaves the weight unchanged and makes the
  // ratio form valid for every j.
  const std::size_t len = c.size() + g - 1;
  const auto l = padded(c, len);

  BigInt num = 1;
  for (std::size_t i = 0; i + g <= len; ++i) num *= factorial(window_sum(l, i, g) - 1);
  BigInt den = 1;
  for (std::size_t i = 0; i + g + 1 <= len; ++i) den *= factorial(window_sum(l, i + 1, g - 1) - 1);
  for (long part : l) den *= factorial(part);
  Rational w(num, den);
  w.canonicalize();
  return w;
}

}  // namespace walkarea
