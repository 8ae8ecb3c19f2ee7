#include "walkarea/area_spectrum.hpp"

#include <sstream>
#include <stdexcept>

namespace walkarea {

bool AreaSupport::contains(long a) const {
  if (a < a_min || a > a_max) return false;
  if (step == 1) return true;
  const long par = ((a % 2) + 2) % 2;
  return par == parity;
}

void AreaSpectrum::add(long a, const BigInt& count) {
  if (count == 0) return;
  auto [it, inserted] = entries_.try_emplace(a, count);
  if (!inserted) {
    it->second += count;
    if (it->second == 0) entries_.erase(it);
  }
}

BigInt AreaSpectrum::at(long a) const {
  auto it = entries_.find(a);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt AreaSpectrum::total() const {
  BigInt s = 0;
  for (const auto& [a, c] : entries_) s += c;
  return s;
}

bool AreaSpectrum::symmetric() const {
  for (const auto& [a, c] : entries_) {
    if (at(-a) != c) return false;
  }
  return true;
}

bool AreaSpectrum::all_nonnegative() const {
  for (const auto& [a, c] : entries_) {
    if (c < 0) return false;
  }
  return true;
}

std::optional<std::pair<long, long>> AreaSpectrum::realized_range() const {
  if (entries_.empty()) return std::nullopt;
  return std::make_pair(entries_.begin()->first, entries_.rbegin()->first);
}

bool AreaSpectrum::within(const AreaSupport& s) const {
  for (const auto& [a, c] : entries_) {
    if (!s.contains(a)) return false;
  }
  return true;
}

AreaSpectrum AreaSpectrum::mirrored() const {
  AreaSpectrum m(meta_);
  for (const auto& [a, c] : entries_) m.entries_.emplace(-a, c);
  return m;
}

CyclotomicNumber AreaSpectrum::substitute(const Flux& flux, int order) const {
  const long base = 2 * flux.q();
  if (order % base != 0) {
    throw std::invalid_argument("substitute: field order must be a multiple of 2q");
  }
  RootOfUnitySum acc(order);
  const long step = order / base;
  for (const auto& [a, c] : entries_) acc.add_term(flux.p() * a * step, c);
  return acc.reduce();
}

std::string to_string(const AreaSpectrum& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, c] : s.entries()) {
    if (!first) os << ", ";
    os << a << ": " << c.get_str();
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace walkarea
