#include "fusion/core.hpp"

#include <sstream>

namespace fusion {

void Decomposition::add(IrrLabel label, const Integer& mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity for '" + label.id + "'");
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(std::move(label), mult);
  if (!inserted) it->second += mult;
}

void Decomposition::add(const Decomposition& other, const Integer& scale) {
  if (scale == 0) return;
  for (const auto& [w, n] : other) add(w, n * scale);
}

Integer Decomposition::multiplicity(const IrrLabel& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer Decomposition::total_dimension() const {
  Integer sum = 0;
  for (const auto& [w, n] : entries_) sum += n * w.dim;
  return sum;
}

Integer Decomposition::total_multiplicity() const {
  Integer sum = 0;
  for (const auto& [w, n] : entries_) sum += n;
  return sum;
}

std::optional<IrrLabel> Decomposition::as_single() const {
  if (entries_.size() == 1 && entries_.begin()->second == 1) return entries_.begin()->first;
  return std::nullopt;
}

std::vector<IrrLabel> Decomposition::labels() const {
  std::vector<IrrLabel> out;
  out.reserve(entries_.size());
  for (const auto& [w, n] : entries_) out.push_back(w);
  return out;
}

bool operator==(const Decomposition& a, const Decomposition& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  auto it = b.entries_.begin();
  for (const auto& [w, n] : a.entries_) {
    if (!(w == it->first) || n != it->second) return false;
    ++it;
  }
  return true;
}

VirtualElement::VirtualElement(const Decomposition& d) {
  for (const auto& [w, n] : d) coeffs_.emplace(w, n);
}

void VirtualElement::add(IrrLabel label, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(std::move(label), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Integer VirtualElement::coefficient(const IrrLabel& label) const {
  auto it = coeffs_.find(label);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

VirtualElement& VirtualElement::operator+=(const VirtualElement& other) {
  for (const auto& [w, c] : other.coeffs_) add(w, c);
  return *this;
}

VirtualElement& VirtualElement::operator-=(const VirtualElement& other) {
  for (const auto& [w, c] : other.coeffs_) add(w, -c);
  return *this;
}

VirtualElement& VirtualElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, c] : coeffs_) c *= scalar;
  return *this;
}

Integer VirtualElement::dimension() const {
  Integer sum = 0;
  for (const auto& [w, c] : coeffs_) sum += c * w.dim;
  return sum;
}

bool VirtualElement::is_effective() const {
  for (const auto& [w, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

Decomposition VirtualElement::to_decomposition() const {
  Decomposition d;
  for (const auto& [w, c] : coeffs_) d.add(w, c);
  return d;
}

bool operator==(const VirtualElement& a, const VirtualElement& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  auto it = b.coeffs_.begin();
  for (const auto& [w, c] : a.coeffs_) {
    if (!(w == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

namespace {

template <class Map>
std::string format_sum(const Map& m) {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : m) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << "*";
    os << w.id;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const Decomposition& d) { return format_sum(d.entries()); }

std::string to_string(const VirtualElement& v) {
  std::map<IrrLabel, Integer, LabelOrder> m(v.begin(), v.end());
  return format_sum(m);
}

}  // namespace fusion
