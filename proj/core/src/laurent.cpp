#include "equiknot/laurent.hpp"

#include <sstream>

#include "equiknot/error.hpp"

namespace equiknot {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NoValidRotation: return "NoValidRotation";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::NoGenericProjection: return "NoGenericProjection";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ApexImpossible: return "ApexImpossible";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::KnotTypeChanged: return "KnotTypeChanged";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::NoEligibleArc: return "NoEligibleArc";
    case ErrorCode::RemapCollision: return "RemapCollision";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Laurent Laurent::monomial(int exponent, std::int64_t coeff) {
  Laurent p;
  if (coeff != 0) p.coeffs_[exponent] = coeff;
  return p;
}

std::int64_t Laurent::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void Laurent::set_coeff(int exponent, std::int64_t value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = value;
}

void Laurent::add_coeff(int exponent, std::int64_t value) {
  set_coeff(exponent, coeff(exponent) + value);
}

int Laurent::min_exponent() const {
  if (is_zero()) raise(ErrorCode::Internal, "min_exponent of zero polynomial");
  return coeffs_.begin()->first;
}

int Laurent::max_exponent() const {
  if (is_zero()) raise(ErrorCode::Internal, "max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

Laurent Laurent::mirrored() const {
  Laurent p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
  return p;
}

Laurent Laurent::mirror_canonical() const {
  Laurent m = mirrored();
  return *this < m ? *this : m;
}

std::int64_t Laurent::eval_at_minus_one() const {
  std::int64_t v = 0;
  for (const auto& [e, c] : coeffs_) v += (e % 2 == 0) ? c : -c;
  return v;
}

bool Laurent::exponents_divisible_by(int k) const {
  for (const auto& [e, c] : coeffs_)
    if (e % k != 0) return false;
  return true;
}

Laurent Laurent::with_exponents_divided(int k) const {
  Laurent p;
  for (const auto& [e, c] : coeffs_) {
    if (e % k != 0)
      raise(ErrorCode::Internal, "exponent not divisible in rescale");
    p.coeffs_[e / k] = c;
  }
  return p;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
  Laurent p = *this;
  p += rhs;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_coeff(e, c);
  return *this;
}

Laurent Laurent::operator-(const Laurent& rhs) const {
  Laurent p = *this;
  for (const auto& [e, c] : rhs.coeffs_) p.add_coeff(e, -c);
  return p;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
  Laurent p;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_) p.add_coeff(e1 + e2, c1 * c2);
  return p;
}

std::string Laurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::int64_t abs_c = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || e == 0) os << abs_c;
    if (e != 0) {
      if (abs_c != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool equal_up_to_mirror(const Laurent& a, const Laurent& b) {
  return a == b || a == b.mirrored();
}

}  // namespace equiknot
