#include "ddk/fields.hpp"

#include <sstream>

namespace ddk {

VectorField zero_field(const RootSystemPtr& rs, int dim) {
  return VectorField(static_cast<std::size_t>(dim), RationalSection(rs));
}

VectorField apply_matrix(const FieldMatrix& m, const VectorField& phi) {
  if (phi.empty() || m.cols() != phi.size()) throw std::invalid_argument("matrix/field dimension mismatch");
  VectorField out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RationalSection s(phi.front().system());
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !phi[c].is_zero()) s += phi[c] * m(r, c);
    out.push_back(std::move(s));
  }
  return out;
}

VectorField compose_group(const GroupElement& w, const VectorField& phi) {
  VectorField out;
  out.reserve(phi.size());
  for (const auto& c : phi) out.push_back(compose_group(w, c));
  return out;
}

VectorField add(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("field dimension mismatch");
  VectorField out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

VectorField sub(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("field dimension mismatch");
  VectorField out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

VectorField scale(const VectorField& a, const FieldElem& s) {
  VectorField out;
  for (const auto& c : a) out.push_back(c * s);
  return out;
}

bool is_zero(const VectorField& phi) {
  for (const auto& c : phi)
    if (!c.is_zero()) return false;
  return true;
}

std::string to_string(const VectorField& phi) {
  if (phi.size() == 1) return phi.front().to_string();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < phi.size(); ++i) os << (i ? ", " : "") << phi[i].to_string();
  os << ']';
  return os.str();
}

}  // namespace ddk
