#include "ddk/clifford.hpp"

namespace ddk {

namespace {

FieldMatrix pauli(int which) {
  const FieldElem i = FieldElem::imag_unit();
  switch (which) {
    case 1:
      return FieldMatrix(2, 2, {FieldElem(0L), FieldElem(1L), FieldElem(1L), FieldElem(0L)});
    case 2:
      return FieldMatrix(2, 2, {FieldElem(0L), -i, i, FieldElem(0L)});
    case 3:
      return FieldMatrix(2, 2, {FieldElem(1L), FieldElem(0L), FieldElem(0L), FieldElem(-1L)});
    default:
      return FieldMatrix::identity(2);
  }
}

// sigma3^{(x) pos} (x) middle (x) I^{(x) (m - pos - 1)}
FieldMatrix tensor_word(int m, int pos, const FieldMatrix& middle) {
  FieldMatrix out = FieldMatrix::identity(1);
  for (int t = 0; t < m; ++t) out = out.kron(t < pos ? pauli(3) : t == pos ? middle : pauli(0));
  return out;
}

}  // namespace

std::vector<FieldMatrix> hermitian_gammas(int n) {
  if (n < 1) throw std::invalid_argument("Clifford rank must be positive");
  const int m = (n + 1) / 2;
  std::vector<FieldMatrix> g;
  for (int k = 0; k < n / 2; ++k) {
    g.push_back(tensor_word(m, k, pauli(1)));
    g.push_back(tensor_word(m, k, pauli(2)));
  }
  if (n % 2 == 1) {
    // sigma3 on every factor anticommutes with all the pairs above.
    FieldMatrix last = FieldMatrix::identity(1);
    for (int t = 0; t < m; ++t) last = last.kron(pauli(3));
    g.push_back(last);
  }
  return g;
}

CliffordGens::CliffordGens(int n) : n_(n), dim_(1 << ((n + 1) / 2)) {
  for (const auto& g : hermitian_gammas(n)) e_.push_back(g * FieldElem::imag_unit());
  auto check = check_relations(*this);
  if (!check.ok()) throw std::logic_error("Clifford generators fail relations: " + check.failure);
}

CliffordCheck check_relations(const CliffordGens& gens) {
  CliffordCheck out;
  const auto d = static_cast<std::size_t>(gens.dim_spinor());
  const FieldMatrix zero(d, d);
  const FieldMatrix minus_two = FieldMatrix::scalar(d, FieldElem(-2L));
  for (int a = 0; a < gens.n(); ++a) {
    if (gens.e(a).adjoint() != gens.e(a) * FieldElem(-1L)) {
      out.anti_hermitian = false;
      if (out.failure.empty()) out.failure = "e" + std::to_string(a + 1) + " is not anti-Hermitian";
    }
    for (int b = 0; b < gens.n(); ++b) {
      FieldMatrix ac = gens.e(a) * gens.e(b) + gens.e(b) * gens.e(a);
      if (ac != (a == b ? minus_two : zero)) {
        out.anticommutation = false;
        if (out.failure.empty())
          out.failure = "{e" + std::to_string(a + 1) + ", e" + std::to_string(b + 1) + "} != -2 delta I";
      }
    }
  }
  return out;
}

SpinorField flat_dirac_apply(const CliffordGens& gens, const OrthonormalBasis& basis, const SpinorField& f) {
  if (static_cast<int>(f.size()) != gens.dim_spinor())
    throw std::invalid_argument("spinor field has " + std::to_string(f.size()) + " components, expected " +
                                std::to_string(gens.dim_spinor()));
  if (basis.size() != gens.n()) throw std::invalid_argument("basis size does not match Clifford rank");
  SpinorField out = zero_field(f.front().system(), gens.dim_spinor());
  for (int a = 0; a < gens.n(); ++a) {
    SpinorField d;
    for (const auto& c : f) d.push_back(directional_derivative(basis[a], c));
    out = add(out, apply_matrix(gens.e(a), d));
  }
  return out;
}

}  // namespace ddk
