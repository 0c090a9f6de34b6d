#include "ddk/reps.hpp"

#include "ddk/random.hpp"


namespace ddk {

namespace {

bool is_unitary(const FieldMatrix& m) { return m.adjoint() * m == FieldMatrix::identity(m.rows()); }

FieldMatrix power(const FieldMatrix& m, int e) {
  FieldMatrix out = FieldMatrix::identity(m.rows());
  for (int t = 0; t < e; ++t) out = out * m;
  return out;
}

// Relation check shared by the constructor and check_integrity.
std::string generator_relations(const RootSystemA& rs, const std::vector<FieldMatrix>& gens, IntegrityReport* rep) {
  const std::size_t d = gens.front().rows();
  const FieldMatrix id = FieldMatrix::identity(d);
  std::string failure;
  auto note = [&](bool& flag, const std::string& what) {
    if (rep) flag = false;
    if (failure.empty()) failure = what;
  };
  bool dummy = true;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!is_unitary(gens[g])) note(rep ? rep->unitary : dummy, "rho(s" + std::to_string(g + 1) + ") is not unitary");
    if (gens[g] * gens[g] != id)
      note(rep ? rep->involutions : dummy, "rho(s" + std::to_string(g + 1) + ")^2 != I");
  }
  if (!rs.is_line()) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t h = g + 1; h < gens.size(); ++h) {
        int order = h == g + 1 ? 3 : 2;
        if (power(gens[g] * gens[h], order) != id)
          note(rep ? rep->braid : dummy, "(rho(s" + std::to_string(g + 1) + ") rho(s" + std::to_string(h + 1) +
                                             "))^" + std::to_string(order) + " != I");
      }
    }
  }
  return failure;
}

}  // namespace

const std::vector<std::string>& Representation::builtin_names() {
  static const std::vector<std::string> names{"trivial", "sign", "irrep2d", "permutation"};
  return names;
}

Representation Representation::builtin(std::string_view name, const RootSystemPtr& rs) {
  const int ngen = rs->num_generators();
  std::vector<FieldMatrix> gens;
  if (name == "trivial" || name == "sign") {
    FieldMatrix m(1, 1, {FieldElem(name == "trivial" ? 1L : -1L)});
    gens.assign(static_cast<std::size_t>(ngen), m);
  } else if (name == "irrep2d") {
    if (rs->is_line() || rs->rank() != 2)
      throw std::invalid_argument("irrep2d is the two-dimensional representation of S3 and needs group A2");
    const FieldElem half(make_rational(1, 2));
    const FieldElem r3 = FieldElem::sqrt(std::uint64_t{3}) * half;
    gens.emplace_back(2, 2, std::vector<FieldElem>{FieldElem(1L), FieldElem(0L), FieldElem(0L), FieldElem(-1L)});
    gens.emplace_back(2, 2, std::vector<FieldElem>{-half, r3, r3, half});
  } else if (name == "permutation") {
    if (rs->is_line()) {
      gens.emplace_back(2, 2, std::vector<FieldElem>{FieldElem(0L), FieldElem(1L), FieldElem(1L), FieldElem(0L)});
    } else {
      const auto d = static_cast<std::size_t>(rs->ambient_dim());
      for (int g = 0; g < ngen; ++g) {
        FieldMatrix m = FieldMatrix::identity(d);
        const auto a = static_cast<std::size_t>(g);
        m(a, a) = FieldElem(0L);
        m(a + 1, a + 1) = FieldElem(0L);
        m(a, a + 1) = FieldElem(1L);
        m(a + 1, a) = FieldElem(1L);
        gens.push_back(m);
      }
    }
  } else {
    throw std::invalid_argument("unknown representation '" + std::string(name) +
                                "' (expected trivial, sign, irrep2d or permutation)");
  }
  return Representation(std::string(name), rs, std::move(gens));
}

Representation::Representation(std::string name, RootSystemPtr rs, std::vector<FieldMatrix> generators)
    : name_(std::move(name)), rs_(std::move(rs)), gens_(std::move(generators)) {
  if (static_cast<int>(gens_.size()) != rs_->num_generators())
    throw std::invalid_argument("representation needs one matrix per simple reflection");
  dim_ = static_cast<int>(gens_.front().rows());
  for (const auto& m : gens_)
    if (m.rows() != gens_.front().rows() || m.cols() != m.rows())
      throw std::invalid_argument("representation matrices must be square of one size");
  std::string failure = generator_relations(*rs_, gens_, nullptr);
  if (!failure.empty()) throw std::invalid_argument("representation '" + name_ + "': " + failure);
  for (int a = 0; a < rs_->num_roots(); ++a) {
    FieldMatrix m = FieldMatrix::identity(static_cast<std::size_t>(dim_));
    for (int g : reflection_word(*rs_, a)) m = m * gens_[static_cast<std::size_t>(g)];
    reflections_.push_back(std::move(m));
  }
}

FieldMatrix Representation::of(const GroupElement& w) const {
  FieldMatrix m = FieldMatrix::identity(static_cast<std::size_t>(dim_));
  for (int g : w.word()) m = m * gens_.at(static_cast<std::size_t>(g));
  return m;
}

std::vector<int> reflection_word(const RootSystemA& rs, int root) {
  const Root& r = rs.root(root);
  if (r.is_line()) return {0};
  std::vector<int> word;
  for (int g = r.i; g < r.j - 1; ++g) word.push_back(g);
  word.push_back(r.j - 1);
  for (int g = r.j - 2; g >= r.i; --g) word.push_back(g);
  return word;
}

VectorField twisted_dunkl_apply(const DunklContext& ctx, const Representation& rho, const Point& xi,
                                const VectorField& phi) {
  const RootSystemA& rs = *ctx.system;
  if (static_cast<int>(phi.size()) != rho.dim())
    throw std::invalid_argument("field has " + std::to_string(phi.size()) + " components, representation has dimension " +
                                std::to_string(rho.dim()));
  require_direction(rs, xi);
  VectorField out;
  for (const auto& c : phi) out.push_back(directional_derivative(xi, c));
  for (int a = 0; a < rs.num_roots(); ++a) {
    if (sgn(ctx.k.value(a)) == 0) continue;
    FieldElem coeff = pairing(rs, a, xi) * FieldElem(ctx.k.value(a));
    if (coeff.is_zero()) continue;
    VectorField diff = sub(phi, apply_matrix(rho.of_reflection(a), compose_group(GroupElement::reflection(rs, a), phi)));
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (diff[i].is_zero()) continue;
      std::vector<int> den = diff[i].den();
      den[static_cast<std::size_t>(a)] += 1;
      out[i] += RationalSection(ctx.system, diff[i].num(), std::move(den)) * coeff;
    }
  }
  return out;
}

bool check_equivariance(const Representation& rho, const VectorField& phi, const GroupElement& w) {
  return compose_group(w, phi) == apply_matrix(rho.of(w), phi);
}

bool is_equivariant(const Representation& rho, const VectorField& phi) {
  const RootSystemA& rs = *rho.system();
  for (int g = 0; g < rs.num_generators(); ++g)
    if (!check_equivariance(rho, phi, GroupElement::generator(rs, g))) return false;
  return true;
}

VectorField equivariant_projection(const Representation& rho, const VectorField& psi) {
  const RootSystemPtr& rs = rho.system();
  VectorField out = zero_field(rs, rho.dim());
  for (const auto& w : enumerate_group(*rs)) {
    // unitary: rho(w)^{-1} = rho(w)^dagger
    out = add(out, apply_matrix(rho.of(w).adjoint(), compose_group(w, psi)));
  }
  return out;
}

bool check_frame_equivariance(const DunklContext& ctx, const Representation& rho, const Point& xi,
                              const VectorField& phi, const GroupElement& w) {
  VectorField lhs = compose_group(w, twisted_dunkl_apply(ctx, rho, w.apply(xi), phi));
  VectorField rhs = apply_matrix(rho.of(w), twisted_dunkl_apply(ctx, rho, xi, phi));
  return lhs == rhs;
}

IntegrityReport check_integrity(const Representation& rho, int pairs, std::uint64_t seed, int exhaustive_rank) {
  IntegrityReport rep;
  const RootSystemA& rs = *rho.system();
  std::vector<FieldMatrix> gens;
  for (int g = 0; g < rs.num_generators(); ++g) gens.push_back(rho.generator(g));
  rep.failure = generator_relations(rs, gens, &rep);
  const int bound = std::max(exhaustive_rank, 1);
  if (rs.rank() > bound) return rep;
  auto group = enumerate_group(rs, bound);
  std::vector<FieldMatrix> images;
  for (const auto& w : group) {
    images.push_back(rho.of(w));
    if (!is_unitary(images.back())) {
      rep.unitary = false;
      if (rep.failure.empty()) rep.failure = "rho(w) not unitary for a group element";
    }
  }
  Sampler s(seed);
  const int last = static_cast<int>(group.size()) - 1;
  for (int t = 0; t < pairs; ++t) {
    int i = s.uniform_int(0, last);
    int j = s.uniform_int(0, last);
    ++rep.pairs_checked;
    if (rho.of(group[static_cast<std::size_t>(i)] * group[static_cast<std::size_t>(j)]) !=
        images[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(j)]) {
      rep.homomorphism = false;
      if (rep.failure.empty()) rep.failure = "rho(w1 w2) != rho(w1) rho(w2)";
    }
  }
  return rep;
}

}  // namespace ddk
