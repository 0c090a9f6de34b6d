#include "apply.hpp"

#include "ddk/dirac.hpp"
#include "ddk/parse.hpp"

#include <algorithm>

namespace ddk::cli {

namespace {

std::string strip_position(const ParseError& e) {
  std::string msg = e.what();
  const std::string suffix = " at position " + std::to_string(e.position());
  if (msg.size() >= suffix.size() && msg.compare(msg.size() - suffix.size(), suffix.size(), suffix) == 0)
    msg.resize(msg.size() - suffix.size());
  return msg;
}

VectorField parse_field(const RootSystemPtr& rs, const std::string& expr) {
  VectorField out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = expr.find(';', start);
    const std::string part = expr.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      out.push_back(parse_section(rs, part));
    } catch (const ParseError& e) {
      throw ParseError(strip_position(e), start + e.position());
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

Point parse_direction(const RootSystemA& rs, const std::string& text) {
  Point xi;
  if (text.empty()) {
    xi.assign(static_cast<std::size_t>(rs.ambient_dim()), FieldElem::zero());
    xi[0] = FieldElem::one();
    if (!rs.is_line()) xi[1] = FieldElem(-1L);
    return xi;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(',', start);
    const std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      xi.push_back(parse_scalar(part));
    } catch (const ParseError& e) {
      throw UsageError("--xi: " + strip_position(e) + " at position " + std::to_string(start + e.position()));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  try {
    require_direction(rs, xi);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--xi: ") + e.what());
  }
  return xi;
}

std::string render(const VectorField& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "; " : "") + f[i].to_string();
  return out;
}

void require_components(const VectorField& f, int n, const std::string& what) {
  if (static_cast<int>(f.size()) != n)
    throw UsageError(what + " expects " + std::to_string(n) + " ';'-separated components, got " +
                     std::to_string(f.size()));
}

}  // namespace

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names{"derivative", "dunkl", "drift", "twisted-dunkl", "laplacian", "dirac"};
  return names;
}

std::string run_apply(const RunConfig& cfg, const std::string& op, const std::string& expr, const std::string& xi) {
  if (std::find(operator_names().begin(), operator_names().end(), op) == operator_names().end())
    throw UsageError("unknown operator '" + op + "'");
  auto rs = parse_group(cfg.group);
  const Rational k = parse_multiplicity(cfg.k);
  DunklContext ctx(rs, k);
  auto f = parse_field(rs, expr);

  if (op == "laplacian") {
    auto basis = OrthonormalBasis::standard(*rs);
    VectorField out;
    for (const auto& c : f) out.push_back(dunkl_laplacian(ctx, basis, c));
    return render(out);
  }

  Representation rho = [&] {
    try {
      return Representation::builtin(cfg.rep, rs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--rep: ") + e.what());
    }
  }();
  if (op == "dirac") {
    DiracContext d(ctx, rho);
    require_components(f, d.components(), "dirac on " + cfg.group + " with rho=" + cfg.rep);
    return render(dirac_dunkl_apply(d, f));
  }

  const Point dir = parse_direction(*rs, xi);
  if (op == "twisted-dunkl") {
    require_components(f, rho.dim(), "twisted-dunkl with rho=" + cfg.rep);
    return render(twisted_dunkl_apply(ctx, rho, dir, f));
  }
  VectorField out;
  for (const auto& c : f) {
    if (op == "derivative") out.push_back(directional_derivative(dir, c));
    else if (op == "dunkl") out.push_back(dunkl_apply(ctx, dir, c));
    else out.push_back(drift_apply(ctx, dir, c));
  }
  return render(out);
}

}  // namespace ddk::cli
