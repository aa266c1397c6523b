#include "qss/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qss {

namespace {

void require_unitary(const Matrix& u, Index dim, const std::string& who) {
  if (u.rows() != dim || u.cols() != dim)
    throw std::invalid_argument(who + ": unitary dimension does not match inner state");
  if ((u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > kStructuralTol)
    throw std::invalid_argument(who + ": operator is not unitary within 1e-10");
}

constexpr int kPsiSigns[4][4] = {
    {+1, +1, +1, +1}, {+1, +1, -1, -1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}};
constexpr int kEvenKet3[4] = {0, 3, 5, 6};  // |000>,|011>,|101>,|110>

}  // namespace

DensityMatrix make_secret_sharing_state(const DensityMatrix& inner,
                                        const std::map<ParityIndex, Matrix>& unitaries,
                                        int n) {
  if (n < 3) throw std::invalid_argument("make_secret_sharing_state: need n >= 3 parties");
  const Index din = inner.dim();
  const auto even = ParityIndex::all_even(n);
  for (const auto& idx : even)
    if (!unitaries.contains(idx))
      throw std::invalid_argument("make_secret_sharing_state: missing unitary for even-parity index " +
                                  idx.str());
  for (const auto& [idx, u] : unitaries) {
    if (idx.size() != n || !idx.even())
      throw std::invalid_argument("make_secret_sharing_state: key " + idx.str() +
                                  " is not an even-parity index of the register");
    require_unitary(u, din, "make_secret_sharing_state");
  }

  const Index reg = Index(1) << n;
  Matrix m = Matrix::Zero(reg * din, reg * din);
  const double weight = 1.0 / static_cast<double>(Index(1) << (n - 1));
  for (const auto& I : even)
    for (const auto& J : even)
      m.block(I.value() * din, J.value() * din, din, din) =
          weight * (unitaries.at(I) * inner.matrix() * unitaries.at(J).adjoint());

  SystemLayout layout = SystemLayout::qubits(n);
  layout.append("inner", din);
  return DensityMatrix(std::move(m), std::move(layout));
}

DensityMatrix split_label(const DensityMatrix& rho, const std::string& label,
                          std::span<const std::pair<std::string, Index>> parts) {
  const auto pos = rho.layout().position(label);
  Index prod = 1;
  for (const auto& [name, dim] : parts) prod *= dim;
  if (prod != rho.layout().dim(pos))
    throw std::invalid_argument("split_label: part dimensions do not factor the subsystem");
  SystemLayout lay;
  for (std::size_t i = 0; i < rho.layout().size(); ++i) {
    if (i == pos)
      for (const auto& [name, dim] : parts) lay.append(name, dim);
    else
      lay.append(rho.layout().label(i), rho.layout().dim(i));
  }
  return DensityMatrix(rho.matrix(), std::move(lay));
}

PureState make_even_parity_state(int j) {
  if (j < 0 || j > 3) throw std::invalid_argument("make_even_parity_state: j must be in 0..3");
  Vector v = Vector::Zero(8);
  for (int m = 0; m < 4; ++m) v(kEvenKet3[m]) = 0.5 * kPsiSigns[j][m];
  return PureState(std::move(v), SystemLayout{{"A", 2}, {"B", 2}, {"C", 2}});
}

DensityMatrix make_private_state(const DensityMatrix& inner, const Matrix& u0, const Matrix& u1) {
  const Index din = inner.dim();
  require_unitary(u0, din, "make_private_state");
  require_unitary(u1, din, "make_private_state");
  const Matrix* us[2] = {&u0, &u1};
  Matrix m = Matrix::Zero(4 * din, 4 * din);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      m.block(3 * i * din, 3 * j * din, din, din) =
          0.5 * (*us[i] * inner.matrix() * us[j]->adjoint());
  SystemLayout layout{{"A", 2}, {"C", 2}};
  layout.append("inner", din);
  return DensityMatrix(std::move(m), std::move(layout));
}

Matrix make_flip(Index d) {
  if (d < 2) throw std::invalid_argument("make_flip: need d >= 2");
  Matrix f = Matrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

DensityMatrix make_werner(Index d, WernerKind kind) {
  const Matrix flip = make_flip(d);
  const Matrix eye = Matrix::Identity(d * d, d * d);
  const double dd = static_cast<double>(d * d);
  Matrix m = kind == WernerKind::symmetric ? ((eye + flip) / (dd + d)).eval()
                                           : ((eye - flip) / (dd - d)).eval();
  return DensityMatrix(std::move(m), SystemLayout{{"A", d}, {"B", d}});
}

DensityMatrix make_example_state(double a1, double a2, Index d) {
  if (!(a1 > 0.0) || !(a2 > 0.0))
    throw std::invalid_argument("make_example_state: weights must be positive");
  if (std::abs(a1 + a2 - 0.5) > 1e-12)
    throw std::invalid_argument("make_example_state: constraint a1 + a2 = 1/2 violated");
  const Matrix rho_s = make_werner(d, WernerKind::symmetric).matrix();
  const Matrix rho_a = make_werner(d, WernerKind::antisymmetric).matrix();
  Matrix flag0 = Matrix::Zero(2, 2), flag1 = Matrix::Zero(2, 2);
  flag0(0, 0) = 1.0;
  flag1(1, 1) = 1.0;
  const Matrix sigma[4] = {tensor(rho_s, flag0), tensor(rho_a, flag0), tensor(rho_a, flag1),
                           tensor(rho_s, flag1)};
  const double a[4] = {a1, a1, a2, a2};

  Matrix m = Matrix::Zero(8 * 2 * d * d, 8 * 2 * d * d);
  for (int j = 0; j < 4; ++j) {
    const Vector psi = make_even_parity_state(j).amplitudes();
    m += a[j] * tensor((psi * psi.adjoint()).eval(), sigma[j]);
  }
  SystemLayout layout{{"A", 2}, {"B", 2}, {"C", 2}, {"A'", d}, {"B'", d}, {"C'", 2}};
  return DensityMatrix(std::move(m), std::move(layout));
}

DensityMatrix make_general_example(std::span<const double> a,
                                   std::span<const DensityMatrix> sigmas) {
  if (a.size() != 4 || sigmas.size() != 4)
    throw std::invalid_argument("make_general_example: need four weights and four states");
  double sum = 0.0;
  for (const double w : a) {
    if (w < 0.0) throw std::invalid_argument("make_general_example: weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("make_general_example: weights must sum to 1");
  const Index din = sigmas[0].dim();
  for (const auto& s : sigmas)
    if (s.dim() != din)
      throw std::invalid_argument("make_general_example: sigma dimensions differ");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((sigmas[i].matrix() * sigmas[j].matrix()).cwiseAbs().maxCoeff() > kStructuralTol)
        throw std::invalid_argument("make_general_example: sigma supports overlap (sigma_" +
                                    std::to_string(i) + " sigma_" + std::to_string(j) +
                                    " != 0)");

  Matrix m = Matrix::Zero(8 * din, 8 * din);
  for (int j = 0; j < 4; ++j) {
    const Vector psi = make_even_parity_state(j).amplitudes();
    m += a[j] * tensor((psi * psi.adjoint()).eval(), sigmas[j].matrix());
  }
  SystemLayout layout{{"A", 2}, {"B", 2}, {"C", 2}};
  layout.append("inner", din);
  return DensityMatrix(std::move(m), std::move(layout));
}

PureState purify(const DensityMatrix& rho) {
  auto [values, vectors] = eigh(rho.matrix());
  std::vector<Index> kept;
  for (Index l = values.size() - 1; l >= 0; --l)
    if (values(l) > kRankCutoff) kept.push_back(l);
  if (kept.empty()) throw std::invalid_argument("purify: state has no spectral weight");
  const Index rank = static_cast<Index>(kept.size());
  const Index dim = rho.dim();

  Vector amp = Vector::Zero(dim * rank);
  double norm2 = 0.0;
  for (Index e = 0; e < rank; ++e) {
    const double lambda = values(kept[static_cast<std::size_t>(e)]);
    norm2 += lambda;
    const double root = std::sqrt(lambda);
    for (Index g = 0; g < dim; ++g)
      amp(g * rank + e) = root * vectors(g, kept[static_cast<std::size_t>(e)]);
  }
  amp /= std::sqrt(norm2);  // reabsorb mass dropped by the rank cutoff

  SystemLayout layout = rho.layout();
  std::string elabel = "E";
  for (int suffix = 1; layout.contains(elabel); ++suffix)
    elabel = "E" + std::to_string(suffix);
  layout.append(elabel, rank);
  return PureState(std::move(amp), std::move(layout));
}

}  // namespace qss
