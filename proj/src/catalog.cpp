#include "homsiegel/catalog.hpp"

namespace homsiegel::catalog {
namespace {

RealMatrix mat(int rows, int cols, std::initializer_list<double> values) {
  RealMatrix M(rows, cols);
  auto it = values.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M(i, j) = *it++;
  return M;
}

ComplexMatrix one() { return ComplexMatrix::Constant(1, 1, cplx(1.0)); }

}  // namespace

RealizationSpec disk() {
  RealizationSpec s;
  s.nu = {1};
  return s;
}

RealizationSpec sym(int n) {
  RealizationSpec s;
  s.nu.assign(static_cast<std::size_t>(n), 1);
  for (int l = 2; l <= n; ++l)
    for (int k = 1; k < l; ++k) s.v_basis[{l, k}] = {mat(1, 1, {1.0})};
  return s;
}

RealizationSpec vinberg() {
  RealizationSpec s;
  s.nu = {2, 1, 1};
  s.v_basis[{2, 1}] = {mat(1, 2, {1.0, 0.0})};
  s.v_basis[{3, 1}] = {mat(1, 2, {0.0, 1.0})};
  return s;
}

RealizationSpec ball() {
  RealizationSpec s;
  s.nu0 = 1;
  s.nu = {1};
  s.w_basis = {{one()}};
  return s;
}

RealizationSpec rank2_type2() {
  RealizationSpec s;
  s.nu0 = 1;
  s.nu = {1, 1};
  s.v_basis[{2, 1}] = {mat(1, 1, {1.0})};
  s.w_basis = {{one()}, {one()}};
  return s;
}

RealizationSpec lorentz() {
  RealizationSpec s;
  s.nu = {2, 1};
  s.v_basis[{2, 1}] = {mat(1, 2, {1.0, 0.0}), mat(1, 2, {0.0, 1.0})};
  return s;
}

RealizationSpec bad_v3() {
  RealizationSpec s;
  s.nu = {1, 2};
  s.v_basis[{2, 1}] = {mat(2, 1, {1.0, 0.0}), mat(2, 1, {0.0, 1.0})};
  return s;
}

std::vector<std::pair<std::string, RealizationSpec>> acceptance_domains() {
  return {{"disk", disk()}, {"sym2", sym(2)}, {"vinberg", vinberg()}, {"ball", ball()}};
}

}  // namespace homsiegel::catalog
