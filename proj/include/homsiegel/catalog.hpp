#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homsiegel/realization.hpp"

namespace homsiegel::catalog {

/// Upper half plane: nu0 = 0, nu = (1).
RealizationSpec disk();
/// Tube over the cone of positive n x n matrices: all nu_k = 1, every V_lk = R.
RealizationSpec sym(int n);
/// Tube over the Vinberg cone: nu = (2, 1, 1), V_21 = R(1 0), V_31 = R(0 1), V_32 = 0.
RealizationSpec vinberg();
/// Siegel domain of type II over the half line, nu0 = 1, nu = (1), W_1 = C
/// (biholomorphic to the unit ball of C^2).
RealizationSpec ball();
/// Rank-2 non-tube domain: nu0 = 1, nu = (1, 1), V_21 = R, W_1 = W_2 = C.
RealizationSpec rank2_type2();
/// Tube over the Lorentz cone in R^4: nu = (2, 1), V_21 = Mat(1, 2; R).
RealizationSpec lorentz();
/// nu = (1, 2) with V_21 = Mat(2, 1; R), violating (V3).
RealizationSpec bad_v3();

/// The four domains the acceptance suite runs on.
std::vector<std::pair<std::string, RealizationSpec>> acceptance_domains();

}  // namespace homsiegel::catalog
