#pragma once

#include <Eigen/Dense>

namespace qmoo {

/// x angular momentum for one qudit in the spin-(d-1)/2 convention:
/// <x+1|Lx|x> = <x|Lx|x+1> = sqrt((x+1)(d-1-x))/2, zeros elsewhere.
Eigen::MatrixXd angular_momentum_x(int d);

/// z angular momentum: diagonal with entries (2x - d + 1)/2.
Eigen::MatrixXd angular_momentum_z(int d);

/// Squeezing generator Lz^2: diagonal with entries ((2x - d + 1)/2)^2.
Eigen::MatrixXd squeezing(int d);

/// Single-qudit mixer exp(-i (beta1 Lx + beta2 Lz^2)), computed by
/// eigendecomposition of the Hermitian generator. For d = 2 the Lz^2 term is
/// proportional to the identity and is dropped, so beta2 is ignored there.
Eigen::MatrixXcd mixer_matrix(int d, double beta1, double beta2);

}  // namespace qmoo
