#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace holoframe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using PointList = std::vector<Complex>;

/// Where the functions of a space live.
enum class Domain { plane, unit_disc };

inline const char* to_string(Domain d) {
    return d == Domain::plane ? "plane" : "unit_disc";
}

}  // namespace holoframe
