// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHAN_CHANNEL_HPP
#define QCHAN_CHANNEL_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qchan/tolerance.hpp"
#include "qchan/types.hpp"

namespace qchan {

/// Real 3-vector b of the state 1/2 (I + b . sigma). Construction checks |b| <= 1 + tol.
class BlochVector {
   public:
    BlochVector() = default;
    explicit BlochVector(const Vec3 &b, double tol = default_tolerance());
    BlochVector(double x, double y, double z) : BlochVector(Vec3(x, y, z)) {
    }

    const Vec3 &vec() const {
        return b_;
    }
    double norm() const {
        return b_.norm();
    }

   private:
    Vec3 b_ = Vec3::Zero();
};

/// Single-qubit state. Construction checks hermiticity, unit trace and positivity.
class DensityMatrix {
   public:
    explicit DensityMatrix(const Mat2 &m, double tol = default_tolerance());

    static DensityMatrix from_bloch(const BlochVector &b);
    static DensityMatrix pure(const Eigen::Vector2cd &psi);
    static DensityMatrix maximally_mixed();

    const Mat2 &matrix() const {
        return m_;
    }
    BlochVector bloch() const;

   private:
    Mat2 m_;
};

/// 2x2 unitary. Construction checks u^dagger u = I.
class Unitary2 {
   public:
    Unitary2() : u_(Mat2::Identity()) {
    }
    explicit Unitary2(const Mat2 &u, double tol = default_tolerance());

    /// Nearest unitary (polar factor); used to clean up numerically drifted products.
    static Unitary2 nearest(const Mat2 &m);

    const Mat2 &matrix() const {
        return u_;
    }
    Unitary2 adjoint() const;
    friend Unitary2 operator*(const Unitary2 &a, const Unitary2 &b);

   private:
    struct Trusted {};
    Unitary2(const Mat2 &u, Trusted) : u_(u) {
    }
    Mat2 u_;
};

/// Operator-sum representation with 1 to 4 Kraus operators. Longer lists are
/// reduced to the minimal form through the Choi eigendecomposition.
class KrausChannel {
   public:
    explicit KrausChannel(std::vector<Mat2> ops, double tol = default_tolerance());

    const std::vector<Mat2> &ops() const {
        return ops_;
    }
    /// max |sum K^dagger K - I|
    double tp_residual() const;

   private:
    std::vector<Mat2> ops_;
};

/// Bloch-ball affine map b -> T b + t. Trace preservation is structural; complete
/// positivity is checked by validate_cptp.
struct AffineChannel {
    Vec3 t = Vec3::Zero();
    Mat3 T = Mat3::Identity();

    static AffineChannel identity() {
        return {};
    }
    /// Entrywise max |difference| over the 12 parameters.
    double max_abs_diff(const AffineChannel &other) const;
};

/// Choi matrix (id (x) E)(|Phi><Phi|) with trace 1, input factor first.
struct ChoiMatrix {
    Mat4 c = Mat4::Zero();

    /// Eigenvalues in ascending order.
    std::array<double, 4> eigenvalues() const;
    /// Trace over the output factor; equals I/2 for trace-preserving maps.
    Mat2 partial_trace_output() const;
};

struct CptpReport {
    bool valid = false;
    std::array<double, 4> choi_eigenvalues{};
    std::vector<double> violations;  // eigenvalues below -tol
    double tolerance = 0;
    std::string diagnostic() const;
};

enum class PhaseMode { Strict, Projective };

DensityMatrix kraus_apply(const KrausChannel &ch, const DensityMatrix &rho);
AffineChannel kraus_to_affine(const KrausChannel &ch);
BlochVector affine_apply(const AffineChannel &ch, const BlochVector &b, double tol = default_tolerance());
ChoiMatrix affine_to_choi(const AffineChannel &ch);
ChoiMatrix kraus_to_choi(const KrausChannel &ch);
AffineChannel choi_to_affine(const ChoiMatrix &choi);
/// Kraus operators sqrt(2 lambda_k) unvec(u_k) for Choi eigenpairs with lambda_k > tol, largest first.
std::vector<Mat2> choi_to_kraus_ops(const ChoiMatrix &choi, double tol = 0.0);
CptpReport validate_cptp(const AffineChannel &ch, double tol = default_tolerance());

/// Induced Schatten one-norm distance max_rho ||a(rho) - b(rho)||_1, evaluated as
/// max_{|v|=1} |dT v + dt|.
double channel_distance(const AffineChannel &a, const AffineChannel &b);

/// Worst-case two-norm distance ||U - V||; projective mode minimizes over a global phase on V.
double unitary_distance(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v, PhaseMode mode);
double unitary_distance(const Mat2 &u, const Mat2 &v, PhaseMode mode);

/// Affine map of b -> u (b . sigma) u^dagger, i.e. t = 0 and T = rotation_of(u).
AffineChannel unitary_channel(const Mat2 &u);
/// first applied, then second.
AffineChannel compose(const AffineChannel &second, const AffineChannel &first);
AffineChannel mix(double p, const AffineChannel &a, const AffineChannel &b);
/// Adjoint SO(3) action R with R_ij = 1/2 tr(sigma_i u sigma_j u^dagger).
Mat3 rotation_of(const Mat2 &u);

}  // namespace qchan

#endif  // QCHAN_CHANNEL_HPP
