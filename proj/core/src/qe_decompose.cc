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

#include "qchan/qe_decompose.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include <Eigen/Geometry>

#include "least_squares.hpp"
#include "qchan/error.hpp"

namespace qchan {

namespace {

using CMat42 = Eigen::Matrix<Complex, 4, 2>;

// Below this Choi eigenvalue a Kraus direction is treated as absent.
constexpr double kRankTol = 1e-12;
// Split weights closer than this to 0 or 1 leave one factor poorly determined.
constexpr double kMinWeight = 1e-3;

Mat3 rotation_exp(const Vec3 &r) {
    double angle = r.norm();
    if (angle < 1e-300) {
        return Mat3::Identity();
    }
    return Eigen::AngleAxisd(angle, r / angle).toRotationMatrix();
}

Vec3 rotation_log(const Mat3 &r) {
    Eigen::AngleAxisd aa(r);
    return aa.angle() * aa.axis();
}

double wrap_angle(double a) {
    a = std::remainder(a, 2 * kPi);
    if (a <= -kPi) {
        a += 2 * kPi;
    }
    return a;
}

struct ProperSvd {
    Mat3 p;
    Vec3 d;
    Mat3 q;  // T = p * diag(d) * q
};

ProperSvd proper_svd(const Mat3 &t) {
    Eigen::JacobiSVD<Mat3> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 u = svd.matrixU();
    Mat3 v = svd.matrixV();
    Vec3 d = svd.singularValues();
    if (u.determinant() < 0) {
        u.col(2) *= -1;
        d(2) *= -1;
    }
    if (v.determinant() < 0) {
        v.col(2) *= -1;
        d(2) *= -1;
    }
    return {u, d, v.transpose()};
}

// Moves the translation inside a block of equal |d| onto one axis. Inside such a block
// diag(d) = s * S with S a sign matrix, so G^T (s S) (S G S) = s S for any rotation G of the block.
void align_degenerate_blocks(ProperSvd &f, Vec3 &tp) {
    constexpr double kClusterTol = 1e-7;
    std::array<int, 3> idx{0, 1, 2};
    std::vector<std::vector<int>> clusters;
    std::vector<bool> used(3, false);
    for (int i : idx) {
        if (used[i]) {
            continue;
        }
        std::vector<int> c{i};
        used[i] = true;
        for (int j = i + 1; j < 3; ++j) {
            if (!used[j] && std::abs(std::abs(f.d(i)) - std::abs(f.d(j))) < kClusterTol) {
                c.push_back(j);
                used[j] = true;
            }
        }
        clusters.push_back(c);
    }
    for (const auto &c : clusters) {
        if (c.size() < 2) {
            continue;
        }
        Vec3 tc = Vec3::Zero();
        for (int i : c) {
            tc(i) = tp(i);
        }
        if (tc.norm() < 1e-13) {
            continue;
        }
        Mat3 g = Mat3::Identity();
        if (c.size() == 2) {
            int i = c[0];
            int j = c[1];
            double a = std::atan2(tp(j), tp(i));
            g(i, i) = std::cos(a);
            g(i, j) = -std::sin(a);
            g(j, i) = std::sin(a);
            g(j, j) = std::cos(a);
        } else {
            Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(tc, Vec3::UnitZ());
            g = q.toRotationMatrix().transpose();
        }
        Mat3 s = Mat3::Identity();
        for (int i = 0; i < 3; ++i) {
            if (f.d(i) < 0) {
                s(i, i) = -1;
            }
        }
        Mat3 h = s * g * s;
        f.p = f.p * g;
        f.q = h.transpose() * f.q;
        tp = g.transpose() * tp;
        for (int i : c) {
            f.d(i) = std::abs(f.d(i)) * s(i, i);
        }
    }
}

QuasiExtremeChannel from_params(const Eigen::VectorXd &x, int offset, const Mat3 &pre0, const Mat3 &post0) {
    QuasiExtremeChannel qe;
    qe.mu = x(offset);
    qe.nu = x(offset + 1);
    qe.pre = unitary_of_rotation(pre0 * rotation_exp(x.segment<3>(offset + 2)));
    qe.post = unitary_of_rotation(post0 * rotation_exp(x.segment<3>(offset + 5)));
    return qe;
}

void write_residual(const AffineChannel &got, const AffineChannel &want, Eigen::VectorXd &r) {
    for (int i = 0; i < 3; ++i) {
        r(i) = got.t(i) - want.t(i);
        for (int j = 0; j < 3; ++j) {
            r(3 + 3 * i + j) = got.T(i, j) - want.T(i, j);
        }
    }
}

void canonicalize(QuasiExtremeChannel &qe) {
    qe.mu = wrap_angle(qe.mu);
    qe.nu = wrap_angle(qe.nu);
}

std::optional<QuasiExtremeChannel> polish(const AffineChannel &ch, const QuasiExtremeChannel &init, double tol) {
    Mat3 pre0 = rotation_of(init.pre.matrix());
    Mat3 post0 = rotation_of(init.post.matrix());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(8);
    x(0) = init.mu;
    x(1) = init.nu;
    detail::Residual f = [&](const Eigen::VectorXd &v, Eigen::VectorXd &r) {
        write_residual(from_params(v, 0, pre0, post0).affine(), ch, r);
    };
    detail::minimize_least_squares(f, 12, x);
    QuasiExtremeChannel qe = from_params(x, 0, pre0, post0);
    canonicalize(qe);
    if (qe.affine().max_abs_diff(ch) <= tol) {
        return qe;
    }
    return std::nullopt;
}

struct Split {
    CMat42 q;
    double weight = 0;
    double residual = 0;
};

// Finds an orthonormal 4x2 frame Q with tr(Q^dagger A_j Q) = 0 for j = 1..3, i.e. a pair of
// Kraus combinations whose partial sum of K^dagger K is proportional to the identity.
std::optional<Split> newton_split(const std::array<Mat4, 4> &a, CMat42 q) {
    for (int iter = 0; iter < 60; ++iter) {
        Eigen::HouseholderQR<CMat42> qr(q);
        Mat4 full = qr.householderQ();
        q = full.leftCols<2>();
        CMat42 qc = full.rightCols<2>();

        Vec3 r;
        Eigen::Matrix<double, 3, 8> jac;
        for (int j = 0; j < 3; ++j) {
            r(j) = (q.adjoint() * a[j + 1] * q).trace().real();
            Eigen::Matrix2cd m = q.adjoint() * a[j + 1] * qc;
            for (int pp = 0; pp < 2; ++pp) {
                for (int qq = 0; qq < 2; ++qq) {
                    int col = 2 * (2 * pp + qq);
                    jac(j, col) = 2 * m(qq, pp).real();
                    jac(j, col + 1) = -2 * m(qq, pp).imag();
                }
            }
        }
        if (r.norm() < 1e-14) {
            Split s;
            s.q = q;
            s.weight = 0.5 * (q.adjoint() * a[0] * q).trace().real();
            s.residual = r.norm();
            return s;
        }
        // Minimum-norm Gauss-Newton step -J^T (J J^T)^-1 r.
        Mat3 gram = jac * jac.transpose();
        Eigen::SelfAdjointEigenSolver<Mat3> eig(gram);
        if (eig.eigenvalues()(0) < 1e-20) {
            return std::nullopt;
        }
        Eigen::Matrix<double, 8, 1> step = -jac.transpose() * gram.ldlt().solve(r);
        Eigen::Matrix2cd x;
        for (int pp = 0; pp < 2; ++pp) {
            for (int qq = 0; qq < 2; ++qq) {
                int col = 2 * (2 * pp + qq);
                x(pp, qq) = Complex(step(col), step(col + 1));
            }
        }
        q = q + qc * x;
    }
    return std::nullopt;
}

std::optional<ChannelDecomposition> build_from_split(
    const AffineChannel &ch, const std::vector<Mat2> &ops, const Split &split, double tol) {
    Eigen::HouseholderQR<CMat42> qr(split.q);
    Mat4 full = qr.householderQ();
    std::array<std::vector<Mat2>, 2> groups;
    for (int c = 0; c < 4; ++c) {
        Mat2 l = Mat2::Zero();
        for (int k = 0; k < 4; ++k) {
            l += full(k, c) * ops[k];
        }
        groups[c / 2].push_back(l);
    }
    double p = split.weight;
    std::array<double, 2> w{p, 1 - p};
    ChannelDecomposition out;
    out.p = p;
    for (int g = 0; g < 2; ++g) {
        std::vector<Mat2> scaled;
        for (const auto &l : groups[g]) {
            scaled.push_back(l / std::sqrt(w[g]));
        }
        try {
            AffineChannel part = kraus_to_affine(KrausChannel(scaled, 1e-8));
            QuasiExtremeChannel qe = extract_quasi_extreme(part, 1e-10);
            (g == 0 ? out.first : out.second) = qe;
        } catch (const Error &) {
            return std::nullopt;
        }
    }
    if (out.reconstruct().max_abs_diff(ch) > tol) {
        return std::nullopt;
    }
    return out;
}

ChannelDecomposition least_squares_split(
    const AffineChannel &ch, const std::optional<ChannelDecomposition> &seed_guess, std::mt19937_64 &rng,
    const DecomposeOptions &options) {
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    std::normal_distribution<double> normal(0.0, 1.0);
    double best_norm = INFINITY;
    ChannelDecomposition best;
    int attempts = std::max(4, options.max_restarts / 4);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Eigen::VectorXd x(17);
        if (attempt == 0 && seed_guess) {
            x(0) = std::asin(std::clamp(2 * seed_guess->p - 1, -1.0, 1.0));
            x(1) = seed_guess->first.mu;
            x(2) = seed_guess->first.nu;
            x.segment<3>(3) = rotation_log(rotation_of(seed_guess->first.pre.matrix()));
            x.segment<3>(6) = rotation_log(rotation_of(seed_guess->first.post.matrix()));
            x(9) = seed_guess->second.mu;
            x(10) = seed_guess->second.nu;
            x.segment<3>(11) = rotation_log(rotation_of(seed_guess->second.pre.matrix()));
            x.segment<3>(14) = rotation_log(rotation_of(seed_guess->second.post.matrix()));
        } else {
            for (int i = 0; i < 17; ++i) {
                x(i) = uni(rng);
            }
        }
        auto unpack = [](const Eigen::VectorXd &v) {
            ChannelDecomposition d;
            d.p = 0.5 * (1 + std::sin(v(0)));
            Eigen::VectorXd a(8);
            a << v(1), v(2), v.segment<3>(3), v.segment<3>(6);
            Eigen::VectorXd b(8);
            b << v(9), v(10), v.segment<3>(11), v.segment<3>(14);
            d.first = from_params(a, 0, Mat3::Identity(), Mat3::Identity());
            d.second = from_params(b, 0, Mat3::Identity(), Mat3::Identity());
            return d;
        };
        detail::Residual f = [&](const Eigen::VectorXd &v, Eigen::VectorXd &r) {
            write_residual(unpack(v).reconstruct(), ch, r);
        };
        double norm = detail::minimize_least_squares(f, 12, x);
        if (norm < best_norm) {
            best_norm = norm;
            best = unpack(x);
            canonicalize(best.first);
            canonicalize(best.second);
        }
        if (best.reconstruct().max_abs_diff(ch) <= options.tolerance) {
            return best;
        }
    }
    double residual = best.reconstruct().max_abs_diff(ch);
    throw ConvergenceError("decompose_channel: no quasiextreme split found within tolerance", residual);
}

}  // namespace

AffineChannel QuasiExtremeChannel::affine() const {
    AffineChannel core = qe_affine(mu, nu);
    return compose(unitary_channel(post.matrix()), compose(core, unitary_channel(pre.matrix())));
}

KrausChannel QuasiExtremeChannel::kraus() const {
    KrausChannel core = qe_kraus(mu, nu);
    std::vector<Mat2> ops;
    for (const auto &k : core.ops()) {
        ops.push_back(post.matrix() * k * pre.matrix());
    }
    return KrausChannel(ops);
}

AffineChannel ChannelDecomposition::reconstruct() const {
    return mix(p, first.affine(), second.affine());
}

Unitary2 unitary_of_rotation(const Mat3 &r) {
    Eigen::Quaterniond q(r);
    q.normalize();
    Mat2 u = q.w() * Mat2::Identity() - kI * (q.x() * pauli(1) + q.y() * pauli(2) + q.z() * pauli(3));
    return Unitary2::nearest(u);
}

DiagonalForm diagonalize_affine(const AffineChannel &ch) {
    Mat3 off = ch.T;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() <= 1e-14 * std::max(1.0, ch.T.cwiseAbs().maxCoeff())) {
        return {Unitary2(), ch, Unitary2()};
    }
    ProperSvd f = proper_svd(ch.T);
    DiagonalForm out;
    out.post = unitary_of_rotation(f.p);
    out.pre = unitary_of_rotation(f.q);
    out.core.T = f.d.asDiagonal();
    out.core.t = f.p.transpose() * ch.t;
    return out;
}

AffineChannel qe_affine(double mu, double nu) {
    AffineChannel ch;
    ch.t = Vec3(0, 0, std::sin(mu) * std::sin(nu));
    ch.T = Vec3(std::cos(nu), std::cos(mu), std::cos(mu) * std::cos(nu)).asDiagonal();
    return ch;
}

KrausChannel qe_kraus(double mu, double nu) {
    double a = (mu + nu) / 2;
    double b = (mu - nu) / 2;
    Mat2 k0;
    k0 << std::cos(b), 0, 0, std::cos(a);
    Mat2 k1;
    k1 << 0, std::sin(a), std::sin(b), 0;
    return KrausChannel({k0, k1});
}

QuasiExtremeChannel extract_quasi_extreme(const AffineChannel &ch, double tol) {
    ProperSvd f = proper_svd(ch.T);
    Vec3 tp = f.p.transpose() * ch.t;
    align_degenerate_blocks(f, tp);

    // Axis k carries the product entry and the translation.
    int best_k = 2;
    double best_score = INFINITY;
    for (int k = 2; k >= 0; --k) {
        int i = (k + 1) % 3;
        int j = (k + 2) % 3;
        double expected_t = std::sqrt(std::max(0.0, (1 - f.d(i) * f.d(i)) * (1 - f.d(j) * f.d(j))));
        double score = std::abs(f.d(k) - f.d(i) * f.d(j)) + std::abs(tp(i)) + std::abs(tp(j)) +
                       std::abs(std::abs(tp(k)) - expected_t);
        if (score < best_score - 1e-12) {
            best_score = score;
            best_k = k;
        }
    }
    std::array<int, 2> rest{(best_k + 1) % 3, (best_k + 2) % 3};
    if (rest[0] > rest[1]) {
        std::swap(rest[0], rest[1]);
    }
    if (std::abs(f.d(rest[1])) > std::abs(f.d(rest[0])) + 1e-12) {
        std::swap(rest[0], rest[1]);
    }
    Mat3 g = Mat3::Zero();
    g(rest[0], 0) = 1;
    g(rest[1], 1) = 1;
    g(best_k, 2) = 1;
    if (g.determinant() < 0) {
        g.col(0) *= -1;
    }
    f.p = f.p * g;
    f.q = g.transpose() * f.q;
    Vec3 d = g.transpose() * f.d.asDiagonal() * g * Vec3::Ones();
    tp = g.transpose() * tp;

    QuasiExtremeChannel qe;
    qe.nu = std::acos(std::clamp(d(0), -1.0, 1.0));
    qe.mu = std::acos(std::clamp(d(1), -1.0, 1.0));
    if (tp(2) < 0) {
        qe.mu = -qe.mu;
    }
    qe.post = unitary_of_rotation(f.p);
    qe.pre = unitary_of_rotation(f.q);
    canonicalize(qe);

    double residual = qe.affine().max_abs_diff(ch);
    if (residual <= tol) {
        return qe;
    }
    if (auto polished = polish(ch, qe, tol)) {
        return *polished;
    }
    throw ConvergenceError("extract_quasi_extreme: channel is not quasiextreme", residual);
}

ChannelDecomposition decompose_channel(const AffineChannel &ch, const DecomposeOptions &options) {
    CptpReport report = validate_cptp(ch);
    if (!report.valid) {
        throw ValidationError("decompose_channel: " + report.diagnostic());
    }
    ChoiMatrix choi = affine_to_choi(ch);
    std::array<double, 4> ev = choi.eigenvalues();

    if (ev[2] <= kRankTol) {
        std::vector<Mat2> ops = choi_to_kraus_ops(choi);
        ChannelDecomposition out;
        out.first.post = Unitary2::nearest(ops.front());
        out.second = out.first;
        if (out.reconstruct().max_abs_diff(ch) <= options.tolerance) {
            return out;
        }
    }
    if (ev[1] <= kRankTol) {
        try {
            ChannelDecomposition out;
            out.first = extract_quasi_extreme(ch, std::min(options.tolerance, 1e-10));
            out.second = out.first;
            return out;
        } catch (const ConvergenceError &) {
        }
    }

    std::vector<Mat2> ops = choi_to_kraus_ops(choi, -1.0);
    while (ops.size() < 4) {
        ops.push_back(Mat2::Zero());
    }
    std::array<Mat4, 4> a;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            for (int l = 0; l < 4; ++l) {
                a[j](k, l) = (pauli(j) * ops[k].adjoint() * ops[l]).trace();
            }
        }
    }

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::optional<ChannelDecomposition> fallback;
    for (int attempt = 0; attempt < options.max_restarts; ++attempt) {
        CMat42 start;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 2; ++j) {
                double re = normal(rng);
                double im = normal(rng);
                start(i, j) = Complex(re, im);
            }
        }
        std::optional<Split> split = newton_split(a, start);
        if (!split) {
            continue;
        }
        if (split->weight < 1e-12 || split->weight > 1 - 1e-12) {
            continue;
        }
        auto built = build_from_split(ch, ops, *split, options.tolerance);
        if (!built) {
            continue;
        }
        if (split->weight >= kMinWeight && split->weight <= 1 - kMinWeight) {
            return *built;
        }
        if (!fallback) {
            fallback = built;
        }
    }
    if (fallback) {
        return *fallback;
    }
    return least_squares_split(ch, fallback, rng, options);
}

}  // namespace qchan
