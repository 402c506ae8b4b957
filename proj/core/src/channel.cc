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

#include "qchan/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qchan/error.hpp"

namespace qchan {

const Mat2 &pauli(int k) {
    static const std::array<Mat2, 4> kPaulis = [] {
        std::array<Mat2, 4> p;
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, -kI, kI, 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return kPaulis.at(static_cast<std::size_t>(k));
}

double default_tolerance() {
    static const double tol = [] {
        if (const char *env = std::getenv("QCHAN_TOL")) {
            char *end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && std::isfinite(v) && v > 0) {
                return v;
            }
        }
        return 1e-9;
    }();
    return tol;
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Validation:
            return 2;
        case ErrorKind::Budget:
            return 3;
        case ErrorKind::Io:
            return 4;
        default:
            return 1;
    }
}

namespace {

double max_abs(const Mat2 &m) {
    return m.cwiseAbs().maxCoeff();
}

// Linear extension of the affine map to all 2x2 operators: E(c0 I + c.sigma) = c0 (I + t.sigma) + (T c).sigma.
Mat2 apply_affine_operator(const AffineChannel &ch, const Mat2 &m) {
    Complex c0 = m.trace() / 2.0;
    Eigen::Vector3cd c;
    for (int j = 0; j < 3; j++) {
        c[j] = (pauli(j + 1) * m).trace() / 2.0;
    }
    Eigen::Vector3cd out = ch.T.cast<Complex>() * c + c0 * ch.t.cast<Complex>();
    Mat2 r = c0 * pauli(0);
    for (int i = 0; i < 3; i++) {
        r += out[i] * pauli(i + 1);
    }
    return r;
}

Mat4 choi_from_ops(std::span<const Mat2> ops) {
    Mat4 c = Mat4::Zero();
    for (const auto &k : ops) {
        Eigen::Vector4cd v;
        for (int i = 0; i < 2; i++) {
            for (int a = 0; a < 2; a++) {
                v[2 * i + a] = k(a, i);
            }
        }
        c += v * v.adjoint();
    }
    return c / 2.0;
}

}  // namespace

BlochVector::BlochVector(const Vec3 &b, double tol) : b_(b) {
    if (!b.allFinite() || b.norm() > 1.0 + tol) {
        std::ostringstream out;
        out << "Bloch vector outside the unit ball: |b| = " << b.norm();
        throw ValidationError(out.str());
    }
}

DensityMatrix::DensityMatrix(const Mat2 &m, double tol) : m_(m) {
    if (!m.allFinite()) {
        throw ValidationError("density matrix has non-finite entries");
    }
    if (max_abs(m - m.adjoint()) > tol) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0)) > tol) {
        throw ValidationError("density matrix trace is not 1");
    }
    Mat2 h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat2> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()[0] < -tol) {
        std::ostringstream out;
        out << "density matrix has negative eigenvalue " << es.eigenvalues()[0];
        throw ValidationError(out.str());
    }
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector &b) {
    Mat2 m = pauli(0);
    for (int i = 0; i < 3; i++) {
        m += b.vec()[i] * pauli(i + 1);
    }
    return DensityMatrix(m / 2.0);
}

DensityMatrix DensityMatrix::pure(const Eigen::Vector2cd &psi) {
    Eigen::Vector2cd n = psi.normalized();
    return DensityMatrix(n * n.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(pauli(0) / 2.0);
}

BlochVector DensityMatrix::bloch() const {
    Vec3 b;
    for (int i = 0; i < 3; i++) {
        b[i] = (pauli(i + 1) * m_).trace().real();
    }
    return BlochVector(b);
}

Unitary2::Unitary2(const Mat2 &u, double tol) : u_(u) {
    if (!u.allFinite() || max_abs(u.adjoint() * u - Mat2::Identity()) > tol) {
        throw ValidationError("matrix is not unitary");
    }
}

Unitary2 Unitary2::nearest(const Mat2 &m) {
    Eigen::JacobiSVD<Mat2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return Unitary2(svd.matrixU() * svd.matrixV().adjoint(), Trusted{});
}

Unitary2 Unitary2::adjoint() const {
    return Unitary2(u_.adjoint(), Trusted{});
}

Unitary2 operator*(const Unitary2 &a, const Unitary2 &b) {
    return Unitary2(a.u_ * b.u_, Unitary2::Trusted{});
}

KrausChannel::KrausChannel(std::vector<Mat2> ops, double tol) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw ValidationError("Kraus channel needs at least one operator");
    }
    for (const auto &k : ops_) {
        if (!k.allFinite()) {
            throw ValidationError("Kraus operator has non-finite entries");
        }
    }
    if (tp_residual() > tol) {
        std::ostringstream out;
        out << "Kraus operators are not trace preserving: max |sum K^dag K - I| = " << tp_residual();
        throw ValidationError(out.str());
    }
    if (ops_.size() > 4) {
        ops_ = choi_to_kraus_ops(ChoiMatrix{choi_from_ops(ops_)}, 1e-15);
    }
}

double KrausChannel::tp_residual() const {
    Mat2 s = Mat2::Zero();
    for (const auto &k : ops_) {
        s += k.adjoint() * k;
    }
    return max_abs(s - Mat2::Identity());
}

double AffineChannel::max_abs_diff(const AffineChannel &other) const {
    return std::max((t - other.t).cwiseAbs().maxCoeff(), (T - other.T).cwiseAbs().maxCoeff());
}

std::array<double, 4> ChoiMatrix::eigenvalues() const {
    Mat4 h = (c + c.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat4> es(h, Eigen::EigenvaluesOnly);
    return {es.eigenvalues()[0], es.eigenvalues()[1], es.eigenvalues()[2], es.eigenvalues()[3]};
}

Mat2 ChoiMatrix::partial_trace_output() const {
    Mat2 p;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            p(i, j) = c(2 * i, 2 * j) + c(2 * i + 1, 2 * j + 1);
        }
    }
    return p;
}

std::string CptpReport::diagnostic() const {
    std::ostringstream out;
    if (valid) {
        out << "CPTP: Choi eigenvalues >= -" << tolerance;
        return out.str();
    }
    out << "not completely positive: Choi eigenvalue(s)";
    for (double v : violations) {
        out << " " << v;
    }
    out << " below -" << tolerance;
    return out.str();
}

DensityMatrix kraus_apply(const KrausChannel &ch, const DensityMatrix &rho) {
    Mat2 out = Mat2::Zero();
    for (const auto &k : ch.ops()) {
        out += k * rho.matrix() * k.adjoint();
    }
    return DensityMatrix(out);
}

AffineChannel kraus_to_affine(const KrausChannel &ch) {
    std::array<Mat2, 4> images;
    for (int j = 0; j < 4; j++) {
        images[j] = Mat2::Zero();
        for (const auto &k : ch.ops()) {
            images[j] += k * pauli(j) * k.adjoint();
        }
    }
    AffineChannel a;
    for (int i = 0; i < 3; i++) {
        a.t[i] = 0.5 * (pauli(i + 1) * images[0]).trace().real();
        for (int j = 0; j < 3; j++) {
            a.T(i, j) = 0.5 * (pauli(i + 1) * images[j + 1]).trace().real();
        }
    }
    return a;
}

BlochVector affine_apply(const AffineChannel &ch, const BlochVector &b, double tol) {
    Vec3 out = ch.T * b.vec() + ch.t;
    if (out.norm() > 1.0 + tol) {
        std::ostringstream msg;
        msg << "affine map sends a state outside the Bloch ball (|b'| = " << out.norm()
            << "); the channel is not CPTP";
        throw ValidationError(msg.str());
    }
    return BlochVector(out, tol);
}

ChoiMatrix affine_to_choi(const AffineChannel &ch) {
    ChoiMatrix choi;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            Mat2 e = Mat2::Zero();
            e(i, j) = 1.0;
            Mat2 image = apply_affine_operator(ch, e);
            choi.c.block<2, 2>(2 * i, 2 * j) = image / 2.0;
        }
    }
    return choi;
}

ChoiMatrix kraus_to_choi(const KrausChannel &ch) {
    return ChoiMatrix{choi_from_ops(ch.ops())};
}

AffineChannel choi_to_affine(const ChoiMatrix &choi) {
    auto image = [&](int i, int j) -> Mat2 { return 2.0 * choi.c.block<2, 2>(2 * i, 2 * j); };
    std::array<Mat2, 4> images;
    images[0] = image(0, 0) + image(1, 1);
    images[1] = image(0, 1) + image(1, 0);
    images[2] = -kI * image(0, 1) + kI * image(1, 0);
    images[3] = image(0, 0) - image(1, 1);
    AffineChannel a;
    for (int i = 0; i < 3; i++) {
        a.t[i] = 0.5 * (pauli(i + 1) * images[0]).trace().real();
        for (int j = 0; j < 3; j++) {
            a.T(i, j) = 0.5 * (pauli(i + 1) * images[j + 1]).trace().real();
        }
    }
    return a;
}

std::vector<Mat2> choi_to_kraus_ops(const ChoiMatrix &choi, double tol) {
    Mat4 h = (choi.c + choi.c.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat4> es(h);
    std::vector<Mat2> ops;
    for (int k = 3; k >= 0; k--) {
        double lambda = es.eigenvalues()[k];
        if (lambda <= tol) {
            continue;
        }
        double scale = std::sqrt(2.0 * lambda);
        Mat2 op;
        for (int i = 0; i < 2; i++) {
            for (int a = 0; a < 2; a++) {
                op(a, i) = scale * es.eigenvectors()(2 * i + a, k);
            }
        }
        ops.push_back(op);
    }
    return ops;
}

CptpReport validate_cptp(const AffineChannel &ch, double tol) {
    CptpReport report;
    report.tolerance = tol;
    if (!ch.t.allFinite() || !ch.T.allFinite()) {
        report.violations.push_back(std::nan(""));
        return report;
    }
    report.choi_eigenvalues = affine_to_choi(ch).eigenvalues();
    for (double v : report.choi_eigenvalues) {
        if (v < -tol) {
            report.violations.push_back(v);
        }
    }
    report.valid = report.violations.empty();
    return report;
}

double channel_distance(const AffineChannel &a, const AffineChannel &b) {
    // Maximize f(v) = |A v + c|^2 on the unit sphere. Stationary points satisfy
    // (lambda - M) v = g with M = A^T A, g = A^T c; the global maximum has lambda >= max eig(M).
    const Mat3 A = a.T - b.T;
    const Vec3 c = a.t - b.t;
    const Mat3 M = A.transpose() * A;
    const Vec3 g = A.transpose() * c;
    auto f = [&](const Vec3 &v) { return (A * v + c).squaredNorm(); };

    Eigen::SelfAdjointEigenSolver<Mat3> es(M);
    const Vec3 m = es.eigenvalues();
    const Mat3 Q = es.eigenvectors();
    const Vec3 gq = Q.transpose() * g;
    const double m_max = m[2];
    const double scale = std::max({1.0, m_max, g.norm()});

    std::vector<Vec3> candidates;
    for (int k = 0; k < 3; k++) {
        candidates.push_back(Q.col(k));
        candidates.push_back(-Q.col(k));
    }
    if (c.norm() > 0) {
        candidates.push_back(c.normalized());
    }

    auto secular = [&](double lambda) {
        double s = 0;
        for (int k = 0; k < 3; k++) {
            s += gq[k] * gq[k] / ((lambda - m[k]) * (lambda - m[k]));
        }
        return s;
    };
    if (g.norm() > 1e-300) {
        double lo = m_max;
        double hi = m_max + g.norm();
        for (int it = 0; it < 200 && hi - lo > 1e-17 * scale; it++) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) {
                break;
            }
            if (secular(mid) > 1.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Vec3 vq;
        for (int k = 0; k < 3; k++) {
            vq[k] = hi > m[k] ? gq[k] / (hi - m[k]) : 0.0;
        }
        if (vq.norm() > 0) {
            candidates.push_back((Q * vq).normalized());
        }
    }
    // Hard case: g orthogonal to the top eigenspace.
    {
        Vec3 vq = Vec3::Zero();
        for (int k = 0; k < 3; k++) {
            if (m_max - m[k] > 1e-12 * scale) {
                vq[k] = gq[k] / (m_max - m[k]);
            }
        }
        double rest = 1.0 - vq.squaredNorm();
        if (rest >= 0) {
            for (double sign : {1.0, -1.0}) {
                Vec3 w = vq;
                w[2] += sign * std::sqrt(rest);
                candidates.push_back(Q * w);
            }
        }
    }

    Vec3 best = candidates.front();
    for (const auto &v : candidates) {
        if (f(v) > f(best)) {
            best = v;
        }
    }
    // f is convex, so v <- grad f / |grad f| never decreases it.
    for (int it = 0; it < 64; it++) {
        Vec3 grad = M * best + g;
        if (grad.norm() == 0) {
            break;
        }
        Vec3 next = grad.normalized();
        if (f(next) <= f(best)) {
            break;
        }
        best = next;
    }
    return std::sqrt(f(best));
}

double unitary_distance(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v, PhaseMode mode) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw ValidationError("unitary_distance: dimension mismatch");
    }
    if (mode == PhaseMode::Strict) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u - v);
        return svd.singularValues()[0];
    }
    // ||U - e^{i phi} V|| = max_k |1 - e^{i(phi + theta_k)}| over eigenphases of V U^dagger.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v * u.adjoint(), false);
    std::vector<double> phases;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); k++) {
        double p = std::arg(es.eigenvalues()[k]);
        phases.push_back(p < 0 ? p + 2 * kPi : p);
    }
    std::sort(phases.begin(), phases.end());
    double largest_gap = phases.front() + 2 * kPi - phases.back();
    for (std::size_t k = 1; k < phases.size(); k++) {
        largest_gap = std::max(largest_gap, phases[k] - phases[k - 1]);
    }
    double arc = std::max(0.0, 2 * kPi - largest_gap);
    return 2.0 * std::sin(arc / 4.0);
}

double unitary_distance(const Mat2 &u, const Mat2 &v, PhaseMode mode) {
    return unitary_distance(Eigen::MatrixXcd(u), Eigen::MatrixXcd(v), mode);
}

Mat3 rotation_of(const Mat2 &u) {
    Mat3 r;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            r(i, j) = 0.5 * (pauli(i + 1) * u * pauli(j + 1) * u.adjoint()).trace().real();
        }
    }
    return r;
}

AffineChannel unitary_channel(const Mat2 &u) {
    return AffineChannel{Vec3::Zero(), rotation_of(u)};
}

AffineChannel compose(const AffineChannel &second, const AffineChannel &first) {
    return AffineChannel{second.T * first.t + second.t, second.T * first.T};
}

AffineChannel mix(double p, const AffineChannel &a, const AffineChannel &b) {
    return AffineChannel{p * a.t + (1 - p) * b.t, p * a.T + (1 - p) * b.T};
}

}  // namespace qchan
