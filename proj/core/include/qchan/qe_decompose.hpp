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

#ifndef QCHAN_QE_DECOMPOSE_HPP
#define QCHAN_QE_DECOMPOSE_HPP

#include <cstdint>

#include "qchan/channel.hpp"

namespace qchan {

/// Quasiextreme channel in its diagonalized form: `pre` acts first, then the core map
/// t = (0, 0, sin mu sin nu), T = diag(cos nu, cos mu, cos mu cos nu), then `post`.
struct QuasiExtremeChannel {
    Unitary2 pre;
    Unitary2 post;
    double mu = 0;
    double nu = 0;

    AffineChannel affine() const;
    /// Kraus pair post * K_i * pre with the canonical K0, K1.
    KrausChannel kraus() const;
};

/// source = p * first + (1 - p) * second.
struct ChannelDecomposition {
    double p = 1;
    QuasiExtremeChannel first;
    QuasiExtremeChannel second;

    AffineChannel reconstruct() const;
};

/// ch = unitary_channel(post) o core o unitary_channel(pre), core.T diagonal.
struct DiagonalForm {
    Unitary2 post;
    AffineChannel core;
    Unitary2 pre;
};

struct DecomposeOptions {
    /// Seeds the split search and the least-squares fallback; equal seeds give equal results.
    std::uint64_t seed = 0;
    /// Acceptance threshold on the entrywise reconstruction error.
    double tolerance = 1e-8;
    int max_restarts = 64;
};

/// SU(2) element whose adjoint action is the proper rotation r.
Unitary2 unitary_of_rotation(const Mat3 &r);

DiagonalForm diagonalize_affine(const AffineChannel &ch);

AffineChannel qe_affine(double mu, double nu);

/// K0 = diag(cos b, cos a), K1 = [[0, sin a], [sin b, 0]] with a = (mu + nu) / 2, b = (mu - nu) / 2.
KrausChannel qe_kraus(double mu, double nu);

/// Canonical descriptor of a channel with Choi rank <= 2. Angles land in (-pi, pi].
/// Throws ConvergenceError when the channel is not quasiextreme within `tol`.
QuasiExtremeChannel extract_quasi_extreme(const AffineChannel &ch, double tol = 1e-10);

/// Splits a CPTP channel into a convex combination of two quasiextreme channels.
/// Throws ValidationError for non-CP input and ConvergenceError (with the residual)
/// if no split reproducing the input within options.tolerance was found.
ChannelDecomposition decompose_channel(const AffineChannel &ch, const DecomposeOptions &options = {});

}  // namespace qchan

#endif  // QCHAN_QE_DECOMPOSE_HPP
