// Copyright 2026 The cgpkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgpkit/ensembles.hpp"

#include <cmath>
#include <sstream>

namespace cgpkit {

const char* scm_kind_name(ScmKind kind) {
    switch (kind) {
        case ScmKind::haar: return "haar";
        case ScmKind::vertex: return "vertex";
        case ScmKind::perm_invariant: return "perm_invariant";
        case ScmKind::dirichlet: return "dirichlet";
        case ScmKind::empirical: return "empirical";
    }
    throw ValidationError("scm_kind_name: unknown kind");
}

ScmKind scm_kind_from_name(const std::string& name) {
    if (name == "haar") return ScmKind::haar;
    if (name == "vertex") return ScmKind::vertex;
    if (name == "perm_invariant") return ScmKind::perm_invariant;
    if (name == "dirichlet") return ScmKind::dirichlet;
    if (name == "empirical") return ScmKind::empirical;
    throw ValidationError("unknown SCM kind: " + name);
}

SimplexCorrelationMatrix::SimplexCorrelationMatrix(RealMatrix entries,
                                                   ScmProvenance provenance,
                                                   double tolerance)
    : entries_(std::move(entries)), provenance_(provenance) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw ValidationError("SimplexCorrelationMatrix: matrix must be square");
    }
    if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("SimplexCorrelationMatrix: matrix is not symmetric");
    }
    if (entries_.minCoeff() < -1e-12 || entries_.maxCoeff() > 1.0 + 1e-12) {
        throw ValidationError("SimplexCorrelationMatrix: entries must lie in [0, 1]");
    }
    if (std::abs(entries_.sum() - 1.0) > tolerance) {
        std::ostringstream msg;
        msg << "SimplexCorrelationMatrix: entries sum to " << entries_.sum()
            << ", expected 1";
        throw ValidationError(msg.str());
    }
    double lambda_min = min_eigenvalue(entries_, 1e-8);
    if (lambda_min < -tol::kCross) {
        throw ValidationError("SimplexCorrelationMatrix: matrix is not PSD");
    }
}

SimplexCorrelationMatrix scm_haar(Index d) {
    if (d < 1) {
        throw ValidationError("scm_haar: dimension must be >= 1");
    }
    const auto dd = static_cast<double>(d);
    RealMatrix s = RealMatrix::Constant(d, d, 1.0 / (dd * (dd + 1.0)));
    s.diagonal().array() *= 2.0;
    ScmProvenance prov;
    prov.kind = ScmKind::haar;
    return SimplexCorrelationMatrix(std::move(s), prov);
}

SimplexCorrelationMatrix scm_vertex(Index d) {
    if (d < 1) {
        throw ValidationError("scm_vertex: dimension must be >= 1");
    }
    RealMatrix s = RealMatrix::Identity(d, d) / static_cast<double>(d);
    ScmProvenance prov;
    prov.kind = ScmKind::vertex;
    return SimplexCorrelationMatrix(std::move(s), prov);
}

SimplexCorrelationMatrix scm_perm_invariant(Index d, double alpha) {
    if (d < 1) {
        throw ValidationError("scm_perm_invariant: dimension must be >= 1");
    }
    const auto dd = static_cast<double>(d);
    if (alpha < -1e-12 || alpha > 1.0 / dd + 1e-12) {
        std::ostringstream msg;
        msg << "scm_perm_invariant: alpha = " << alpha << " outside [0, 1/d] = [0, "
            << 1.0 / dd << "]";
        throw ValidationError(msg.str());
    }
    // alpha I + (1/d - alpha) |u><u| with |u><u| = J/d.
    RealMatrix s = RealMatrix::Constant(d, d, (1.0 / dd - alpha) / dd);
    s.diagonal().array() += alpha;
    ScmProvenance prov;
    prov.kind = ScmKind::perm_invariant;
    prov.alpha = alpha;
    return SimplexCorrelationMatrix(std::move(s), prov);
}

SimplexCorrelationMatrix scm_dirichlet_mc(Index d, const std::vector<double>& params,
                                          std::uint64_t n_samples, std::uint64_t seed) {
    if (d < 1 || params.size() != static_cast<std::size_t>(d)) {
        throw ValidationError("scm_dirichlet_mc: params length must equal d");
    }
    if (n_samples == 0) {
        throw ValidationError("scm_dirichlet_mc: n_samples must be positive");
    }
    StreamRng rng(seed);
    RealMatrix acc = RealMatrix::Zero(d, d);
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        std::vector<double> p = rng.dirichlet(params);
        for (Index i = 0; i < d; ++i) {
            for (Index j = 0; j < d; ++j) {
                acc(i, j) += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
            }
        }
    }
    acc /= static_cast<double>(n_samples);
    ScmProvenance prov;
    prov.kind = ScmKind::dirichlet;
    prov.params = params;
    prov.n_samples = n_samples;
    prov.seed = seed;
    return SimplexCorrelationMatrix(std::move(acc), prov);
}

SimplexCorrelationMatrix scm_empirical(RealMatrix entries, std::uint64_t n_samples) {
    ScmProvenance prov;
    prov.kind = ScmKind::empirical;
    prov.n_samples = n_samples;
    return SimplexCorrelationMatrix(std::move(entries), prov);
}

SimplexCorrelationMatrix scm_conjugate(const SimplexCorrelationMatrix& s,
                                       const std::vector<Index>& permutation) {
    const Index d = s.dim();
    if (static_cast<Index>(permutation.size()) != d) {
        throw DimensionMismatch("scm_conjugate: permutation length must equal dimension");
    }
    std::vector<char> seen(static_cast<std::size_t>(d), 0);
    for (Index i = 0; i < d; ++i) {
        Index t = permutation[static_cast<std::size_t>(i)];
        if (t < 0 || t >= d || seen[static_cast<std::size_t>(t)]) {
            throw ValidationError("scm_conjugate: not a bijection on {0..d-1}");
        }
        seen[static_cast<std::size_t>(t)] = 1;
    }
    RealMatrix out(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            out(permutation[static_cast<std::size_t>(i)],
                permutation[static_cast<std::size_t>(j)]) = s.entries()(i, j);
        }
    }
    ScmProvenance prov = s.provenance();
    prov.kind = ScmKind::empirical;
    return SimplexCorrelationMatrix(std::move(out), prov);
}

double cgp_ensemble(const CoherenceMatrix& c, const SimplexCorrelationMatrix& s) {
    if (c.dim() != s.dim()) {
        throw DimensionMismatch("cgp_ensemble: dimensions differ");
    }
    double v = c.entries().cwiseProduct(s.entries()).sum();
    return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

double cgp_qubit_symmetric(Complex a, Complex b, double alpha) {
    double norm = std::norm(a) + std::norm(b);
    if (std::abs(norm - 1.0) > 1e-10) {
        throw ValidationError("cgp_qubit_symmetric: |a|² + |b|² must equal 1");
    }
    if (alpha < 0.25 - 1e-12 || alpha > 0.5 + 1e-12) {
        throw ValidationError("cgp_qubit_symmetric: alpha outside [1/4, 1/2]");
    }
    double cross = 2.0 * std::abs(a) * std::abs(b);
    return (2.0 * alpha - 0.5) * cross * cross;
}

MonteCarloEstimate haar_state_mc_oracle(const Channel& ch, const BasisProjectorSet& basis,
                                        std::uint64_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) {
        throw ValidationError("haar_state_mc_oracle: n_samples must be positive");
    }
    if (ch.dim() != basis.dim()) {
        throw DimensionMismatch("haar_state_mc_oracle: channel and basis dimensions differ");
    }
    Channel framed = basis.is_computational() ? ch : ch.conjugated_by(basis.basis_unitary());
    const Index d = framed.dim();

    StreamRng rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        ComplexVector psi = random_pure_state(d, rng);
        ComplexVector p = psi.cwiseAbs2().cast<Complex>();
        ComplexMatrix out = framed.apply(ComplexMatrix(p.asDiagonal()));
        double off_sq = out.squaredNorm() - out.diagonal().squaredNorm();
        double val = std::max(0.0, off_sq);
        sum += val;
        sum_sq += val * val;
    }
    const auto n = static_cast<double>(n_samples);
    double mean = sum / n;
    double var = 0.0;
    if (n_samples > 1) {
        var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    }
    MonteCarloEstimate est;
    est.value = mean;
    est.std_error = std::sqrt(var / n);
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

}  // namespace cgpkit
