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

#include "cgpkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cgpkit/additive.hpp"
#include "cgpkit/assignment.hpp"
#include "cgpkit/channels.hpp"
#include "cgpkit/coherence.hpp"
#include "cgpkit/ensembles.hpp"
#include "cgpkit/opspace.hpp"

namespace cgpkit {

namespace {

// Fixed per-check RNG stream indices, so adding or reordering checks never
// perturbs another check's random draws.
enum Stream : std::uint64_t {
    kStreamDephase = 10,
    kStreamBasis = 11,
    kStreamJacobi = 12,
    kStreamKraus = 20,
    kStreamApply = 21,
    kStreamIncoherentCommute = 22,
    kStreamTensorCompose = 23,
    kStreamCoherenceKernel = 30,
    kStreamConvexity = 31,
    kStreamPostMonotone = 32,
    kStreamPostInvariance = 33,
    kStreamPreConjugation = 34,
    kStreamSandwich = 35,
    kStreamFaithfulness = 36,
    kStreamOpnormRoute = 37,
    kStreamGeometricMin = 38,
    kStreamSwapProtocol = 39,
    kStreamScmStructure = 40,
    kStreamScmSandwich = 41,
    kStreamScmLowerBound = 42,
    kStreamPushforward = 43,
    kStreamPermInvariantForm = 44,
    kStreamAlphaMonotoneScm = 45,
    kStreamHaarMc = 46,
    kStreamAdditivity = 50,
    kStreamAdditiveInvariance = 51,
    kStreamRenyiChain = 52,
    kStreamAdditiveRange = 53,
    kStreamAlphaMonotone = 54,
    kStreamBruteForce = 60,
    kStreamShift = 61,
    kStreamTransferRange = 62,
};

double psd_violation(const RealMatrix& m) {
    return std::max(0.0, -min_eigenvalue(m, 1e-8));
}

double hermitian_min_eig(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Channel random_channel(Index d, StreamRng& rng) {
    int n_kraus = 1 + static_cast<int>(rng.uniform_index(4));
    return random_unital_channel(d, n_kraus, rng);
}

struct Battery {
    const VerifyOptions& opt;
    std::vector<CheckResult> results;

    void add(std::string name, int instances, double max_violation, double tolerance) {
        CheckResult r;
        r.name = std::move(name);
        r.instances = instances;
        r.max_violation = max_violation;
        r.tolerance = tolerance;
        r.pass = max_violation <= tolerance;
        results.push_back(std::move(r));
    }

    void dephase_pythagoras() {
        StreamRng rng(opt.seed, kStreamDephase);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                ComplexMatrix x = random_hermitian(d, rng);
                ComplexMatrix dx = dephase(x);
                ComplexMatrix qx = q_part(x);
                double lhs = x.squaredNorm();
                double rhs = dx.squaredNorm() + qx.squaredNorm();
                v = std::max(v, std::abs(lhs - rhs));
                v = std::max(v, (dephase(dx) - dx).cwiseAbs().maxCoeff());
                v = std::max(v, std::abs(hs_inner(dx, qx)));
                v = std::max(v, std::abs(x.trace() - dx.trace()));
            }
        }
        add("opspace.dephase-pythagoras", n, v, 1e-10);
    }

    void basis_frames() {
        StreamRng rng(opt.seed, kStreamBasis);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < 10; ++t, ++n) {
                BasisProjectorSet basis(random_haar_unitary(d, rng));
                ComplexMatrix x = random_hermitian(d, rng);
                v = std::max(v, (basis.from_frame(basis.to_frame(x)) - x).cwiseAbs().maxCoeff());
                ComplexMatrix sum = ComplexMatrix::Zero(d, d);
                for (Index i = 0; i < d; ++i) {
                    ComplexMatrix pi = basis.projector(i);
                    sum += pi;
                    v = std::max(v, (pi * pi - pi).cwiseAbs().maxCoeff());
                    for (Index j = 0; j < i; ++j) {
                        v = std::max(v, (pi * basis.projector(j)).cwiseAbs().maxCoeff());
                    }
                }
                v = std::max(v, (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
                ComplexMatrix dx = dephase(x, basis);
                v = std::max(v, (dephase(dx, basis) - dx).cwiseAbs().maxCoeff());
                v = std::max(v, std::abs(hs_inner(dx, q_part(x, basis))));
            }
        }
        add("opspace.basis-frames", n, v, 1e-9);
    }

    void jacobi_reconstruction() {
        StreamRng rng(opt.seed, kStreamJacobi);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                ComplexMatrix h = random_hermitian(d, rng);
                RealMatrix m = h.real();
                m = 0.5 * (m + RealMatrix(m.transpose()));
                SymmetricEigs e = symmetric_eigs(m);
                RealMatrix recon = e.eigenvectors *
                                   e.eigenvalues.asDiagonal() *
                                   e.eigenvectors.transpose();
                v = std::max(v, (recon - m).cwiseAbs().maxCoeff());
                RealMatrix vtv = e.eigenvectors.transpose() * e.eigenvectors;
                v = std::max(v, (vtv - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
                for (Index i = 0; i + 1 < d; ++i) {
                    v = std::max(v, std::max(0.0, e.eigenvalues(i + 1) - e.eigenvalues(i)));
                }
            }
        }
        add("opspace.jacobi-reconstruction", n, v, 1e-10);
    }

    void kraus_sums() {
        StreamRng rng(opt.seed, kStreamKraus);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                ComplexMatrix tp = ComplexMatrix::Zero(d, d);
                ComplexMatrix un = ComplexMatrix::Zero(d, d);
                for (const auto& k : ch.kraus_ops()) {
                    tp += k.adjoint() * k;
                    un += k * k.adjoint();
                }
                ComplexMatrix eye = ComplexMatrix::Identity(d, d);
                v = std::max(v, (tp - eye).norm());
                v = std::max(v, (un - eye).norm());
            }
        }
        add("channels.kraus-sums", n, v, 1e-8);
    }

    void apply_trace_psd() {
        StreamRng rng(opt.seed, kStreamApply);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                ComplexMatrix rho = random_density_matrix(d, rng);
                ComplexMatrix out = ch.apply(rho);
                v = std::max(v, std::abs(out.trace() - rho.trace()));
                v = std::max(v, (out - out.adjoint()).cwiseAbs().maxCoeff());
                v = std::max(v, std::max(0.0, -hermitian_min_eig(out)));
            }
        }
        add("channels.apply-trace-psd", n, v, 1e-9);
    }

    void incoherent_commutes() {
        StreamRng rng(opt.seed, kStreamIncoherentCommute);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                Channel w = (t % 2 == 0)
                                ? Channel::incoherent_unitary(random_incoherent_spec(d, rng))
                                : random_incoherent_mixture(d, 3, rng);
                ComplexMatrix x = random_hermitian(d, rng);
                ComplexMatrix lhs = w.apply(dephase(x));
                ComplexMatrix rhs = dephase(w.apply(x));
                v = std::max(v, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        }
        add("channels.incoherent-commutes-dephase", n, v, 1e-10);
    }

    void tensor_compose() {
        StreamRng rng(opt.seed, kStreamTensorCompose);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < 10; ++t, ++n) {
                Channel a = random_channel(d, rng);
                Channel b = random_channel(d, rng);
                Channel c2 = random_channel(2, rng);
                ComplexMatrix rho = random_density_matrix(d, rng);
                ComplexMatrix rho2 = random_density_matrix(2, rng);

                ComplexMatrix lhs = compose(a, b).apply(rho);
                ComplexMatrix rhs = a.apply(b.apply(rho));
                v = std::max(v, (lhs - rhs).cwiseAbs().maxCoeff());

                ComplexMatrix tl = tensor(a, c2).apply(kron(rho, rho2));
                ComplexMatrix tr = kron(a.apply(rho), c2.apply(rho2));
                v = std::max(v, (tl - tr).cwiseAbs().maxCoeff());
            }
        }
        add("channels.tensor-compose-consistency", n, v, 1e-12);
    }

    void coherence_kernel() {
        StreamRng rng(opt.seed, kStreamCoherenceKernel);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                bool unitary_case = (t % 2 == 0);
                Channel ch = unitary_case
                                 ? Channel::from_unitary(random_haar_unitary(d, rng))
                                 : random_channel(d, rng);
                CoherenceMatrix c = coherence_matrix(ch);
                v = std::max(v, psd_violation(c.entries()));
                RealVector uniform = RealVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
                v = std::max(v, (c.entries() * uniform).cwiseAbs().maxCoeff());
                v = std::max(v, std::max(0.0, c.entries().cwiseAbs().maxCoeff() - 1.0));
                if (unitary_case) {
                    CoherenceMatrix via_transfer =
                        coherence_matrix_unitary(transfer_matrix(ch.unitary()));
                    v = std::max(v, (c.entries() - via_transfer.entries()).cwiseAbs().maxCoeff());
                }
            }
        }
        add("coherence.kernel-psd-uniform-twoform", n, v, 1e-8);
    }

    void convexity() {
        StreamRng rng(opt.seed, kStreamConvexity);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels / 2; ++t, ++n) {
                Channel a = random_channel(d, rng);
                Channel b = random_channel(d, rng);
                double p = rng.uniform();
                std::vector<ComplexMatrix> kraus;
                for (const auto& k : a.kraus_ops()) {
                    kraus.push_back(std::sqrt(p) * k);
                }
                for (const auto& k : b.kraus_ops()) {
                    kraus.push_back(std::sqrt(1.0 - p) * k);
                }
                Channel mix = Channel::from_kraus(std::move(kraus));
                RealMatrix combo = p * gram_matrix(a, BasisProjectorSet(d)).entries() +
                                   (1.0 - p) * gram_matrix(b, BasisProjectorSet(d)).entries();
                RealMatrix mixed = gram_matrix(mix, BasisProjectorSet(d)).entries();
                v = std::max(v, psd_violation(combo - mixed));
                RealMatrix ccombo = p * coherence_matrix(a).entries() +
                                    (1.0 - p) * coherence_matrix(b).entries();
                RealMatrix cmixed = coherence_matrix(mix).entries();
                v = std::max(v, psd_violation(ccombo - cmixed));
            }
        }
        add("coherence.convexity", n, v, 1e-9);
    }

    void post_monotonicity() {
        StreamRng rng(opt.seed, kStreamPostMonotone);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                Channel w = random_incoherent_mixture(d, 1 + static_cast<int>(rng.uniform_index(3)), rng);
                RealMatrix before = coherence_matrix(ch).entries();
                RealMatrix after = coherence_matrix(compose(w, ch)).entries();
                v = std::max(v, psd_violation(before - after));
            }
        }
        add("coherence.post-processing-monotone", n, v, 1e-9);
    }

    void post_invariance() {
        StreamRng rng(opt.seed, kStreamPostInvariance);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                Channel w = Channel::incoherent_unitary(random_incoherent_spec(d, rng));
                RealMatrix before = coherence_matrix(ch).entries();
                RealMatrix after = coherence_matrix(compose(w, ch)).entries();
                v = std::max(v, (before - after).cwiseAbs().maxCoeff());
            }
        }
        add("coherence.post-incoherent-invariance", n, v, 1e-9);
    }

    void pre_conjugation() {
        StreamRng rng(opt.seed, kStreamPreConjugation);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                IncoherentUnitarySpec spec = random_incoherent_spec(d, rng);
                Channel w = Channel::incoherent_unitary(spec);
                RealMatrix base = coherence_matrix(ch).entries();
                RealMatrix pre = coherence_matrix(compose(ch, w)).entries();
                for (Index i = 0; i < d; ++i) {
                    for (Index j = 0; j < d; ++j) {
                        Index si = spec.permutation[static_cast<std::size_t>(i)];
                        Index sj = spec.permutation[static_cast<std::size_t>(j)];
                        v = std::max(v, std::abs(pre(i, j) - base(si, sj)));
                    }
                }
            }
        }
        add("coherence.pre-incoherent-conjugation", n, v, 1e-9);
    }

    void sandwich() {
        StreamRng rng(opt.seed, kStreamSandwich);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                TransferMatrix x = transfer_matrix(u);
                CoherenceMatrix c = coherence_matrix_unitary(x);
                double trace = cgp_trace_norm(c);
                double tilde = cgp_permutation_distance(x).value;
                v = std::max(v, std::max(0.0, tilde - trace));
                v = std::max(v, std::max(0.0, trace - (static_cast<double>(d) - 1.0)));
                v = std::max(v, std::max(0.0, cgp_operator_norm(c) - trace));
            }
        }
        add("coherence.sandwich-bounds", n, v, 1e-9);
    }

    void faithfulness() {
        StreamRng rng(opt.seed, kStreamFaithfulness);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            Channel fourier = Channel::from_unitary(fourier_unitary(d));
            v = std::max(v, std::abs(cgp_trace_norm(coherence_matrix(fourier)) -
                                     (static_cast<double>(d) - 1.0)));
            ++n;
            for (int t = 0; t < opt.n_channels / 2; ++t, ++n) {
                Channel w = Channel::incoherent_unitary(random_incoherent_spec(d, rng));
                v = std::max(v, cgp_trace_norm(coherence_matrix(w)));
                v = std::max(v, cgp_permutation_distance(transfer_matrix(w.unitary())).value);
                // A Haar unitary is almost surely coherence generating.
                ComplexMatrix u = random_haar_unitary(d, rng);
                double trace = cgp_trace_norm(coherence_matrix(Channel::from_unitary(u)));
                if (trace <= 1e-9) {
                    v = std::max(v, 1.0);
                }
            }
        }
        add("coherence.faithfulness", n, v, 1e-9);
    }

    void opnorm_route() {
        StreamRng rng(opt.seed, kStreamOpnormRoute);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                TransferMatrix x = transfer_matrix(u);
                double direct = cgp_operator_norm(coherence_matrix_unitary(x));
                RealMatrix xtx = x.entries().transpose() * x.entries();
                double via_min = 1.0 - min_eigenvalue(0.5 * (xtx + RealMatrix(xtx.transpose())));
                v = std::max(v, std::abs(direct - via_min));
            }
        }
        add("coherence.opnorm-eigen-route", n, v, 1e-9);
    }

    void geometric_min_bound() {
        StreamRng rng(opt.seed, kStreamGeometricMin);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            BasisProjectorSet basis(d);
            Channel w = Channel::incoherent_unitary(random_incoherent_spec(d, rng));
            v = std::max(v, cgp_geometric_min(w.unitary(), basis));
            ++n;
            for (int t = 0; t < 5; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                double lower = cgp_geometric_min(u, basis);
                MonteCarloEstimate f = cgp_geometric_f(Channel::from_unitary(u), basis,
                                                       opt.n_samples, rng.next_u64());
                v = std::max(v, std::max(0.0, lower - (f.value + 3.0 * f.std_error)));
            }
        }
        add("coherence.geometric-min-vs-f", n, v, 1e-12);
    }

    void swap_protocol() {
        StreamRng rng(opt.seed, kStreamSwapProtocol);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            if (d > 16) {
                continue;
            }
            for (int t = 0; t < 5; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                BasisProjectorSet basis(d);
                RealMatrix direct = gram_matrix(ch, basis).entries();
                RealMatrix swapped = gram_matrix_swap_protocol(ch, basis).entries();
                v = std::max(v, (direct - swapped).cwiseAbs().maxCoeff());
            }
        }
        add("coherence.swap-protocol-agreement", n, v, 1e-8);
    }

    void scm_structure() {
        StreamRng rng(opt.seed, kStreamScmStructure);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            const auto dd = static_cast<double>(d);
            std::vector<SimplexCorrelationMatrix> scms;
            scms.push_back(scm_haar(d));
            scms.push_back(scm_vertex(d));
            for (double alpha : {0.0, 0.25 / dd, 0.5 / dd, 1.0 / dd}) {
                scms.push_back(scm_perm_invariant(d, alpha));
            }
            scms.push_back(scm_dirichlet_mc(d, std::vector<double>(static_cast<std::size_t>(d), 1.0),
                                            opt.n_samples, rng.next_u64()));
            for (const auto& s : scms) {
                ++n;
                v = std::max(v, std::abs(s.entries().sum() - 1.0));
                v = std::max(v, (s.entries() - RealMatrix(s.entries().transpose())).cwiseAbs().maxCoeff());
                v = std::max(v, std::max(0.0, psd_violation(s.entries()) - 1e-9));
            }
            // Haar SCM equals the flat-Dirichlet second moments in closed form.
            RealMatrix haar = scm_haar(d).entries();
            for (Index i = 0; i < d; ++i) {
                for (Index j = 0; j < d; ++j) {
                    double expect = (i == j) ? 2.0 / (dd * (dd + 1.0)) : 1.0 / (dd * (dd + 1.0));
                    v = std::max(v, std::abs(haar(i, j) - expect));
                }
            }
        }
        add("ensembles.scm-structure", n, v, 1e-8);
    }

    void scm_sandwich() {
        StreamRng rng(opt.seed, kStreamScmSandwich);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels / 2; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                CoherenceMatrix c = coherence_matrix(ch);
                SimplexCorrelationMatrix s =
                    scm_dirichlet_mc(d, std::vector<double>(static_cast<std::size_t>(d),
                                                            0.5 + rng.uniform()),
                                     500, rng.next_u64());
                SymmetricEigs eigs = symmetric_eigs(s.entries(), 1e-8);
                double s_max = eigs.eigenvalues(0);
                double s_min = eigs.eigenvalues(d - 1);
                double trace = cgp_trace_norm(c);
                double paired = cgp_ensemble(c, s);
                v = std::max(v, std::max(0.0, s_min * trace - paired));
                v = std::max(v, std::max(0.0, paired - s_max * trace));
            }
        }
        add("ensembles.eigenvalue-sandwich", n, v, 1e-9);
    }

    void scm_lower_bound() {
        StreamRng rng(opt.seed, kStreamScmLowerBound);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            const auto dd = static_cast<double>(d);
            for (int t = 0; t < opt.n_channels / 2; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                TransferMatrix x = transfer_matrix(u);
                CoherenceMatrix c = coherence_matrix_unitary(x);
                double alpha = (0.2 + 0.8 * rng.uniform()) / dd;  // full rank
                SimplexCorrelationMatrix s = scm_perm_invariant(d, alpha);
                double s_min = min_eigenvalue(s.entries(), 1e-8);
                double tilde = cgp_permutation_distance(x).value;
                v = std::max(v, std::max(0.0, s_min * tilde - cgp_ensemble(c, s)));
            }
        }
        add("ensembles.full-rank-lower-bound", n, v, 1e-9);
    }

    void pushforward() {
        StreamRng rng(opt.seed, kStreamPushforward);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels / 2; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                IncoherentUnitarySpec spec = random_incoherent_spec(d, rng);
                Channel w = Channel::incoherent_unitary(spec);
                Channel uw = compose(Channel::from_unitary(u), w);

                // Deliberately asymmetric ensemble.
                SimplexCorrelationMatrix s =
                    scm_dirichlet_mc(d, std::vector<double>(static_cast<std::size_t>(d),
                                                            0.4 + rng.uniform()),
                                     400, rng.next_u64());
                double lhs = cgp_ensemble(coherence_matrix(uw), s);
                double rhs = cgp_ensemble(coherence_matrix(Channel::from_unitary(u)),
                                          scm_conjugate(s, spec.permutation));
                v = std::max(v, std::abs(lhs - rhs));
            }
        }
        add("ensembles.pre-processing-pushforward", n, v, 1e-9);
    }

    void perm_invariant_form() {
        StreamRng rng(opt.seed, kStreamPermInvariantForm);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            if (d > 5) {
                continue;
            }
            for (int t = 0; t < 5; ++t, ++n) {
                SimplexCorrelationMatrix s =
                    scm_dirichlet_mc(d, std::vector<double>(static_cast<std::size_t>(d),
                                                            0.6 + rng.uniform()),
                                     600, rng.next_u64());
                // Symmetrize over the full permutation group.
                std::vector<Index> perm(static_cast<std::size_t>(d));
                for (Index i = 0; i < d; ++i) {
                    perm[static_cast<std::size_t>(i)] = i;
                }
                RealMatrix acc = RealMatrix::Zero(d, d);
                int count = 0;
                do {
                    acc += scm_conjugate(s, perm).entries();
                    ++count;
                } while (std::next_permutation(perm.begin(), perm.end()));
                acc /= static_cast<double>(count);
                // A permutation-symmetric SCM is determined by one diagonal
                // and one off-diagonal value.
                double diag = acc(0, 0);
                double off = (d > 1) ? acc(0, 1) : 0.0;
                double alpha = diag - off;
                SimplexCorrelationMatrix fitted = scm_perm_invariant(d, alpha);
                v = std::max(v, (acc - fitted.entries()).cwiseAbs().maxCoeff());
            }
        }
        add("ensembles.perm-invariant-form", n, v, 1e-9);
    }

    void alpha_monotone_scm() {
        StreamRng rng(opt.seed, kStreamAlphaMonotoneScm);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            const auto dd = static_cast<double>(d);
            for (int t = 0; t < 10; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                CoherenceMatrix c = coherence_matrix_unitary(transfer_matrix(u));
                double prev = -1.0;
                for (int g = 0; g <= 8; ++g) {
                    double alpha = (static_cast<double>(g) / 8.0) / dd;
                    double val = cgp_ensemble(c, scm_perm_invariant(d, alpha));
                    if (prev >= 0.0) {
                        v = std::max(v, std::max(0.0, prev - val));
                    }
                    prev = val;
                }
                double at_vertex = cgp_ensemble(c, scm_vertex(d));
                v = std::max(v, std::abs(prev - at_vertex));
            }
        }
        add("ensembles.alpha-monotone-vertex-max", n, v, 1e-10);
    }

    void haar_mc() {
        StreamRng rng(opt.seed, kStreamHaarMc);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            const auto dd = static_cast<double>(d);
            for (int t = 0; t < 5; ++t, ++n) {
                Channel ch = random_channel(d, rng);
                double exact = cgp_trace_norm(coherence_matrix(ch)) / (dd * (dd + 1.0));
                MonteCarloEstimate mc = haar_state_mc_oracle(ch, BasisProjectorSet(d),
                                                             opt.n_samples, rng.next_u64());
                // 4 sigma: loose enough that a fixed seed never flakes.
                double band = 4.0 * std::max(mc.std_error, 1e-12);
                v = std::max(v, std::max(0.0, std::abs(mc.value - exact) - band));
            }
        }
        add("ensembles.haar-state-mc-agreement", n, v, 0.0);
    }

    void qubit_closed_form() {
        double v = 0.0;
        int n = 0;
        for (int g = 0; g <= 20; ++g) {
            double t = static_cast<double>(g) / 20.0;
            double a = std::sqrt(t);
            double b = std::sqrt(1.0 - t);
            ComplexMatrix u(2, 2);
            u << Complex(a, 0), Complex(-b, 0), Complex(b, 0), Complex(a, 0);
            CoherenceMatrix c = coherence_matrix_unitary(transfer_matrix(u));
            for (double alpha : {0.25, 1.0 / 3.0, 0.4, 0.5}) {
                ++n;
                double closed = cgp_qubit_symmetric(Complex(a, 0), Complex(b, 0), alpha);
                SimplexCorrelationMatrix s = scm_perm_invariant(2, 2.0 * alpha - 0.5);
                v = std::max(v, std::abs(closed - cgp_ensemble(c, s)));
            }
        }
        add("ensembles.qubit-symmetric-closed-form", n, v, 1e-10);
    }

    void additivity() {
        StreamRng rng(opt.seed, kStreamAdditivity);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < 10; ++t, ++n) {
                ComplexMatrix ua = random_haar_unitary(d, rng);
                ComplexMatrix ub = random_haar_unitary(2, rng);
                TransferMatrix xa = transfer_matrix(ua);
                TransferMatrix xb = transfer_matrix(ub);
                TransferMatrix xab = transfer_matrix(kron(ua, ub));
                v = std::max(v, std::abs(phi_p(xab) - phi_p(xa) - phi_p(xb)));
                v = std::max(v, std::abs(phi_g_tilde(xab) - phi_g_tilde(xa) - phi_g_tilde(xb)));
                double ga = phi_g(xa);
                double gb = phi_g(xb);
                double gab = phi_g(xab);
                if (std::isinf(ga) || std::isinf(gb)) {
                    if (!std::isinf(gab)) {
                        v = std::max(v, 1.0);
                    }
                } else {
                    v = std::max(v, std::abs(gab - ga - gb));
                }
                for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0}) {
                    v = std::max(v, std::abs(phi_alpha(xab, alpha) - phi_alpha(xa, alpha) -
                                             phi_alpha(xb, alpha)));
                }
            }
        }
        add("additive.tensor-additivity", n, v, 1e-9);
    }

    void additive_invariance() {
        StreamRng rng(opt.seed, kStreamAdditiveInvariance);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < 10; ++t, ++n) {
                ComplexMatrix u = random_haar_unitary(d, rng);
                ComplexMatrix w = Channel::incoherent_unitary(random_incoherent_spec(d, rng)).unitary();
                TransferMatrix x = transfer_matrix(u);
                TransferMatrix xw = transfer_matrix(u * w);
                TransferMatrix wx = transfer_matrix(w * u);
                v = std::max(v, std::abs(phi_p(xw) - phi_p(x)));
                v = std::max(v, std::abs(phi_p(wx) - phi_p(x)));
                v = std::max(v, std::abs(phi_g_tilde(xw) - phi_g_tilde(x)));
                v = std::max(v, std::abs(phi_g_tilde(wx) - phi_g_tilde(x)));
                double g = phi_g(x);
                if (!std::isinf(g)) {
                    v = std::max(v, std::abs(phi_g(xw) - g));
                    v = std::max(v, std::abs(phi_g(wx) - g));
                }
                for (double alpha : {0.5, 2.0}) {
                    v = std::max(v, std::abs(phi_alpha(xw, alpha) - phi_alpha(x, alpha)));
                    v = std::max(v, std::abs(phi_alpha(wx, alpha) - phi_alpha(x, alpha)));
                }
            }
        }
        add("additive.incoherent-invariance", n, v, 1e-9);
    }

    void renyi_chain() {
        StreamRng rng(opt.seed, kStreamRenyiChain);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                TransferMatrix x = transfer_matrix(random_haar_unitary(d, rng));
                double p = phi_p(x);
                double two = phi_alpha(x, 2.0);
                double tilde = phi_g_tilde(x);
                v = std::max(v, std::max(0.0, two - tilde));
                v = std::max(v, std::max(0.0, p - two));
            }
        }
        add("additive.renyi-chain", n, v, 1e-9);
    }

    void additive_range() {
        StreamRng rng(opt.seed, kStreamAdditiveRange);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            const double logd = std::log(static_cast<double>(d));
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                TransferMatrix x = transfer_matrix(random_haar_unitary(d, rng));
                for (double val : {phi_p(x), phi_g_tilde(x), phi_alpha(x, 0.5), phi_alpha(x, 2.0)}) {
                    v = std::max(v, std::max(0.0, -val - 1e-12));
                    v = std::max(v, std::max(0.0, val - logd - 1e-9));
                }
                double g = phi_g(x);
                if (!std::isinf(g)) {
                    v = std::max(v, std::max(0.0, -g - 1e-12));
                }
            }
            // The flat transfer matrix maximizes every family: log d for
            // the bounded ones, divergence for the determinant-based one
            // (rank-one matrix, so |det| = 0). The computed matrix can sit
            // an ulp away from flat, leaving a noise-level determinant, so
            // the divergence assertion is a large margin over log d rather
            // than the exact infinity flag.
            TransferMatrix fx = transfer_matrix(fourier_unitary(d));
            v = std::max(v, std::abs(phi_p(fx) - logd));
            if (!(phi_g(fx) > logd + 10.0)) {
                v = std::max(v, 1.0);
            }
            v = std::max(v, std::abs(phi_g_tilde(fx) - logd));
            v = std::max(v, std::abs(phi_alpha(fx, 0.5) - logd));
            n += 4;

            // On the bitwise-flat matrix the pivot vanishes exactly and the
            // infinity flag must fire.
            TransferMatrix flat(
                RealMatrix::Constant(d, d, 1.0 / static_cast<double>(d)));
            if (!std::isinf(phi_g(flat))) {
                v = std::max(v, 1.0);
            }
            n += 1;
        }
        add("additive.range-and-flat-maximum", n, v, 1e-10);
    }

    void alpha_monotone() {
        StreamRng rng(opt.seed, kStreamAlphaMonotone);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < 10; ++t, ++n) {
                TransferMatrix x = transfer_matrix(random_haar_unitary(d, rng));
                double prev = std::numeric_limits<double>::infinity();
                for (int g = 0; g <= 8; ++g) {
                    double alpha = static_cast<double>(g) / 4.0;
                    double val = phi_alpha(x, alpha);
                    v = std::max(v, std::max(0.0, val - prev));
                    prev = val;
                }
            }
        }
        add("additive.alpha-monotone", n, v, 1e-9);
    }

    void brute_force() {
        StreamRng rng(opt.seed, kStreamBruteForce);
        double v = 0.0;
        int n = 0;
        for (Index d = 2; d <= 6; ++d) {
            for (int t = 0; t < opt.n_channels / 2; ++t, ++n) {
                RealMatrix w(d, d);
                for (Index i = 0; i < d; ++i) {
                    for (Index j = 0; j < d; ++j) {
                        w(i, j) = rng.uniform();
                    }
                }
                // Half the instances get quantized entries to force ties.
                if (t % 2 == 1) {
                    for (Index i = 0; i < d; ++i) {
                        for (Index j = 0; j < d; ++j) {
                            w(i, j) = std::floor(w(i, j) * 4.0) / 4.0;
                        }
                    }
                }
                AssignmentResult fast = max_assignment(w);
                AssignmentResult slow = max_assignment_brute_force(w);
                if (fast.permutation != slow.permutation) {
                    v = std::max(v, 1.0);
                }
                v = std::max(v, std::abs(fast.total_weight - slow.total_weight));
            }
        }
        add("assignment.brute-force-match", n, v, 0.0);
    }

    void shift_invariance() {
        StreamRng rng(opt.seed, kStreamShift);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < 10; ++t, ++n) {
                RealMatrix w(d, d);
                for (Index i = 0; i < d; ++i) {
                    for (Index j = 0; j < d; ++j) {
                        w(i, j) = rng.uniform();
                    }
                }
                double c = 2.0 * rng.uniform() - 1.0;
                AssignmentResult base = max_assignment(w);
                RealMatrix shifted_w = (w.array() + c).matrix();
                AssignmentResult shifted = max_assignment(shifted_w);
                if (base.permutation != shifted.permutation) {
                    v = std::max(v, 1.0);
                }
                v = std::max(v, std::abs(shifted.total_weight - base.total_weight -
                                         c * static_cast<double>(d)));
            }
        }
        add("assignment.shift-invariance", n, v, 1e-9);
    }

    void transfer_range() {
        StreamRng rng(opt.seed, kStreamTransferRange);
        double v = 0.0;
        int n = 0;
        for (Index d : opt.dims) {
            for (int t = 0; t < opt.n_channels; ++t, ++n) {
                TransferMatrix x = transfer_matrix(random_haar_unitary(d, rng));
                AssignmentResult best = max_assignment(x.entries());
                v = std::max(v, std::max(0.0, 1.0 - best.total_weight));
                v = std::max(v, std::max(0.0, best.total_weight - static_cast<double>(d)));
                std::vector<char> seen(static_cast<std::size_t>(d), 0);
                for (Index l = 0; l < d; ++l) {
                    Index r = best.permutation[static_cast<std::size_t>(l)];
                    if (r < 0 || r >= d || seen[static_cast<std::size_t>(r)]) {
                        v = std::max(v, 1.0);
                    } else {
                        seen[static_cast<std::size_t>(r)] = 1;
                    }
                }
            }
        }
        add("assignment.bistochastic-range", n, v, 1e-9);
    }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (options.dims.empty() || options.n_channels < 1 || options.n_samples == 0) {
        throw ValidationError("run_verification: dims, n_channels, n_samples must be positive");
    }
    for (Index d : options.dims) {
        if (d < 2) {
            throw ValidationError("run_verification: dims must all be >= 2");
        }
    }
    Battery battery{options, {}};
    battery.dephase_pythagoras();
    battery.basis_frames();
    battery.jacobi_reconstruction();
    battery.kraus_sums();
    battery.apply_trace_psd();
    battery.incoherent_commutes();
    battery.tensor_compose();
    battery.coherence_kernel();
    battery.convexity();
    battery.post_monotonicity();
    battery.post_invariance();
    battery.pre_conjugation();
    battery.sandwich();
    battery.faithfulness();
    battery.opnorm_route();
    battery.geometric_min_bound();
    battery.swap_protocol();
    battery.scm_structure();
    battery.scm_sandwich();
    battery.scm_lower_bound();
    battery.pushforward();
    battery.perm_invariant_form();
    battery.alpha_monotone_scm();
    battery.haar_mc();
    battery.qubit_closed_form();
    battery.additivity();
    battery.additive_invariance();
    battery.renyi_chain();
    battery.additive_range();
    battery.alpha_monotone();
    battery.brute_force();
    battery.shift_invariance();
    battery.transfer_range();
    return battery.results;
}

nlohmann::json verification_report(const VerifyOptions& options) {
    std::vector<CheckResult> checks = run_verification(options);
    nlohmann::json j;
    j["seed"] = options.seed;
    j["dims"] = options.dims;
    j["n_channels"] = options.n_channels;
    j["n_samples"] = options.n_samples;
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        nlohmann::json rec;
        rec["name"] = c.name;
        rec["instances"] = c.instances;
        rec["max_violation"] = c.max_violation;
        rec["tolerance"] = c.tolerance;
        rec["pass"] = c.pass;
        all_pass = all_pass && c.pass;
        arr.push_back(std::move(rec));
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass;
    return j;
}

}  // namespace cgpkit
