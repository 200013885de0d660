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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgpkit/additive.hpp"
#include "cgpkit/coherence.hpp"
#include "cgpkit/ensembles.hpp"
#include "cgpkit/verify.hpp"

namespace py = pybind11;
using namespace cgpkit;

namespace {

// None -> computational basis of the given dimension; otherwise the
// argument is a unitary whose columns are the basis vectors.
BasisProjectorSet resolve_basis(const py::object& basis, Index dim) {
    if (basis.is_none()) {
        return BasisProjectorSet(dim);
    }
    return BasisProjectorSet(basis.cast<ComplexMatrix>());
}

TransferMatrix transfer_of(const ComplexMatrix& u, const py::object& basis) {
    return transfer_matrix(u, resolve_basis(basis, u.rows()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coherence generating power of unital quantum channels";

    py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
        .def_readonly("value", &MonteCarloEstimate::value)
        .def_readonly("std_error", &MonteCarloEstimate::std_error)
        .def_readonly("n_samples", &MonteCarloEstimate::n_samples)
        .def_readonly("seed", &MonteCarloEstimate::seed)
        .def("__repr__", [](const MonteCarloEstimate& e) {
            return "MonteCarloEstimate(value=" + std::to_string(e.value) +
                   ", std_error=" + std::to_string(e.std_error) +
                   ", n_samples=" + std::to_string(e.n_samples) +
                   ", seed=" + std::to_string(e.seed) + ")";
        });

    py::class_<Channel>(m, "Channel")
        .def_static("from_kraus", &Channel::from_kraus, py::arg("kraus"),
                    py::arg("label") = "", py::arg("tolerance") = tol::kChannel,
                    "Build a channel from Kraus operators; validates trace "
                    "preservation and unitality.")
        .def_static("from_unitary", &Channel::from_unitary, py::arg("u"),
                    py::arg("label") = "", py::arg("tolerance") = tol::kExact)
        .def_static("identity", &Channel::identity, py::arg("dim"))
        .def_static("dephasing", &Channel::dephasing, py::arg("dim"),
                    "Full dephasing in the computational basis.")
        .def_property_readonly("dim", &Channel::dim)
        .def_property_readonly("label", &Channel::label)
        .def_property_readonly("is_unitary_channel", &Channel::is_unitary_channel)
        .def("unitary", &Channel::unitary,
             "The single Kraus operator; raises for non-unitary channels.")
        .def("kraus_ops",
             [](const Channel& ch) { return ch.kraus_ops(); })
        .def("apply", &Channel::apply, py::arg("rho"))
        .def("conjugated_by", &Channel::conjugated_by, py::arg("v"))
        .def("__repr__", [](const Channel& ch) {
            return "Channel(dim=" + std::to_string(ch.dim()) + ", kraus=" +
                   std::to_string(ch.kraus_ops().size()) +
                   (ch.label().empty() ? std::string() : ", label='" + ch.label() + "'") + ")";
        });

    m.def("compose", &compose, py::arg("a"), py::arg("b"),
          "Composition a after b (b acts first).");
    m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
    m.def("fourier_unitary", &fourier_unitary, py::arg("d"));
    m.def("random_haar_unitary",
          py::overload_cast<Index, std::uint64_t>(&random_haar_unitary), py::arg("d"),
          py::arg("seed"));
    m.def("random_unital_channel",
          py::overload_cast<Index, int, std::uint64_t>(&random_unital_channel), py::arg("d"),
          py::arg("n_kraus"), py::arg("seed"),
          "Seeded mixed-unitary channel with Dirichlet weights.");

    m.def(
        "coherence_matrix",
        [](const Channel& ch, const py::object& basis) {
            return coherence_matrix(ch, resolve_basis(basis, ch.dim())).entries();
        },
        py::arg("channel"), py::arg("basis") = py::none(),
        "Real PSD kernel of pairwise overlaps of the channel's coherent "
        "projector images.");
    m.def(
        "transfer_matrix",
        [](const ComplexMatrix& u, const py::object& basis) {
            return transfer_of(u, basis).entries();
        },
        py::arg("u"), py::arg("basis") = py::none(),
        "Doubly stochastic matrix of basis-population transfer probabilities.");

    m.def(
        "cgp_trace_norm",
        [](const Channel& ch, const py::object& basis) {
            return cgp_trace_norm(coherence_matrix(ch, resolve_basis(basis, ch.dim())));
        },
        py::arg("channel"), py::arg("basis") = py::none());
    m.def(
        "cgp_operator_norm",
        [](const Channel& ch, const py::object& basis) {
            return cgp_operator_norm(coherence_matrix(ch, resolve_basis(basis, ch.dim())));
        },
        py::arg("channel"), py::arg("basis") = py::none());
    m.def(
        "cgp_g",
        [](const Channel& ch, const py::object& basis) {
            return cgp_g(ch, resolve_basis(basis, ch.dim()));
        },
        py::arg("channel"), py::arg("basis") = py::none(),
        "Trace measure rescaled to the exact Haar-state average.");
    m.def(
        "cgp_permutation_distance",
        [](const ComplexMatrix& u, const py::object& basis) {
            PermutationDistanceResult r = cgp_permutation_distance(transfer_of(u, basis));
            return py::make_tuple(r.value, r.permutation);
        },
        py::arg("u"), py::arg("basis") = py::none(),
        "Squared Frobenius distance to the closest permutation matrix, with "
        "the witness permutation (column -> row).");
    m.def(
        "cgp_geometric_min",
        [](const ComplexMatrix& u, const py::object& basis) {
            return cgp_geometric_min(u, resolve_basis(basis, u.rows()));
        },
        py::arg("u"), py::arg("basis") = py::none());
    m.def(
        "cgp_geometric_f",
        [](const Channel& ch, std::uint64_t n_samples, std::uint64_t seed,
           const py::object& basis) {
            return cgp_geometric_f(ch, resolve_basis(basis, ch.dim()), n_samples, seed);
        },
        py::arg("channel"), py::arg("n_samples"), py::arg("seed"),
        py::arg("basis") = py::none());

    m.def("scm_haar", [](Index d) { return scm_haar(d).entries(); }, py::arg("d"));
    m.def("scm_vertex", [](Index d) { return scm_vertex(d).entries(); }, py::arg("d"));
    m.def(
        "scm_perm_invariant",
        [](Index d, double alpha) { return scm_perm_invariant(d, alpha).entries(); },
        py::arg("d"), py::arg("alpha"));
    m.def(
        "scm_dirichlet_mc",
        [](Index d, const std::vector<double>& params, std::uint64_t n_samples,
           std::uint64_t seed) {
            return scm_dirichlet_mc(d, params, n_samples, seed).entries();
        },
        py::arg("d"), py::arg("params"), py::arg("n_samples"), py::arg("seed"));
    m.def(
        "cgp_ensemble",
        [](const Channel& ch, const RealMatrix& scm_entries, const py::object& basis) {
            return cgp_ensemble(coherence_matrix(ch, resolve_basis(basis, ch.dim())),
                                scm_empirical(scm_entries));
        },
        py::arg("channel"), py::arg("scm"), py::arg("basis") = py::none(),
        "Frobenius pairing of the coherence kernel with an ensemble "
        "second-moment matrix.");
    m.def("cgp_qubit_symmetric", &cgp_qubit_symmetric, py::arg("a"), py::arg("b"),
          py::arg("alpha"));
    m.def(
        "haar_state_mc_oracle",
        [](const Channel& ch, std::uint64_t n_samples, std::uint64_t seed,
           const py::object& basis) {
            return haar_state_mc_oracle(ch, resolve_basis(basis, ch.dim()), n_samples, seed);
        },
        py::arg("channel"), py::arg("n_samples"), py::arg("seed"),
        py::arg("basis") = py::none());

    m.def(
        "phi_p", [](const ComplexMatrix& u, const py::object& b) { return phi_p(transfer_of(u, b)); },
        py::arg("u"), py::arg("basis") = py::none());
    m.def(
        "phi_g", [](const ComplexMatrix& u, const py::object& b) { return phi_g(transfer_of(u, b)); },
        py::arg("u"), py::arg("basis") = py::none(),
        "Log-determinant measure; +inf on singular transfer matrices.");
    m.def(
        "phi_g_tilde",
        [](const ComplexMatrix& u, const py::object& b) { return phi_g_tilde(transfer_of(u, b)); },
        py::arg("u"), py::arg("basis") = py::none());
    m.def(
        "phi_alpha",
        [](const ComplexMatrix& u, double alpha, const py::object& b) {
            return phi_alpha(transfer_of(u, b), alpha);
        },
        py::arg("u"), py::arg("alpha"), py::arg("basis") = py::none());

    m.def(
        "verification_report_json",
        [](const std::vector<Index>& dims, std::uint64_t seed, int n_channels,
           std::uint64_t n_samples) {
            VerifyOptions options;
            options.dims = dims;
            options.seed = seed;
            options.n_channels = n_channels;
            options.n_samples = n_samples;
            return verification_report(options).dump(2);
        },
        py::arg("dims") = std::vector<Index>{2, 3, 4}, py::arg("seed") = 12345,
        py::arg("n_channels") = 50, py::arg("n_samples") = 20000,
        "Run the self-check battery and return the JSON report as a string.");
}
