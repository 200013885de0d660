# Copyright 2026 The cgpkit authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Coherence generating power of unital quantum channels.

Thin Python surface over the C++ core: channels in Kraus form, coherence
kernels and their scalar measures, ensemble second-moment matrices, and the
additive (logarithmic) measures of unitary transfer matrices.
"""

from ._core import (
    Channel,
    MonteCarloEstimate,
    cgp_ensemble,
    cgp_g,
    cgp_geometric_f,
    cgp_geometric_min,
    cgp_operator_norm,
    cgp_permutation_distance,
    cgp_qubit_symmetric,
    cgp_trace_norm,
    coherence_matrix,
    compose,
    fourier_unitary,
    haar_state_mc_oracle,
    phi_alpha,
    phi_g,
    phi_g_tilde,
    phi_p,
    random_haar_unitary,
    random_unital_channel,
    scm_dirichlet_mc,
    scm_haar,
    scm_perm_invariant,
    scm_vertex,
    tensor,
    transfer_matrix,
    verification_report_json,
)

__version__ = "0.1.0"

__all__ = [
    "Channel",
    "MonteCarloEstimate",
    "cgp_ensemble",
    "cgp_g",
    "cgp_geometric_f",
    "cgp_geometric_min",
    "cgp_operator_norm",
    "cgp_permutation_distance",
    "cgp_qubit_symmetric",
    "cgp_trace_norm",
    "coherence_matrix",
    "compose",
    "fourier_unitary",
    "haar_state_mc_oracle",
    "phi_alpha",
    "phi_g",
    "phi_g_tilde",
    "phi_p",
    "random_haar_unitary",
    "random_unital_channel",
    "scm_dirichlet_mc",
    "scm_haar",
    "scm_perm_invariant",
    "scm_vertex",
    "tensor",
    "transfer_matrix",
    "verification_report_json",
]
