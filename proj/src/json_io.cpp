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

#include "cgpkit/json_io.hpp"

#include <fstream>

namespace cgpkit {

using nlohmann::json;

namespace {

double number_at(const json& j, const char* context) {
    if (!j.is_number()) {
        throw SchemaError(std::string(context) + ": expected a number");
    }
    return j.get<double>();
}

Index dim_field(const json& j) {
    if (!j.is_object() || !j.contains("dim")) {
        throw SchemaError("document must be an object with a \"dim\" field");
    }
    const json& d = j.at("dim");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        throw SchemaError("\"dim\" must be a positive integer");
    }
    return static_cast<Index>(d.get<long long>());
}

}  // namespace

json complex_matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError("matrix: expected a nonempty array of rows");
    }
    const auto n_rows = static_cast<Index>(j.size());
    Index n_cols = -1;
    ComplexMatrix m;
    for (Index i = 0; i < n_rows; ++i) {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || row.empty()) {
            throw SchemaError("matrix: each row must be a nonempty array");
        }
        if (n_cols < 0) {
            n_cols = static_cast<Index>(row.size());
            m.resize(n_rows, n_cols);
        }
        if (static_cast<Index>(row.size()) != n_cols) {
            throw SchemaError("matrix: rows have inconsistent lengths");
        }
        for (Index c = 0; c < n_cols; ++c) {
            const json& cell = row.at(static_cast<std::size_t>(c));
            if (!cell.is_array() || cell.size() != 2) {
                throw SchemaError("matrix: each entry must be a [re, im] pair");
            }
            m(i, c) = Complex(number_at(cell.at(0), "matrix entry"),
                              number_at(cell.at(1), "matrix entry"));
        }
    }
    return m;
}

json real_matrix_to_json(const RealMatrix& m) {
    json flat = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            flat.push_back(m(i, j));
        }
    }
    return flat;
}

RealMatrix real_matrix_from_json(const json& j, Index dim) {
    if (!j.is_array() || static_cast<Index>(j.size()) != dim * dim) {
        throw SchemaError("entries: expected a flat row-major array of dim*dim numbers");
    }
    RealMatrix m(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index c = 0; c < dim; ++c) {
            m(i, c) = number_at(j.at(static_cast<std::size_t>(i * dim + c)), "entries");
        }
    }
    return m;
}

json channel_to_json(const Channel& ch) {
    json j;
    j["dim"] = ch.dim();
    if (ch.is_unitary_channel()) {
        j["type"] = "unitary";
        j["matrix"] = complex_matrix_to_json(ch.unitary());
    } else {
        j["type"] = "kraus";
        json ops = json::array();
        for (const auto& k : ch.kraus_ops()) {
            ops.push_back(complex_matrix_to_json(k));
        }
        j["kraus_ops"] = std::move(ops);
    }
    if (ch.preferred_basis()) {
        j["basis"] = complex_matrix_to_json(*ch.preferred_basis());
    }
    if (!ch.label().empty()) {
        j["label"] = ch.label();
    }
    return j;
}

Channel channel_from_json(const json& j, double tolerance) {
    const Index d = dim_field(j);
    if (!j.contains("type") || !j.at("type").is_string()) {
        throw SchemaError("channel: missing string field \"type\"");
    }
    const std::string type = j.at("type").get<std::string>();
    std::string label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) {
            throw SchemaError("channel: \"label\" must be a string");
        }
        label = j.at("label").get<std::string>();
    }

    Channel ch = [&] {
        if (type == "unitary") {
            if (!j.contains("matrix")) {
                throw SchemaError("channel: type \"unitary\" requires a \"matrix\" field");
            }
            ComplexMatrix u = complex_matrix_from_json(j.at("matrix"));
            if (u.rows() != d || u.cols() != d) {
                throw SchemaError("channel: \"matrix\" shape does not match \"dim\"");
            }
            return Channel::from_unitary(u, label, tolerance);
        }
        if (type == "kraus") {
            if (!j.contains("kraus_ops") || !j.at("kraus_ops").is_array() ||
                j.at("kraus_ops").empty()) {
                throw SchemaError("channel: type \"kraus\" requires a nonempty \"kraus_ops\" array");
            }
            std::vector<ComplexMatrix> kraus;
            kraus.reserve(j.at("kraus_ops").size());
            for (const auto& op : j.at("kraus_ops")) {
                ComplexMatrix k = complex_matrix_from_json(op);
                if (k.rows() != d || k.cols() != d) {
                    throw SchemaError("channel: Kraus operator shape does not match \"dim\"");
                }
                kraus.push_back(std::move(k));
            }
            return Channel::from_kraus(std::move(kraus), label, tolerance);
        }
        throw SchemaError("channel: \"type\" must be \"unitary\" or \"kraus\"");
    }();

    if (j.contains("basis")) {
        ComplexMatrix basis = complex_matrix_from_json(j.at("basis"));
        if (basis.rows() != d || basis.cols() != d) {
            throw SchemaError("channel: \"basis\" shape does not match \"dim\"");
        }
        ch.set_preferred_basis(std::move(basis));
    }
    return ch;
}

json scm_to_json(const SimplexCorrelationMatrix& s) {
    json j;
    j["dim"] = s.dim();
    j["kind"] = scm_kind_name(s.provenance().kind);
    j["entries"] = real_matrix_to_json(s.entries());
    switch (s.provenance().kind) {
        case ScmKind::perm_invariant:
            j["alpha"] = s.provenance().alpha;
            break;
        case ScmKind::dirichlet:
            j["params"] = s.provenance().params;
            j["n_samples"] = s.provenance().n_samples;
            j["seed"] = s.provenance().seed;
            break;
        case ScmKind::empirical:
            if (s.provenance().n_samples > 0) {
                j["n_samples"] = s.provenance().n_samples;
            }
            break;
        default:
            break;
    }
    return j;
}

SimplexCorrelationMatrix scm_from_json(const json& j) {
    const Index d = dim_field(j);
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw SchemaError("scm: missing string field \"kind\"");
    }
    ScmKind kind;
    try {
        kind = scm_kind_from_name(j.at("kind").get<std::string>());
    } catch (const ValidationError& e) {
        throw SchemaError(e.what());
    }

    if (j.contains("entries")) {
        RealMatrix entries = real_matrix_from_json(j.at("entries"), d);
        std::uint64_t n_samples = 0;
        if (j.contains("n_samples")) {
            n_samples = j.at("n_samples").get<std::uint64_t>();
        }
        return scm_empirical(std::move(entries), n_samples);
    }

    switch (kind) {
        case ScmKind::haar:
            return scm_haar(d);
        case ScmKind::vertex:
            return scm_vertex(d);
        case ScmKind::perm_invariant: {
            if (!j.contains("alpha") || !j.at("alpha").is_number()) {
                throw SchemaError("scm: kind \"perm_invariant\" requires a numeric \"alpha\"");
            }
            return scm_perm_invariant(d, j.at("alpha").get<double>());
        }
        case ScmKind::dirichlet: {
            if (!j.contains("params") || !j.at("params").is_array()) {
                throw SchemaError("scm: kind \"dirichlet\" requires a \"params\" array");
            }
            std::vector<double> params;
            for (const auto& p : j.at("params")) {
                params.push_back(number_at(p, "scm params"));
            }
            if (!j.contains("n_samples") || !j.contains("seed")) {
                throw SchemaError(
                    "scm: kind \"dirichlet\" without entries requires \"n_samples\" and \"seed\"");
            }
            return scm_dirichlet_mc(d, params, j.at("n_samples").get<std::uint64_t>(),
                                    j.at("seed").get<std::uint64_t>());
        }
        case ScmKind::empirical:
            throw SchemaError("scm: kind \"empirical\" requires an \"entries\" array");
    }
    throw SchemaError("scm: unreachable kind");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw SchemaError("cannot open file for writing: " + path);
    }
    out << j.dump(2) << "\n";
}

}  // namespace cgpkit
