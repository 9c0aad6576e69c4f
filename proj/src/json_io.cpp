// Copyright 2026 The Pulseforge Authors
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

#include "pulseforge/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pulseforge/error_basis.hpp"

namespace pulseforge::io {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& why) {
    throw std::invalid_argument(what + ": " + why);
}

// Runs a reader and converts json library errors into invalid_argument.
template <typename F>
auto guarded(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        fail(what, e.what());
    }
}

designs::IntMatrix int_matrix(const json& j, const std::string& what) {
    if (!j.is_array()) {
        fail(what, "expected an array of rows");
    }
    designs::IntMatrix out;
    for (const auto& row : j) {
        out.push_back(row.get<std::vector<int>>());
    }
    return out;
}

void expect_shape(const designs::IntMatrix& M, int rows, int cols, const std::string& what) {
    if (static_cast<int>(M.size()) != rows) {
        fail(what, "expected " + std::to_string(rows) + " rows");
    }
    for (const auto& row : M) {
        if (static_cast<int>(row.size()) != cols) {
            fail(what, "expected " + std::to_string(cols) + " columns");
        }
    }
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json cmatrix_json(const CMatrix& M) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        json rr = json::array();
        json ii = json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            rr.push_back(M(r, c).real());
            ii.push_back(M(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    return json{{"re", re}, {"im", im}};
}

CMatrix cmatrix_from(const json& j, const std::string& what) {
    const RMatrix re = matrix_from_json(j.at("re"), what + ".re");
    const RMatrix im = matrix_from_json(j.at("im"), what + ".im");
    if (re.rows() != im.rows() || re.cols() != im.cols()) {
        fail(what, "real and imaginary parts differ in shape");
    }
    CMatrix M(re.rows(), re.cols());
    M.real() = re;
    M.imag() = im;
    return M;
}

json basis_json(const error_basis::UnitaryErrorBasis& b) {
    if (b.kind == "generalized_pauli") {
        return "generalized_pauli";
    }
    json elems = json::array();
    for (const auto& e : b.elements) {
        elems.push_back(cmatrix_json(e));
    }
    return elems;
}

error_basis::UnitaryErrorBasis basis_from(const json& j, int d) {
    if (j.is_string()) {
        if (j.get<std::string>() != "generalized_pauli") {
            fail("scheme", "unknown basis name " + j.get<std::string>());
        }
        return error_basis::generalized_pauli_basis(d);
    }
    std::vector<CMatrix> elems;
    for (const auto& e : j) {
        elems.push_back(cmatrix_from(e, "scheme.basis"));
    }
    auto b = error_basis::inline_basis(std::move(elems));
    if (b.d != d) {
        fail("scheme", "inline basis dimension does not match node dimension");
    }
    return b;
}

}  // namespace

json matrix_to_json(const RMatrix& M) {
    json out = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            row.push_back(M(r, c));
        }
        out.push_back(row);
    }
    return out;
}

RMatrix matrix_from_json(const json& j, const std::string& what) {
    return guarded(what, [&] {
        if (!j.is_array() || j.empty() || !j.front().is_array()) {
            fail(what, "expected a non-empty array of rows");
        }
        const auto rows = static_cast<Eigen::Index>(j.size());
        const auto cols = static_cast<Eigen::Index>(j.front().size());
        RMatrix M(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const auto& row = j[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
                fail(what, "ragged matrix");
            }
            for (Eigen::Index c = 0; c < cols; ++c) {
                M(r, c) = row[static_cast<std::size_t>(c)].get<double>();
            }
        }
        return M;
    });
}

json to_json(const designs::OrthogonalArray& oa) {
    json j{{"kind", "oa"}, {"n", oa.n}, {"N", oa.N}, {"s", oa.s}, {"lambda", oa.lambda}, {"entries", oa.entries}};
    if (oa.mixed()) {
        j["row_levels"] = oa.row_levels;
    }
    return j;
}

json to_json(const designs::DifferenceScheme& ds) {
    return json{{"kind", "ds"}, {"n", ds.n}, {"N", ds.N}, {"u", ds.u}, {"entries", ds.entries}};
}

designs::OrthogonalArray oa_from_json(const json& j) {
    return guarded("oa", [&] {
        if (j.at("kind").get<std::string>() != "oa") {
            fail("oa", "kind must be \"oa\"");
        }
        designs::OrthogonalArray oa;
        oa.n = j.at("n").get<int>();
        oa.N = j.at("N").get<int>();
        oa.s = j.at("s").get<int>();
        oa.lambda = j.at("lambda").get<int>();
        oa.entries = int_matrix(j.at("entries"), "oa.entries");
        if (j.contains("row_levels")) {
            oa.row_levels = j.at("row_levels").get<std::vector<int>>();
        }
        expect_shape(oa.entries, oa.n, oa.N, "oa.entries");
        for (int r = 0; r < oa.n; ++r) {
            for (int v : oa.entries[static_cast<std::size_t>(r)]) {
                if (v < 1 || v > oa.levels(r)) {
                    fail("oa", "symbol out of range in row " + std::to_string(r));
                }
            }
        }
        return oa;
    });
}

designs::DifferenceScheme ds_from_json(const json& j) {
    return guarded("ds", [&] {
        if (j.at("kind").get<std::string>() != "ds") {
            fail("ds", "kind must be \"ds\"");
        }
        designs::DifferenceScheme ds;
        ds.n = j.at("n").get<int>();
        ds.N = j.at("N").get<int>();
        ds.u = j.at("u").get<int>();
        ds.entries = int_matrix(j.at("entries"), "ds.entries");
        expect_shape(ds.entries, ds.n, ds.N, "ds.entries");
        if (ds.u < 1) {
            fail("ds", "u must be positive");
        }
        for (const auto& row : ds.entries) {
            for (int v : row) {
                if (v < 0 || v >= ds.u) {
                    fail("ds", "entry out of range");
                }
            }
        }
        return ds;
    });
}

json to_json(const netham::PairHamiltonian& model) {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(model.J.size()));
    for (Eigen::Index r = 0; r < model.J.rows(); ++r) {
        for (Eigen::Index c = 0; c < model.J.cols(); ++c) {
            flat.push_back(model.J(r, c));
        }
    }
    std::vector<double> r(model.r.data(), model.r.data() + model.r.size());
    return json{{"n", model.n}, {"d", model.d}, {"J", flat}, {"r", r}};
}

netham::PairHamiltonian model_from_json(const json& j) {
    return guarded("model", [&] {
        netham::PairHamiltonian model;
        model.n = j.at("n").get<int>();
        model.d = j.at("d").get<int>();
        if (model.n < 1 || model.d < 2) {
            fail("model", "need n >= 1 and d >= 2");
        }
        const auto dim = static_cast<Eigen::Index>(model.n) * model.m();
        const json& Jj = j.at("J");
        if (!Jj.empty() && Jj.front().is_array()) {
            model.J = matrix_from_json(Jj, "model.J");
        } else {
            const auto flat = Jj.get<std::vector<double>>();
            if (static_cast<Eigen::Index>(flat.size()) != dim * dim) {
                fail("model", "J must have (n m)^2 entries");
            }
            model.J.resize(dim, dim);
            for (Eigen::Index r = 0; r < dim; ++r) {
                for (Eigen::Index c = 0; c < dim; ++c) {
                    model.J(r, c) = flat[static_cast<std::size_t>(r * dim + c)];
                }
            }
        }
        const auto r = j.at("r").get<std::vector<double>>();
        model.r = Eigen::Map<const RVector>(r.data(), static_cast<Eigen::Index>(r.size()));
        netham::validate(model);
        return model;
    });
}

json to_json(const scheme::PulseScheme& sch) {
    const auto dims = sch.dims();
    json j{{"n", sch.n},
           {"d", dims.empty() ? 0 : dims.front()},
           {"N", sch.N},
           {"times", sch.times},
           {"pulses", sch.pulses},
           {"target_overhead", sch.target_overhead}};
    bool uniform_dims = true;
    bool all_pauli = true;
    for (const auto& b : sch.bases) {
        uniform_dims = uniform_dims && b.d == dims.front();
        all_pauli = all_pauli && b.kind == "generalized_pauli";
    }
    if (!uniform_dims) {
        j["dims"] = dims;
    }
    if (all_pauli) {
        j["basis"] = "generalized_pauli";
    } else {
        json per_node = json::array();
        for (const auto& b : sch.bases) {
            per_node.push_back(basis_json(b));
        }
        j["basis"] = per_node;
    }
    return j;
}

scheme::PulseScheme scheme_from_json(const json& j) {
    return guarded("scheme", [&] {
        scheme::PulseScheme sch;
        sch.n = j.at("n").get<int>();
        sch.N = j.at("N").get<int>();
        sch.times = j.at("times").get<std::vector<double>>();
        sch.pulses = int_matrix(j.at("pulses"), "scheme.pulses");
        sch.target_overhead = j.value("target_overhead", 1.0);
        if (sch.n < 1) {
            fail("scheme", "need n >= 1");
        }
        std::vector<int> dims;
        if (j.contains("dims")) {
            dims = j.at("dims").get<std::vector<int>>();
            if (static_cast<int>(dims.size()) != sch.n) {
                fail("scheme", "dims must list one dimension per node");
            }
        } else {
            dims.assign(static_cast<std::size_t>(sch.n), j.at("d").get<int>());
        }
        const json& basis = j.at("basis");
        if (basis.is_string()) {
            for (int d : dims) {
                sch.bases.push_back(basis_from(basis, d));
            }
        } else {
            if (!basis.is_array() || static_cast<int>(basis.size()) != sch.n) {
                fail("scheme", "basis must be \"generalized_pauli\" or one entry per node");
            }
            for (int k = 0; k < sch.n; ++k) {
                sch.bases.push_back(basis_from(basis[static_cast<std::size_t>(k)], dims[static_cast<std::size_t>(k)]));
            }
        }
        scheme::validate(sch);
        return sch;
    });
}

json to_json(const harmonic::PhaseScheme& ps) {
    json phases = json::array();
    for (Eigen::Index k = 0; k < ps.phases.rows(); ++k) {
        json row = json::array();
        for (Eigen::Index c = 0; c < ps.phases.cols(); ++c) {
            row.push_back(complex_json(ps.phases(k, c)));
        }
        phases.push_back(row);
    }
    return json{{"n", ps.n}, {"N", ps.N}, {"phases", phases}, {"times", ps.times}};
}

harmonic::PhaseScheme phase_scheme_from_json(const json& j) {
    return guarded("phase scheme", [&] {
        harmonic::PhaseScheme ps;
        ps.n = j.at("n").get<int>();
        ps.N = j.at("N").get<int>();
        ps.times = j.at("times").get<std::vector<double>>();
        const json& rows = j.at("phases");
        if (ps.n < 1 || ps.N < 1 || !rows.is_array() || static_cast<int>(rows.size()) != ps.n) {
            fail("phase scheme", "phases must have n rows");
        }
        ps.phases.resize(ps.n, ps.N);
        for (int k = 0; k < ps.n; ++k) {
            const json& row = rows[static_cast<std::size_t>(k)];
            if (!row.is_array() || static_cast<int>(row.size()) != ps.N) {
                fail("phase scheme", "phase rows must have N entries");
            }
            for (int c = 0; c < ps.N; ++c) {
                ps.phases(k, c) = complex_from(row[static_cast<std::size_t>(c)]);
            }
        }
        harmonic::validate(ps);
        return ps;
    });
}

json to_json(const harmonic::GramSynthesisReport& report) {
    json schedule = json::array();
    for (const auto& step : report.schedule) {
        schedule.push_back(json{{"color", step.color},
                                {"partition", step.partition},
                                {"node_signs", step.node_signs},
                                {"scheme", to_json(step.scheme)}});
    }
    json j{{"lower", report.lower}, {"has_upper", report.has_upper}, {"schedule", schedule}, {"note", report.note}};
    if (report.has_upper) {
        j["upper"] = report.upper;
        j["upper_exact"] = report.upper_exact;
    }
    return j;
}

json to_json(const graphcolor::InteractionGraph& g) {
    json edges = json::array();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        json edge = json::array({g.edges[e].first, g.edges[e].second});
        if (!g.weights.empty()) {
            edge.push_back(g.weights[e]);
        }
        edges.push_back(edge);
    }
    return json{{"n", g.n}, {"edges", edges}};
}

graphcolor::InteractionGraph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        std::vector<double> weights;
        bool weighted = false;
        bool unweighted = false;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) {
                fail("graph", "edges must be [k, l] or [k, l, weight]");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            if (e.size() == 3) {
                weighted = true;
                weights.push_back(e[2].get<double>());
            } else {
                unweighted = true;
            }
        }
        if (weighted && unweighted) {
            fail("graph", "either every edge carries a weight or none does");
        }
        return graphcolor::InteractionGraph(n, std::move(edges), std::move(weights));
    });
}

json to_json(const signs::SignTriple& st) {
    return json{{"n", st.n}, {"N", st.N}, {"Sx", st.Sx}, {"Sy", st.Sy}, {"Sz", st.Sz}};
}

signs::SignTriple signs_from_json(const json& j) {
    return guarded("signs", [&] {
        signs::SignTriple st;
        st.n = j.at("n").get<int>();
        st.N = j.at("N").get<int>();
        st.Sx = int_matrix(j.at("Sx"), "signs.Sx");
        st.Sy = int_matrix(j.at("Sy"), "signs.Sy");
        st.Sz = int_matrix(j.at("Sz"), "signs.Sz");
        expect_shape(st.Sx, st.n, st.N, "signs.Sx");
        expect_shape(st.Sy, st.n, st.N, "signs.Sy");
        expect_shape(st.Sz, st.n, st.N, "signs.Sz");
        return st;
    });
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

}  // namespace pulseforge::io
