// Copyright 2026 The imkit Authors
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


#include "matrix_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "imkit/errors.hpp"
#include "json.hpp"

namespace imkit::cli {

using nlohmann::json;

const char *to_string(FileKind k) noexcept {
    switch (k) {
    case FileKind::density: return "density";
    case FileKind::pure: return "pure";
    case FileKind::kraus_set: return "kraus_set";
    case FileKind::bipartite: return "bipartite";
    }
    return "unknown";
}

bool MatrixFile::operator==(const MatrixFile &other) const {
    if (kind != other.kind || dims != other.dims || matrices.size() != other.matrices.size()) return false;
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const ComplexMatrix &a = matrices[k];
        const ComplexMatrix &b = other.matrices[k];
        if (a.rows() != b.rows() || a.cols() != b.cols() || a != b) return false;
    }
    return true;
}

namespace {

struct Context {
    const std::string &source;

    [[noreturn]] void fail(const std::string &pointer, const std::string &what) const {
        throw ParseError(what, source + " at " + (pointer.empty() ? "/" : pointer));
    }
};

std::string line_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

Complex parse_complex(const json &j, const std::string &ptr, const Context &ctx) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        ctx.fail(ptr, "complex entry must be a two-element array [re, im]");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) ctx.fail(ptr, "complex entry is not finite");
    return {re, im};
}

ComplexMatrix parse_matrix(const json &j, Index rows, Index cols, const std::string &ptr, const Context &ctx) {
    if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
        ctx.fail(ptr, "expected an array of " + std::to_string(rows) + " rows");
    }
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const json &row = j[static_cast<std::size_t>(r)];
        const std::string rptr = ptr + "/" + std::to_string(r);
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            ctx.fail(rptr, "expected a row of " + std::to_string(cols) + " entries");
        }
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = parse_complex(row[static_cast<std::size_t>(c)], rptr + "/" + std::to_string(c), ctx);
        }
    }
    return m;
}

FileKind parse_kind(const json &j, const Context &ctx) {
    if (!j.is_string()) ctx.fail("/kind", "\"kind\" must be a string");
    const std::string s = j.get<std::string>();
    for (FileKind k : {FileKind::density, FileKind::pure, FileKind::kraus_set, FileKind::bipartite}) {
        if (s == to_string(k)) return k;
    }
    ctx.fail("/kind", "unknown kind \"" + s + "\" (expected density, pure, kraus_set or bipartite)");
}

std::size_t expected_dims(FileKind k) { return k == FileKind::density || k == FileKind::pure ? 1 : 2; }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

MatrixFile parse_matrix_file(const std::string &text, const std::string &source) {
    const Context ctx{source};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("malformed JSON", source + ":" + line_column(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    if (!j.is_object()) ctx.fail("", "top level must be an object");
    for (const auto &[key, value] : j.items()) {
        if (key != "kind" && key != "dims" && key != "entries") ctx.fail("/" + key, "unknown field \"" + key + "\"");
    }
    for (const char *key : {"kind", "dims", "entries"}) {
        if (!j.contains(key)) ctx.fail("", std::string("missing field \"") + key + "\"");
    }

    MatrixFile f;
    f.kind = parse_kind(j["kind"], ctx);

    const json &dims = j["dims"];
    if (!dims.is_array() || dims.size() != expected_dims(f.kind)) {
        ctx.fail("/dims", std::string("kind ") + to_string(f.kind) + " needs " + std::to_string(expected_dims(f.kind)) +
                              " dimension(s)");
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (!dims[k].is_number_integer() || dims[k].get<long long>() < 1) {
            ctx.fail("/dims/" + std::to_string(k), "dimension must be a positive integer");
        }
        f.dims.push_back(static_cast<Index>(dims[k].get<long long>()));
    }

    const json &entries = j["entries"];
    switch (f.kind) {
    case FileKind::density: f.matrices.push_back(parse_matrix(entries, f.dims[0], f.dims[0], "/entries", ctx)); break;
    case FileKind::bipartite: {
        const Index n = f.dims[0] * f.dims[1];
        f.matrices.push_back(parse_matrix(entries, n, n, "/entries", ctx));
        break;
    }
    case FileKind::pure: {
        if (!entries.is_array() || static_cast<Index>(entries.size()) != f.dims[0]) {
            ctx.fail("/entries", "expected an array of " + std::to_string(f.dims[0]) + " amplitudes");
        }
        ComplexMatrix v(f.dims[0], 1);
        for (Index k = 0; k < f.dims[0]; ++k) {
            v(k, 0) = parse_complex(entries[static_cast<std::size_t>(k)], "/entries/" + std::to_string(k), ctx);
        }
        f.matrices.push_back(std::move(v));
        break;
    }
    case FileKind::kraus_set:
        if (!entries.is_array() || entries.empty()) ctx.fail("/entries", "expected a nonempty array of operators");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            f.matrices.push_back(parse_matrix(entries[k], f.dims[0], f.dims[1], "/entries/" + std::to_string(k), ctx));
        }
        break;
    }
    return f;
}

MatrixFile read_matrix_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_file(ss.str(), path);
}

std::string serialize(const MatrixFile &f) {
    json j;
    j["kind"] = to_string(f.kind);
    j["dims"] = f.dims;
    if (f.kind == FileKind::pure) {
        json amps = json::array();
        for (Index k = 0; k < f.matrices.front().rows(); ++k) amps.push_back(complex_json(f.matrices.front()(k, 0)));
        j["entries"] = std::move(amps);
    } else if (f.kind == FileKind::kraus_set) {
        json ops = json::array();
        for (const auto &m : f.matrices) ops.push_back(matrix_json(m));
        j["entries"] = std::move(ops);
    } else {
        j["entries"] = matrix_json(f.matrices.front());
    }
    return j.dump() + "\n";
}

MatrixFile from_pure(const PureState &psi) {
    return {FileKind::pure, {psi.dim()}, {ComplexMatrix(psi.amplitudes())}};
}

MatrixFile from_density(const DensityMatrix &rho) { return {FileKind::density, {rho.dim()}, {rho.matrix()}}; }

MatrixFile from_kraus(const KrausSet &k) { return {FileKind::kraus_set, {k.d_out(), k.d_in()}, k.ops()}; }

DensityMatrix as_density(const MatrixFile &f, const Tolerances &tol) {
    switch (f.kind) {
    case FileKind::pure: return DensityMatrix::from_pure(PureState(f.matrices.front().col(0), tol));
    case FileKind::density:
    case FileKind::bipartite: return DensityMatrix(f.matrices.front(), tol);
    case FileKind::kraus_set: break;
    }
    throw DimensionError("expected a state file, got a kraus_set file");
}

BipartiteState as_bipartite(const MatrixFile &f, const Tolerances &tol) {
    if (f.kind != FileKind::bipartite) {
        throw DimensionError(std::string("expected a bipartite file, got a ") + to_string(f.kind) + " file");
    }
    return BipartiteState(f.matrices.front(), f.dims[0], f.dims[1], tol);
}

KrausSet as_kraus(const MatrixFile &f, const Tolerances &tol) {
    if (f.kind != FileKind::kraus_set) {
        throw DimensionError(std::string("expected a kraus_set file, got a ") + to_string(f.kind) + " file");
    }
    return KrausSet(f.matrices, tol);
}

std::optional<PureState> as_pure(const MatrixFile &f, const Tolerances &tol) {
    if (f.kind == FileKind::pure) return PureState(f.matrices.front().col(0), tol);
    if (f.kind == FileKind::kraus_set) return std::nullopt;
    const DensityMatrix rho = as_density(f, tol);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
    const Index n = rho.dim();
    if (n > 1 && es.eigenvalues()(n - 2) > tol.psd) return std::nullopt;
    return PureState::normalized(es.eigenvectors().col(n - 1));
}

} // namespace imkit::cli
