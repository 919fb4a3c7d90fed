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


// Matrix files: one JSON object per file with explicit "kind" and "dims"
// headers and complex entries written as [re, im] pairs.
//
//   {"kind": "density",   "dims": [n],         "entries": n x n matrix}
//   {"kind": "pure",      "dims": [n],         "entries": n amplitudes}
//   {"kind": "bipartite", "dims": [dA, dB],    "entries": dA dB x dA dB matrix}
//   {"kind": "kraus_set", "dims": [dout, din], "entries": list of dout x din matrices}

#ifndef IMKIT_CLI_MATRIX_FILE_HPP
#define IMKIT_CLI_MATRIX_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "imkit/linalg.hpp"
#include "imkit/transforms.hpp"

namespace imkit::cli {

enum class FileKind { density, pure, kraus_set, bipartite };

const char *to_string(FileKind k) noexcept;

struct MatrixFile {
    FileKind kind = FileKind::density;
    std::vector<Index> dims;
    /// One matrix for density and bipartite files, one n x 1 column for pure
    /// files, one matrix per operator for Kraus sets.
    std::vector<ComplexMatrix> matrices;

    bool operator==(const MatrixFile &other) const;
};

/// Structural parse. Throws ParseError whose location is "source:line:col"
/// for malformed JSON and "source at /json/pointer" for bad fields.
MatrixFile parse_matrix_file(const std::string &text, const std::string &source = "<input>");

/// Reads and parses a file; an unreadable path is a ParseError as well.
MatrixFile read_matrix_file(const std::string &path);

/// Inverse of parse_matrix_file. Doubles are written with enough digits to
/// round-trip exactly.
std::string serialize(const MatrixFile &f);

MatrixFile from_pure(const PureState &psi);
MatrixFile from_density(const DensityMatrix &rho);
MatrixFile from_kraus(const KrausSet &k);

/// Typed views. Each throws InvariantError when the content violates the
/// type's invariants under `tol`, and DimensionError when the kind does not
/// fit (for instance a Kraus set where a state is expected).
DensityMatrix as_density(const MatrixFile &f, const Tolerances &tol);
BipartiteState as_bipartite(const MatrixFile &f, const Tolerances &tol);
KrausSet as_kraus(const MatrixFile &f, const Tolerances &tol);

/// The pure state behind a pure file or a rank-one density file, if any.
std::optional<PureState> as_pure(const MatrixFile &f, const Tolerances &tol);

} // namespace imkit::cli

#endif // IMKIT_CLI_MATRIX_FILE_HPP
