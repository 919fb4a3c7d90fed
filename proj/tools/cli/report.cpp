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


#include "report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "imkit/errors.hpp"
#include "json.hpp"

namespace imkit::cli {

using nlohmann::json;

bool NamedMatrix::operator==(const NamedMatrix &other) const {
    return name == other.name && matrix.rows() == other.matrix.rows() && matrix.cols() == other.matrix.cols() &&
           matrix == other.matrix;
}

bool Provenance::operator==(const Provenance &o) const {
    const Tolerances &a = tolerances;
    const Tolerances &b = o.tolerances;
    return version == o.version && a.herm == b.herm && a.trace == b.trace && a.norm == b.norm && a.psd == b.psd &&
           a.rec == b.rec && solver_gap == o.solver_gap && solver_max_iter == o.solver_max_iter &&
           alpha_tol == o.alpha_tol && covariance_tol == o.covariance_tol;
}

const Value *Report::find(const std::string &name) const {
    for (const auto &v : values)
        if (v.name == name) return &v.value;
    return nullptr;
}

const Table *Report::find_table(const std::string &name) const {
    for (const auto &t : tables)
        if (t.name == name) return &t;
    return nullptr;
}

void Report::require_finite() const {
    const auto check = [](double x, const std::string &where) {
        if (!std::isfinite(x)) throw InvariantError("report value " + where + " is not finite");
    };
    for (const auto &v : values)
        if (const double *d = std::get_if<double>(&v.value)) check(*d, v.name);
    for (const auto &m : matrices)
        if (!m.matrix.allFinite()) check(NAN, m.name);
    for (const auto &t : tables)
        for (const auto &row : t.rows)
            for (double x : row) check(x, t.name);
}

std::string digest(const std::vector<std::string> &inputs) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 0x100000001b3ULL;
    };
    for (const auto &s : inputs) {
        for (char c : s) mix(static_cast<unsigned char>(c));
        mix(0);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string complex_text(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

std::string value_text(const Value &v, bool full) {
    if (const double *d = std::get_if<double>(&v)) return full ? number(*d) : short_number(*d);
    if (const bool *b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_text(const Report &r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    out << "inputs:  " << r.inputs_digest << "\n";
    std::size_t width = 0;
    for (const auto &v : r.values) width = std::max(width, v.name.size());
    for (const auto &v : r.values) {
        out << "  " << v.name << std::string(width - v.name.size(), ' ') << " = " << value_text(v.value, false) << "\n";
    }
    for (const auto &m : r.matrices) {
        out << m.name << " (" << m.matrix.rows() << "x" << m.matrix.cols() << "):\n";
        for (Index i = 0; i < m.matrix.rows(); ++i) {
            out << " ";
            for (Index j = 0; j < m.matrix.cols(); ++j) out << "  " << complex_text(m.matrix(i, j));
            out << "\n";
        }
    }
    for (const auto &t : r.tables) {
        out << t.name << ":\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "  " : "  ") << t.columns[c];
        out << "\n";
        for (const auto &row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << "  " << short_number(row[c]);
            out << "\n";
        }
    }
    if (r.artifact) out << "artifact: " << to_string(r.artifact->kind) << " file\n";
    const Provenance &p = r.provenance;
    out << "imkit " << p.version << "; tolerances herm " << short_number(p.tolerances.herm) << ", trace "
        << short_number(p.tolerances.trace) << ", norm " << short_number(p.tolerances.norm) << ", psd "
        << short_number(p.tolerances.psd) << ", rec " << short_number(p.tolerances.rec) << "; solver gap "
        << short_number(p.solver_gap) << " (max " << p.solver_max_iter << " iterations); alpha "
        << short_number(p.alpha_tol) << "; covariance " << short_number(p.covariance_tol) << "\n";
    return out.str();
}

std::string render_csv(const Report &r) {
    std::ostringstream out;
    out << "name,value\n";
    out << "command," << csv_field(r.command) << "\n";
    out << "inputs_digest," << r.inputs_digest << "\n";
    for (const auto &v : r.values) out << csv_field(v.name) << "," << csv_field(value_text(v.value, true)) << "\n";
    for (const auto &m : r.matrices) {
        out << "\nmatrix,row,col,re,im\n";
        for (Index i = 0; i < m.matrix.rows(); ++i)
            for (Index j = 0; j < m.matrix.cols(); ++j)
                out << csv_field(m.name) << "," << i << "," << j << "," << number(m.matrix(i, j).real()) << ","
                    << number(m.matrix(i, j).imag()) << "\n";
    }
    for (const auto &t : r.tables) {
        out << "\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_field(t.columns[c]);
        out << "\n";
        for (const auto &row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << number(row[c]);
            out << "\n";
        }
    }
    return out.str();
}

json matrix_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json &j) {
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    ComplexMatrix m(rows, cols);
    const json &e = j.at("entries");
    for (Index i = 0; i < rows; ++i)
        for (Index k = 0; k < cols; ++k) {
            const json &z = e.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k));
            m(i, k) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
    return m;
}

json to_json(const Report &r) {
    json j;
    j["command"] = r.command;
    j["inputs_digest"] = r.inputs_digest;
    json values = json::array();
    for (const auto &v : r.values) {
        json item{{"name", v.name}};
        std::visit([&item](const auto &x) { item["value"] = x; }, v.value);
        values.push_back(std::move(item));
    }
    json matrices = json::array();
    for (const auto &m : r.matrices) {
        json item = matrix_json(m.matrix);
        item["name"] = m.name;
        matrices.push_back(std::move(item));
    }
    json tables = json::array();
    for (const auto &t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
    j["outputs"] = {{"values", values}, {"matrices", matrices}, {"tables", tables}};
    j["artifact"] = r.artifact ? json::parse(serialize(*r.artifact)) : json(nullptr);
    const Provenance &p = r.provenance;
    j["provenance"] = {{"version", p.version},
                       {"tolerances",
                        {{"herm", p.tolerances.herm},
                         {"trace", p.tolerances.trace},
                         {"norm", p.tolerances.norm},
                         {"psd", p.tolerances.psd},
                         {"rec", p.tolerances.rec}}},
                       {"solver_gap", p.solver_gap},
                       {"solver_max_iter", p.solver_max_iter},
                       {"alpha_tol", p.alpha_tol},
                       {"covariance_tol", p.covariance_tol}};
    return j;
}

} // namespace

std::string render(const Report &r, Format f) {
    switch (f) {
    case Format::text: return render_text(r);
    case Format::csv: return render_csv(r);
    case Format::structured: return to_json(r).dump(2) + "\n";
    }
    return {};
}

Report parse_structured(const std::string &text) {
    try {
        const json j = json::parse(text);
        Report r;
        r.command = j.at("command").get<std::string>();
        r.inputs_digest = j.at("inputs_digest").get<std::string>();
        const json &out = j.at("outputs");
        for (const json &v : out.at("values")) {
            const json &x = v.at("value");
            Value val;
            if (x.is_boolean()) {
                val = x.get<bool>();
            } else if (x.is_number()) {
                val = x.get<double>();
            } else {
                val = x.get<std::string>();
            }
            r.values.push_back({v.at("name").get<std::string>(), std::move(val)});
        }
        for (const json &m : out.at("matrices")) r.matrices.push_back({m.at("name").get<std::string>(), matrix_from_json(m)});
        for (const json &t : out.at("tables")) {
            r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                                t.at("rows").get<std::vector<std::vector<double>>>()});
        }
        if (!j.at("artifact").is_null()) r.artifact = parse_matrix_file(j.at("artifact").dump(), "artifact");
        const json &p = j.at("provenance");
        const json &t = p.at("tolerances");
        r.provenance.version = p.at("version").get<std::string>();
        r.provenance.tolerances = {t.at("herm").get<double>(), t.at("trace").get<double>(), t.at("norm").get<double>(),
                                   t.at("psd").get<double>(), t.at("rec").get<double>()};
        r.provenance.solver_gap = p.at("solver_gap").get<double>();
        r.provenance.solver_max_iter = p.at("solver_max_iter").get<int>();
        r.provenance.alpha_tol = p.at("alpha_tol").get<double>();
        r.provenance.covariance_tol = p.at("covariance_tol").get<double>();
        return r;
    } catch (const json::exception &e) {
        throw ParseError(e.what(), "report");
    }
}

} // namespace imkit::cli
