#pragma once

#include "catalog.hpp"

#include <json.hpp>

namespace spinstat {

struct syntax_error : std::runtime_error {
    int line = 0;
    int column = 0;
    syntax_error(int l, int c, const std::string& what)
        : std::runtime_error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};
struct schema_error : std::runtime_error {
    std::string field;
    explicit schema_error(std::string f, const std::string& what = "")
        : std::runtime_error("schema error at field '" + f + "'" + (what.empty() ? "" : ": " + what)),
          field(std::move(f)) {}
};

/// A parsed description file: always an algebra, optionally promoted to a
/// theory when a "kind" field is present.
struct ParsedDocument {
    TheorySpec spec;
    bool has_kind = false;
};

namespace io_detail {

using nlohmann::json;

inline std::pair<int, int> byte_to_line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline void check_keys(const json& obj, const std::string& where,
                       const std::vector<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw schema_error(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
    }
}

inline GaussianRational scalar_field(const json& v, const std::string& field) {
    if (!v.is_string()) throw schema_error(field, "scalar values are strings like \"1/2+-1/3*i\"");
    return parse_scalar(v.get<std::string>());
}

inline Vec vector_field(const json& v, const std::string& field, int want_len) {
    if (!v.is_array()) throw schema_error(field, "expected an array of scalars");
    if (want_len >= 0 && static_cast<int>(v.size()) != want_len)
        throw schema_error(field, "expected length " + std::to_string(want_len));
    Vec out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out.push_back(scalar_field(v[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

inline GMatrix matrix_field(const json& v, const std::string& field, int want_rows, int want_cols) {
    if (!v.is_array()) throw schema_error(field, "expected an array of rows");
    if (want_rows >= 0 && static_cast<int>(v.size()) != want_rows)
        throw schema_error(field, "expected " + std::to_string(want_rows) + " rows");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < v.size(); ++r) {
        Vec row = vector_field(v[r], field + "[" + std::to_string(r) + "]", want_cols);
        if (!rows.empty() && rows[0].size() != row.size())
            throw schema_error(field, "ragged rows");
        rows.push_back(std::move(row));
    }
    return GMatrix::from_rows(rows);
}

}  // namespace io_detail

/// Strict parse of the description-file format.  Unknown keys are rejected;
/// scalar literals use the canonical "a/b+c/d*i" grammar.
inline ParsedDocument parse_document(const std::string& text) {
    using io_detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = io_detail::byte_to_line_col(text, e.byte);
        throw syntax_error(line, col, e.what());
    }
    if (!doc.is_object()) throw schema_error("", "top level must be an object");
    io_detail::check_keys(doc, "",
                          {"dim", "parity", "structure", "unit", "star", "trace", "kind", "phi",
                           "Phi", "reality"});

    ParsedDocument out;
    SuperAlgebra& a = out.spec.algebra;
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw schema_error("dim", "required non-negative integer");
    a.dim = doc["dim"].get<int>();

    if (!doc.contains("parity")) throw schema_error("parity", "required");
    if (!doc["parity"].is_array() || static_cast<int>(doc["parity"].size()) != a.dim)
        throw schema_error("parity", "expected an array of length dim");
    for (const auto& p : doc["parity"]) {
        if (!p.is_number_unsigned() || p.get<int>() > 1) throw schema_error("parity", "entries must be 0 or 1");
        a.parity.push_back(p.get<int>());
    }

    if (!doc.contains("structure")) throw schema_error("structure", "required");
    const json& st = doc["structure"];
    if (!st.is_array() || static_cast<int>(st.size()) != a.dim)
        throw schema_error("structure", "expected dim slices");
    a.c.assign(static_cast<std::size_t>(a.dim) * a.dim * a.dim, GaussianRational());
    for (int i = 0; i < a.dim; ++i) {
        GMatrix slice = io_detail::matrix_field(st[static_cast<std::size_t>(i)],
                                                "structure[" + std::to_string(i) + "]", a.dim, a.dim);
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) a.sc(i, j, k) = slice.at(j, k);
    }

    if (!doc.contains("unit")) throw schema_error("unit", "required");
    a.unit = io_detail::vector_field(doc["unit"], "unit", a.dim);

    if (doc.contains("star")) {
        const json& sj = doc["star"];
        if (!sj.is_object()) throw schema_error("star", "expected an object");
        io_detail::check_keys(sj, "star", {"matrix", "flavor"});
        if (!sj.contains("matrix") || !sj.contains("flavor")) throw schema_error("star", "needs matrix and flavor");
        StarStructure star;
        star.matrix = io_detail::matrix_field(sj["matrix"], "star.matrix", a.dim, a.dim);
        std::string flavor = sj["flavor"].is_string() ? sj["flavor"].get<std::string>() : "";
        if (flavor == "ordinary")
            star.flavor = StarFlavor::Ordinary;
        else if (flavor == "twisted")
            star.flavor = StarFlavor::Twisted;
        else
            throw schema_error("star.flavor", "must be \"ordinary\" or \"twisted\"");
        out.spec.star = std::move(star);
    }

    if (doc.contains("trace"))
        out.spec.trace = TraceFunctional{io_detail::vector_field(doc["trace"], "trace", a.dim)};

    if (doc.contains("reality")) {
        std::string r = doc["reality"].is_string() ? doc["reality"].get<std::string>() : "";
        if (r == "real")
            out.spec.reality = Reality::Real;
        else if (r == "imaginary")
            out.spec.reality = Reality::Imaginary;
        else if (r == "none")
            out.spec.reality = Reality::None;
        else
            throw schema_error("reality", "must be \"real\", \"imaginary\" or \"none\"");
    }

    if (doc.contains("kind")) {
        std::string k = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
        auto kind = kind_from_name(k);
        if (!kind) throw schema_error("kind", "unknown kind '" + k + "'");
        out.spec.kind = *kind;
        out.has_kind = true;
    }

    if (doc.contains("phi")) {
        if (a.dim > 0) {
            SpinTrivialization t;
            t.quotient = build_bimodule_quotient(a);
            t.phi = io_detail::matrix_field(doc["phi"], "phi", a.dim, t.quotient.space.dim());
            out.spec.spin = std::move(t);
        }
    }
    if (doc.contains("Phi")) {
        if (doc.contains("phi")) throw schema_error("Phi", "phi and Phi are mutually exclusive");
        out.spec.spinstat = SpinStatTrivialization{io_detail::matrix_field(doc["Phi"], "Phi", a.dim, a.dim)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization (canonical: alphabetical keys, canonical scalar strings)

namespace io_detail {

inline json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

inline json matrix_to_json(const GMatrix& m) {
    json arr = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace io_detail

inline std::string serialize_theory(const TheorySpec& spec, bool with_kind = true) {
    using io_detail::json;
    json doc;
    const SuperAlgebra& a = spec.algebra;
    doc["dim"] = a.dim;
    doc["parity"] = a.parity;
    json st = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json slice = json::array();
        for (int j = 0; j < a.dim; ++j) {
            json row = json::array();
            for (int k = 0; k < a.dim; ++k) row.push_back(to_string(a.sc(i, j, k)));
            slice.push_back(std::move(row));
        }
        st.push_back(std::move(slice));
    }
    doc["structure"] = std::move(st);
    doc["unit"] = io_detail::vec_to_json(a.unit);
    if (with_kind) doc["kind"] = kind_name(spec.kind);
    if (spec.star) {
        doc["star"]["matrix"] = io_detail::matrix_to_json(spec.star->matrix);
        doc["star"]["flavor"] = spec.star->flavor == StarFlavor::Ordinary ? "ordinary" : "twisted";
    }
    if (spec.trace) doc["trace"] = io_detail::vec_to_json(spec.trace->covector);
    if (spec.spin) doc["phi"] = io_detail::matrix_to_json(spec.spin->phi);
    if (spec.spinstat) doc["Phi"] = io_detail::matrix_to_json(spec.spinstat->phi);
    if (spec.reality == Reality::Real) doc["reality"] = "real";
    if (spec.reality == Reality::Imaginary) doc["reality"] = "imaginary";
    return doc.dump(2) + "\n";
}

}  // namespace spinstat
