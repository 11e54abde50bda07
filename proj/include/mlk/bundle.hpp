#pragma once

// Bundle files: a strict JSON container for exact structure-constant data,
// plus the registry that dispatches named law checks and builders over a
// loaded bundle.
//
// Format (all sections except "dim" are optional; unknown fields rejected):
//   {
//     "dim": 4,
//     "bracket":   [[i, j, k, coeff], ...],   // coefficient of e_k in [e_i, e_j]
//     "cobracket": [[i, j, k, coeff], ...],   // coefficient of e_j (x) e_k in D(e_i)
//     "maps":     {"N": [[row], ...], ...},   // named dense matrices, any shape
//     "forms":    {"omega": [[row], ...]},    // named dim x dim Gram matrices
//     "tensors":  {"r": [[row], ...]},        // named dim x dim two-tensors
//     "cochains": {"mu1": [[i, j, k, coeff], ...]},  // named sparse 3-tensors
//     "params":   {"lambda": 1, "gamma": "1/2"}
//   }
// Indices are 1-based. A coefficient is a JSON integer, an exact rational
// string "p/q", or a parameter reference "name" / "-name" / "c*name" with a
// rational multiplier c. Floating-point literals are rejected everywhere.
// Absent bracket/cobracket sections mean the zero algebra/coalgebra.

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mlk/bialgebra.hpp"
#include "mlk/defext.hpp"
#include "mlk/errors.hpp"
#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/operators.hpp"
#include "mlk/rational.hpp"
#include "mlk/report.hpp"
#include "mlk/yangbaxter.hpp"

namespace mlk {

using Json = nlohmann::ordered_json;

// One sparse entry of a named 3-tensor, kept 1-based until a law gives the
// tensor its shape.
struct SparseEntry {
    int i = 0, j = 0, k = 0;
    Q value;
};

struct Bundle {
    int dim = 0;
    Tensor3 bracket{0, 0, 0};
    Tensor3 cobracket{0, 0, 0};
    std::map<std::string, Matrix> maps;
    std::map<std::string, Matrix> forms;
    std::map<std::string, Matrix> tensors;
    std::map<std::string, std::vector<SparseEntry>> cochains;
    std::map<std::string, Q> params;
};

namespace detail {

constexpr int kMaxBundleDim = 64;

inline bool is_name_char(char c, bool first) {
    const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (first) return alpha;
    return alpha || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

inline bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (std::size_t i = 0; i < name.size(); ++i)
        if (!is_name_char(name[i], i == 0)) return false;
    return true;
}

// Scalar grammar: rational literal, or [-][c*]name resolved against params.
inline Q scalar_from_token(std::string_view text, const std::map<std::string, Q>& params,
                           const std::string& where) {
    bool has_alpha = false;
    for (char c : text)
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) has_alpha = true;
    if (!has_alpha) {
        try {
            return parse_rational(text);
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    std::string_view rest = text;
    Q coef = 1;
    if (!rest.empty() && rest.front() == '-') {
        coef = -1;
        rest.remove_prefix(1);
    }
    if (const auto star = rest.find('*'); star != std::string_view::npos) {
        try {
            coef *= parse_rational(rest.substr(0, star));
        } catch (const ParseError&) {
            throw ParseError(where + ": malformed multiplier in '" + std::string(text) + "'");
        }
        rest.remove_prefix(star + 1);
    }
    if (!valid_name(rest))
        throw ParseError(where + ": malformed scalar '" + std::string(text) + "'");
    const auto it = params.find(std::string(rest));
    if (it == params.end())
        throw ParseError(where + ": parameter '" + std::string(rest) +
                         "' is not defined (declare it under params or pass --param)");
    return coef * it->second;
}

inline Q scalar_from_json(const Json& v, const std::map<std::string, Q>& params,
                          const std::string& where) {
    if (v.is_number_float())
        throw ParseError(where + ": floating-point literals are not accepted; "
                                 "write an integer or an exact rational string");
    if (v.is_number_unsigned()) {
        const std::uint64_t raw = v.get<std::uint64_t>();
        if (raw > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError(where + ": integer literal is too large; write it as a string");
        return Q(static_cast<std::int64_t>(raw));
    }
    if (v.is_number_integer()) return Q(v.get<std::int64_t>());
    if (v.is_string()) return scalar_from_token(v.get<std::string>(), params, where);
    throw ParseError(where + ": expected an integer or rational string");
}

inline int index_from_json(const Json& v, int max_index, const std::string& where) {
    if (!v.is_number_integer() || v.is_number_float())
        throw ParseError(where + ": indices must be plain integers");
    const std::int64_t raw = v.is_number_unsigned()
                                 ? static_cast<std::int64_t>(
                                       std::min<std::uint64_t>(v.get<std::uint64_t>(),
                                                               std::numeric_limits<std::int64_t>::max()))
                                 : v.get<std::int64_t>();
    if (raw < 1 || (max_index > 0 && raw > max_index))
        throw ParseError(where + ": index " + std::to_string(raw) + " out of range 1.." +
                         (max_index > 0 ? std::to_string(max_index) : std::string("n")));
    return static_cast<int>(raw);
}

// [i, j, k, coeff] rows; duplicate index triples rejected. max_index 0 defers
// the upper bound to the consumer (named cochains have law-dependent shapes).
inline std::vector<SparseEntry> triples_from_json(const Json& v,
                                                  const std::map<std::string, Q>& params,
                                                  int max_index, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array of [i, j, k, coeff] entries");
    std::vector<SparseEntry> out;
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t at = 0; at < v.size(); ++at) {
        const std::string here = where + "[" + std::to_string(at) + "]";
        const Json& e = v[at];
        if (!e.is_array() || e.size() != 4)
            throw ParseError(here + ": expected [i, j, k, coeff]");
        SparseEntry entry;
        entry.i = index_from_json(e[0], max_index, here);
        entry.j = index_from_json(e[1], max_index, here);
        entry.k = index_from_json(e[2], max_index, here);
        entry.value = scalar_from_json(e[3], params, here);
        if (!seen.insert({entry.i, entry.j, entry.k}).second)
            throw ParseError(here + ": duplicate entry for indices (" + std::to_string(entry.i) +
                             ", " + std::to_string(entry.j) + ", " + std::to_string(entry.k) + ")");
        out.push_back(std::move(entry));
    }
    return out;
}

inline Matrix matrix_from_json(const Json& v, const std::map<std::string, Q>& params,
                               const std::string& where) {
    if (!v.is_array() || v.empty() || !v[0].is_array() || v[0].empty())
        throw ParseError(where + ": expected a non-empty array of non-empty rows");
    const int rows = static_cast<int>(v.size());
    const int cols = static_cast<int>(v[0].size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = v[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(where + "[" + std::to_string(r) + "]: expected a row of " +
                             std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)], params,
                                       where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                           "]");
    }
    return m;
}

inline void fill_tensor(Tensor3& t, const std::vector<SparseEntry>& entries) {
    for (const SparseEntry& e : entries) t(e.i - 1, e.j - 1, e.k - 1) = e.value;
}

inline std::map<std::string, Matrix> matrices_from_json(const Json& v,
                                                        const std::map<std::string, Q>& params,
                                                        int square_dim, const std::string& where) {
    if (!v.is_object()) throw ParseError(where + ": expected an object of named matrices");
    std::map<std::string, Matrix> out;
    for (const auto& [name, value] : v.items()) {
        const std::string here = where + "." + name;
        if (!valid_name(name)) throw ParseError(here + ": invalid name");
        Matrix m = matrix_from_json(value, params, here);
        if (square_dim > 0 && (m.rows() != square_dim || m.cols() != square_dim))
            throw ParseError(here + ": must be " + std::to_string(square_dim) + " x " +
                             std::to_string(square_dim));
        out.emplace(name, std::move(m));
    }
    return out;
}

}  // namespace detail

// Parse a bundle document. `overrides` are applied on top of the file's
// params section before any scalar referencing a parameter is resolved.
inline Bundle bundle_from_json(const Json& doc, const std::map<std::string, Q>& overrides = {},
                               const std::string& origin = "<memory>") {
    if (!doc.is_object()) throw ParseError(origin + ": a bundle must be a JSON object");
    static const std::set<std::string> known = {"dim",   "bracket", "cobracket", "maps",
                                                "forms", "tensors", "cochains",  "params"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (known.find(key) == known.end())
            throw ParseError(origin + ": unknown field '" + key + "'");
    }
    Bundle b;
    if (!doc.contains("dim")) throw ParseError(origin + ": missing required field 'dim'");
    {
        const Json& jd = doc["dim"];
        if (!jd.is_number_integer() || jd.is_number_float())
            throw ParseError(origin + ".dim: must be an integer");
        const std::int64_t raw = jd.is_number_unsigned()
                                     ? static_cast<std::int64_t>(std::min<std::uint64_t>(
                                           jd.get<std::uint64_t>(), 1u << 20))
                                     : jd.get<std::int64_t>();
        if (raw < 1 || raw > detail::kMaxBundleDim)
            throw ParseError(origin + ".dim: must be between 1 and " +
                             std::to_string(detail::kMaxBundleDim));
        b.dim = static_cast<int>(raw);
    }
    if (doc.contains("params")) {
        const Json& jp = doc["params"];
        if (!jp.is_object()) throw ParseError(origin + ".params: expected an object");
        for (const auto& [name, value] : jp.items()) {
            if (!detail::valid_name(name))
                throw ParseError(origin + ".params." + name + ": invalid name");
            // Parameter values are literal; they may not reference each other.
            b.params[name] = detail::scalar_from_json(value, {}, origin + ".params." + name);
        }
    }
    for (const auto& [name, value] : overrides) b.params[name] = value;

    b.bracket = Tensor3(b.dim, b.dim, b.dim);
    b.cobracket = Tensor3(b.dim, b.dim, b.dim);
    if (doc.contains("bracket"))
        detail::fill_tensor(b.bracket, detail::triples_from_json(doc["bracket"], b.params, b.dim,
                                                                 origin + ".bracket"));
    if (doc.contains("cobracket"))
        detail::fill_tensor(b.cobracket, detail::triples_from_json(doc["cobracket"], b.params,
                                                                   b.dim, origin + ".cobracket"));
    if (doc.contains("maps"))
        b.maps = detail::matrices_from_json(doc["maps"], b.params, 0, origin + ".maps");
    if (doc.contains("forms"))
        b.forms = detail::matrices_from_json(doc["forms"], b.params, b.dim, origin + ".forms");
    if (doc.contains("tensors"))
        b.tensors = detail::matrices_from_json(doc["tensors"], b.params, b.dim, origin + ".tensors");
    if (doc.contains("cochains")) {
        const Json& jc = doc["cochains"];
        if (!jc.is_object()) throw ParseError(origin + ".cochains: expected an object");
        for (const auto& [name, value] : jc.items()) {
            const std::string here = origin + ".cochains." + name;
            if (!detail::valid_name(name)) throw ParseError(here + ": invalid name");
            b.cochains[name] = detail::triples_from_json(value, b.params, 0, here);
        }
    }
    return b;
}

inline Bundle parse_bundle_text(std::string_view text, const std::map<std::string, Q>& overrides = {},
                                const std::string& origin = "<memory>") {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    return bundle_from_json(doc, overrides, origin);
}

inline Bundle load_bundle(const std::string& path, const std::map<std::string, Q>& overrides = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open bundle file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_bundle_text(text.str(), overrides, path);
}

// ---- serialization ----------------------------------------------------------

namespace detail {

inline Json scalar_to_json(const Q& q) {
    if (denominator_of(q) == 1) {
        const Z num = numerator_of(q);
        static const Z lo(std::numeric_limits<std::int64_t>::min());
        static const Z hi(std::numeric_limits<std::int64_t>::max());
        if (num >= lo && num <= hi) return Json(num.convert_to<std::int64_t>());
    }
    return Json(to_string(q));
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json tensor_to_triples(const Tensor3& t) {
    Json out = Json::array();
    for (int i = 0; i < t.dim1(); ++i)
        for (int j = 0; j < t.dim2(); ++j)
            for (int k = 0; k < t.dim3(); ++k)
                if (t(i, j, k) != 0)
                    out.push_back(Json::array({i + 1, j + 1, k + 1, scalar_to_json(t(i, j, k))}));
    return out;
}

inline bool tensor_nonzero(const Tensor3& t) {
    for (int i = 0; i < t.dim1(); ++i)
        for (int j = 0; j < t.dim2(); ++j)
            for (int k = 0; k < t.dim3(); ++k)
                if (t(i, j, k) != 0) return true;
    return false;
}

}  // namespace detail

inline Json bundle_to_json(const Bundle& b) {
    Json out = Json::object();
    out["dim"] = b.dim;
    if (detail::tensor_nonzero(b.bracket)) out["bracket"] = detail::tensor_to_triples(b.bracket);
    if (detail::tensor_nonzero(b.cobracket))
        out["cobracket"] = detail::tensor_to_triples(b.cobracket);
    auto named = [](const std::map<std::string, Matrix>& section) {
        Json group = Json::object();
        for (const auto& [name, m] : section) group[name] = detail::matrix_to_json(m);
        return group;
    };
    if (!b.maps.empty()) out["maps"] = named(b.maps);
    if (!b.forms.empty()) out["forms"] = named(b.forms);
    if (!b.tensors.empty()) out["tensors"] = named(b.tensors);
    if (!b.cochains.empty()) {
        Json group = Json::object();
        for (const auto& [name, entries] : b.cochains) {
            std::vector<SparseEntry> sorted = entries;
            std::sort(sorted.begin(), sorted.end(), [](const SparseEntry& a, const SparseEntry& c) {
                return std::tie(a.i, a.j, a.k) < std::tie(c.i, c.j, c.k);
            });
            Json list = Json::array();
            for (const SparseEntry& e : sorted)
                list.push_back(Json::array({e.i, e.j, e.k, detail::scalar_to_json(e.value)}));
            group[name] = std::move(list);
        }
        out["cochains"] = std::move(group);
    }
    if (!b.params.empty()) {
        Json group = Json::object();
        for (const auto& [name, value] : b.params) group[name] = detail::scalar_to_json(value);
        out["params"] = std::move(group);
    }
    return out;
}

inline void save_bundle(const Bundle& b, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write bundle file: " + path);
    out << bundle_to_json(b).dump(2) << '\n';
    if (!out) throw Error("failed writing bundle file: " + path);
}

inline Json report_to_json(const CheckReport& rep, const std::map<std::string, Q>& params = {}) {
    Json out = Json::object();
    out["law"] = rep.law;
    out["pass"] = rep.pass;
    Json ws = Json::array();
    for (const Witness& w : rep.witnesses) {
        Json jw = Json::object();
        jw["indices"] = w.indices;
        Json lhs = Json::array(), rhs = Json::array();
        for (const Q& q : w.lhs) lhs.push_back(to_string(q));
        for (const Q& q : w.rhs) rhs.push_back(to_string(q));
        jw["lhs"] = std::move(lhs);
        jw["rhs"] = std::move(rhs);
        ws.push_back(std::move(jw));
    }
    out["witnesses"] = std::move(ws);
    Json ps = Json::object();
    for (const auto& [name, value] : params) ps[name] = to_string(value);
    out["params"] = std::move(ps);
    return out;
}

// ---- component access -------------------------------------------------------

namespace detail {

inline MockLieAlgebra bundle_algebra(const Bundle& b) { return {b.dim, b.bracket}; }
inline MockLieCoalgebra bundle_coalgebra(const Bundle& b) { return {b.dim, b.cobracket}; }

inline const Matrix& need_map(const Bundle& b, const std::string& name) {
    const auto it = b.maps.find(name);
    if (it == b.maps.end()) throw MissingComponentError("map '" + name + "' is required");
    return it->second;
}

inline Matrix map_or_zero(const Bundle& b, const std::string& name, int rows, int cols) {
    const auto it = b.maps.find(name);
    if (it == b.maps.end()) return Matrix(rows, cols);
    if (it->second.rows() != rows || it->second.cols() != cols)
        throw DimensionError("map '" + name + "' must be " + std::to_string(rows) + " x " +
                             std::to_string(cols));
    return it->second;
}

inline const Matrix& need_form(const Bundle& b, const std::string& name) {
    const auto it = b.forms.find(name);
    if (it == b.forms.end()) throw MissingComponentError("form '" + name + "' is required");
    return it->second;
}

inline const Matrix& need_tensor(const Bundle& b, const std::string& name) {
    const auto it = b.tensors.find(name);
    if (it == b.tensors.end()) throw MissingComponentError("tensor '" + name + "' is required");
    return it->second;
}

// Representation matrices rho1..rho<dim>, all square of one size.
inline Representation need_rep(const Bundle& b) {
    Representation rep{b.dim, 0, {}};
    rep.action.reserve(static_cast<std::size_t>(b.dim));
    for (int i = 1; i <= b.dim; ++i) {
        const std::string name = "rho" + std::to_string(i);
        const auto it = b.maps.find(name);
        if (it == b.maps.end())
            throw MissingComponentError("map '" + name +
                                        "' is required (representation matrices rho1..rho" +
                                        std::to_string(b.dim) + ")");
        const Matrix& m = it->second;
        if (m.rows() != m.cols())
            throw DimensionError("map '" + name + "' must be square");
        if (i == 1)
            rep.space_dim = m.rows();
        else if (m.rows() != rep.space_dim)
            throw DimensionError("map '" + name + "' must match the size of rho1");
        rep.action.push_back(m);
    }
    return rep;
}

inline Tensor3 cochain_or_zero(const Bundle& b, const std::string& name, int d1, int d2, int d3) {
    Tensor3 t(d1, d2, d3);
    const auto it = b.cochains.find(name);
    if (it == b.cochains.end()) return t;
    for (const SparseEntry& e : it->second) {
        if (e.i > d1 || e.j > d2 || e.k > d3)
            throw DimensionError("cochain '" + name + "' entry (" + std::to_string(e.i) + ", " +
                                 std::to_string(e.j) + ", " + std::to_string(e.k) +
                                 ") out of range for shape " + std::to_string(d1) + " x " +
                                 std::to_string(d2) + " x " + std::to_string(d3));
        t(e.i - 1, e.j - 1, e.k - 1) = e.value;
    }
    return t;
}

inline int need_int_param(const Bundle& b, const std::string& name) {
    const auto it = b.params.find(name);
    if (it == b.params.end())
        throw MissingComponentError("parameter '" + name + "' is required");
    if (denominator_of(it->second) != 1)
        throw ParseError("parameter '" + name + "' must be an integer");
    return numerator_of(it->second).convert_to<int>();
}

inline MatchedPairData bundle_matched_pair(const Bundle& b) {
    const int n = b.dim;
    return coadjoint_matched_pair({{bundle_algebra(b), bundle_coalgebra(b)},
                                   map_or_zero(b, "N", n, n),
                                   map_or_zero(b, "S", n, n)});
}

}  // namespace detail

// ---- law dispatch -----------------------------------------------------------

inline const std::vector<std::string>& law_names() {
    static const std::vector<std::string> names = {
        "mock-lie",       "coalgebra",        "representation",
        "nijenhuis",      "nijenhuis-coalgebra", "bialgebra",
        "nijenhuis-bialgebra", "admissible",  "adjoint-admissible",
        "symplectic",     "cosymplectic",     "cmlybe",
        "ccmlybe",        "quasitriangular",  "dual-quasitriangular",
        "matched-pair",   "nijenhuis-matched-pair", "manin-triple",
        "coboundary",     "s-admissible-mlybe", "weak-o-operator",
        "o-operator",     "deformation",      "2-cocycle",
        "extension-cocycle", "same-class"};
    return names;
}

// Run one named law over a bundle. Missing components raise
// MissingComponentError; shape problems raise DimensionError; builder-style
// laws propagate HypothesisError when their hypotheses fail.
inline CheckReport run_law(const Bundle& b, const std::string& law) {
    const int n = b.dim;
    if (law == "mock-lie") return check_mock_lie(detail::bundle_algebra(b));
    if (law == "coalgebra") return check_mock_lie_coalgebra(detail::bundle_coalgebra(b));
    if (law == "representation")
        return check_representation(detail::bundle_algebra(b), detail::need_rep(b));
    if (law == "nijenhuis")
        return check_nijenhuis(detail::bundle_algebra(b), detail::need_map(b, "N"));
    if (law == "nijenhuis-coalgebra")
        return check_nijenhuis_coalgebra(detail::bundle_coalgebra(b), detail::need_map(b, "S"));
    if (law == "bialgebra")
        return check_bialgebra({detail::bundle_algebra(b), detail::bundle_coalgebra(b)});
    if (law == "nijenhuis-bialgebra")
        return check_nijenhuis_bialgebra({{detail::bundle_algebra(b), detail::bundle_coalgebra(b)},
                                          detail::need_map(b, "N"),
                                          detail::need_map(b, "S")});
    if (law == "admissible")
        return check_admissible({detail::bundle_algebra(b), detail::need_map(b, "N")},
                                detail::need_rep(b), detail::need_map(b, "beta"));
    if (law == "adjoint-admissible")
        return check_adjoint_admissible({detail::bundle_algebra(b), detail::need_map(b, "N")},
                                        detail::need_map(b, "S"));
    if (law == "symplectic")
        return check_symplectic(detail::bundle_algebra(b), detail::need_form(b, "omega"));
    if (law == "cosymplectic")
        return check_cosymplectic(detail::bundle_coalgebra(b), detail::need_tensor(b, "r"));
    if (law == "cmlybe")
        return check_cmlybe(detail::bundle_algebra(b), detail::need_tensor(b, "r"));
    if (law == "ccmlybe")
        return check_ccmlybe(detail::bundle_coalgebra(b), detail::need_form(b, "omega"));
    if (law == "quasitriangular") {
        const MockLieAlgebra a = detail::bundle_algebra(b);
        if (CheckReport pre = check_mock_lie(a); !pre.pass) return pre;
        return check_quasitriangular(a, detail::need_tensor(b, "r"));
    }
    if (law == "dual-quasitriangular") {
        const MockLieCoalgebra c = detail::bundle_coalgebra(b);
        if (CheckReport pre = check_mock_lie_coalgebra(c); !pre.pass) return pre;
        return check_dual_quasitriangular(c, detail::need_form(b, "omega"));
    }
    if (law == "matched-pair") return check_matched_pair(detail::bundle_matched_pair(b));
    if (law == "nijenhuis-matched-pair")
        return check_nijenhuis_matched_pair(detail::bundle_matched_pair(b));
    if (law == "manin-triple") {
        const int half = detail::need_int_param(b, "half-dim");
        if (half < 1 || half >= n)
            throw DimensionError("parameter 'half-dim' must lie strictly between 0 and dim");
        return check_manin_triple({{detail::bundle_algebra(b), detail::need_map(b, "N")},
                                   detail::need_form(b, "B"),
                                   half});
    }
    if (law == "coboundary")
        return check_coboundary_compatible(detail::bundle_algebra(b), detail::need_tensor(b, "r"));
    if (law == "s-admissible-mlybe")
        return check_s_admissible_mlybe(detail::bundle_algebra(b), detail::need_map(b, "N"),
                                        detail::need_map(b, "S"), detail::need_tensor(b, "r"));
    if (law == "weak-o-operator")
        return check_weak_o_operator({detail::bundle_algebra(b), detail::need_map(b, "N")},
                                     detail::need_rep(b), detail::need_map(b, "alpha"),
                                     detail::need_map(b, "T"));
    if (law == "o-operator")
        return check_o_operator({detail::bundle_algebra(b), detail::need_map(b, "N")},
                                detail::need_rep(b), detail::need_map(b, "alpha"),
                                detail::need_map(b, "T"));
    if (law == "deformation") {
        TruncatedDeformation d{{b.bracket}, {detail::need_map(b, "N")}};
        for (int k = 1;; ++k) {
            const std::string mu = "mu" + std::to_string(k);
            const std::string op = "N" + std::to_string(k);
            if (b.cochains.find(mu) == b.cochains.end() && b.maps.find(op) == b.maps.end()) break;
            d.mus.push_back(detail::cochain_or_zero(b, mu, n, n, n));
            d.ops.push_back(detail::map_or_zero(b, op, n, n));
        }
        return check_order_n_deformation(d);
    }
    if (law == "2-cocycle")
        return check_2cocycle({detail::bundle_algebra(b), detail::need_map(b, "N")},
                              {detail::cochain_or_zero(b, "mu1", n, n, n),
                               detail::map_or_zero(b, "N1", n, n)});
    if (law == "extension-cocycle") {
        const Representation rep = detail::need_rep(b);
        const int m = rep.space_dim;
        build_extension_from_cocycle({detail::bundle_algebra(b), detail::need_map(b, "N")}, rep,
                                     detail::need_map(b, "NV"),
                                     {detail::cochain_or_zero(b, "psi", n, n, m),
                                      detail::map_or_zero(b, "chi", m, n)});
        return CheckReport::passed("extension-cocycle");
    }
    if (law == "same-class") {
        const Representation rep = detail::need_rep(b);
        const int m = rep.space_dim;
        const ExtensionCocycle c1{detail::cochain_or_zero(b, "psi1", n, n, m),
                                  detail::map_or_zero(b, "chi1", m, n)};
        const ExtensionCocycle c2{detail::cochain_or_zero(b, "psi2", n, n, m),
                                  detail::map_or_zero(b, "chi2", m, n)};
        const auto gamma =
            extensions_same_class({detail::bundle_algebra(b), detail::need_map(b, "N")}, rep,
                                  detail::need_map(b, "NV"), c1, c2);
        return {"same-class", gamma.has_value(), {}};
    }
    throw ParseError("unknown law '" + law + "'");
}

// ---- builder dispatch -------------------------------------------------------

inline const std::vector<std::string>& builder_names() {
    static const std::vector<std::string> names = {
        "delta-r",  "bracket-from-omega", "semidirect",      "double",
        "n-from-symplectic", "t-from-r",  "r-from-t",        "extension-build"};
    return names;
}

namespace detail {

inline Bundle fresh_bundle(int dim, std::map<std::string, Q> params) {
    Bundle out;
    out.dim = dim;
    out.bracket = Tensor3(dim, dim, dim);
    out.cobracket = Tensor3(dim, dim, dim);
    out.params = std::move(params);
    return out;
}

}  // namespace detail

// Run one named builder. Space-preserving builders return the input bundle
// with the derived component inserted; space-changing builders return a
// fresh bundle carrying only the derived structure and the input params.
inline Bundle run_builder(const std::string& name, const Bundle& in) {
    const int n = in.dim;
    if (name == "delta-r") {
        Bundle out = in;
        out.cobracket = delta_r(detail::bundle_algebra(in), detail::need_tensor(in, "r")).cobracket;
        return out;
    }
    if (name == "bracket-from-omega") {
        Bundle out = in;
        out.bracket =
            bracket_from_omega(detail::bundle_coalgebra(in), detail::need_form(in, "omega")).bracket;
        return out;
    }
    if (name == "n-from-symplectic") {
        Bundle out = in;
        out.maps["N"] = nijenhuis_from_symplectic(detail::bundle_algebra(in),
                                                  detail::need_form(in, "omega"),
                                                  detail::need_tensor(in, "r"));
        return out;
    }
    if (name == "t-from-r") {
        Bundle out = in;
        out.maps["T"] = r_to_map(detail::need_tensor(in, "r"));
        return out;
    }
    if (name == "semidirect") {
        const Representation rep = detail::need_rep(in);
        if (in.maps.count("N") != 0 && in.maps.count("alpha") != 0) {
            const NijenhuisAlgebra sd =
                nijenhuis_semidirect({detail::bundle_algebra(in), detail::need_map(in, "N")},
                                     {rep, detail::need_map(in, "alpha")});
            Bundle out = detail::fresh_bundle(sd.base.dim, in.params);
            out.bracket = sd.base.bracket;
            out.maps["N"] = sd.op;
            return out;
        }
        const MockLieAlgebra sd = semidirect_product(detail::bundle_algebra(in), rep);
        Bundle out = detail::fresh_bundle(sd.dim, in.params);
        out.bracket = sd.bracket;
        return out;
    }
    if (name == "double") {
        const NijenhuisAlgebra dbl = double_algebra(detail::bundle_matched_pair(in));
        Bundle out = detail::fresh_bundle(dbl.base.dim, in.params);
        out.bracket = dbl.base.bracket;
        out.maps["N"] = dbl.op;
        return out;
    }
    if (name == "r-from-t") {
        const OOperatorEmbedding emb = o_operator_to_r(
            detail::bundle_algebra(in), detail::need_rep(in), detail::need_map(in, "T"));
        Bundle out = detail::fresh_bundle(emb.dbl.dim, in.params);
        out.bracket = emb.dbl.bracket;
        out.tensors["r"] = emb.r;
        return out;
    }
    if (name == "extension-build") {
        const Representation rep = detail::need_rep(in);
        const int m = rep.space_dim;
        const ExtensionData e = build_extension_from_cocycle(
            {detail::bundle_algebra(in), detail::need_map(in, "N")}, rep,
            detail::need_map(in, "NV"),
            {detail::cochain_or_zero(in, "psi", n, n, m), detail::map_or_zero(in, "chi", m, n)});
        Bundle out = detail::fresh_bundle(e.total.base.dim, in.params);
        out.bracket = e.total.base.bracket;
        out.maps["N"] = e.total.op;
        out.maps["NV"] = e.nv;
        out.maps["section"] = e.section;
        return out;
    }
    throw ParseError("unknown builder '" + name + "'");
}

}  // namespace mlk
