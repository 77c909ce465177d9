/*
 * Copyright 2026 The extprod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "extprod/io.hpp"

#include <fstream>
#include <utility>

#include "json.hpp"

#include "extprod/errors.hpp"

namespace extprod {
namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(path + ": top-level JSON object expected");
    return doc;
}

void save_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw ParseError("write failed: " + path);
}

ScalarKind kind_from_doc(const json& doc, ScalarKind fallback, bool* had_tag = nullptr) {
    if (!doc.contains("scalar")) {
        if (had_tag) *had_tag = false;
        return fallback;
    }
    if (had_tag) *had_tag = true;
    const std::string s = doc.at("scalar").get<std::string>();
    if (s == "bigint") return ScalarKind::BigIntKind;
    if (s == "rational") return ScalarKind::RationalKind;
    if (s == "modp") return ScalarKind::ModPKind;
    if (s == "complex") return ScalarKind::ComplexKind;
    throw ParseError("unknown scalar kind: " + s);
}

std::uint64_t modulus_from_doc(const json& doc) {
    std::uint64_t p = kDefaultModulus;
    if (doc.contains("p")) {
        const json& jp = doc.at("p");
        if (jp.is_string()) {
            p = std::stoull(jp.get<std::string>());
        } else if (jp.is_number_unsigned() || jp.is_number_integer()) {
            const std::int64_t v = jp.get<std::int64_t>();
            if (v <= 0) throw ParseError("modulus must be positive");
            p = static_cast<std::uint64_t>(v);
        } else {
            throw ParseError("modulus must be an integer or decimal string");
        }
    }
    if (p < 2 || p >= kMaxModulus) throw ParseError("modulus out of supported range");
    if (!is_prime_u64(p)) throw ParseError("modulus must be prime");
    return p;
}

BigInt parse_bigint(const json& e) {
    if (e.is_string()) {
        const std::string s = e.get<std::string>();
        try {
            return BigInt(s);
        } catch (const std::exception&) {
            throw ParseError("bad bigint entry: " + s);
        }
    }
    if (e.is_number_integer() || e.is_number_unsigned()) return BigInt(e.get<std::int64_t>());
    throw ParseError("bigint entries must be decimal strings or integers");
}

Rational parse_rational(const json& e) {
    if (e.is_number_integer() || e.is_number_unsigned()) return Rational(e.get<std::int64_t>());
    if (!e.is_string()) throw ParseError("rational entries must be \"a/b\" strings or integers");
    const std::string s = e.get<std::string>();
    const std::size_t slash = s.find('/');
    try {
        BigInt num(s.substr(0, slash));
        BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1));
        if (den.is_zero()) throw ParseError("rational with zero denominator: " + s);
        if (den < 0) {
            den = -den;
            num = -num;
        }
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational entry: " + s);
    }
}

ModP parse_modp(const json& e, std::uint64_t p) {
    if (e.is_number_unsigned()) return ModP(e.get<std::uint64_t>(), p);
    if (e.is_number_integer()) return ModP::from_int(e.get<std::int64_t>(), p);
    if (e.is_string()) {
        const std::string s = e.get<std::string>();
        try {
            if (!s.empty() && s[0] == '-') return ModP::from_int(std::stoll(s), p);
            return ModP(std::stoull(s), p);
        } catch (const std::exception&) {
            throw ParseError("bad modp entry: " + s);
        }
    }
    throw ParseError("modp entries must be integers or decimal strings");
}

Cplx parse_complex(const json& e) {
    if (e.is_number()) return Cplx(e.get<double>(), 0.0);
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        return Cplx(e[0].get<double>(), e[1].get<double>());
    }
    throw ParseError("complex entries must be [re, im] number pairs");
}

template <typename R>
R parse_entry(const json& e, std::uint64_t p);

template <>
BigInt parse_entry<BigInt>(const json& e, std::uint64_t) {
    return parse_bigint(e);
}
template <>
Rational parse_entry<Rational>(const json& e, std::uint64_t) {
    return parse_rational(e);
}
template <>
ModP parse_entry<ModP>(const json& e, std::uint64_t p) {
    return parse_modp(e, p);
}
template <>
Cplx parse_entry<Cplx>(const json& e, std::uint64_t) {
    return parse_complex(e);
}

json dump_entry(const BigInt& x) { return json(x.str()); }

json dump_entry(const Rational& x) {
    if (denominator(x) == 1) return json(numerator(x).str());
    return json(numerator(x).str() + "/" + denominator(x).str());
}

json dump_entry(const ModP& x) { return json(x.value()); }

json dump_entry(const Cplx& x) { return json::array({x.real(), x.imag()}); }

template <typename R>
RowVec<R> parse_row(const json& row, std::uint64_t p) {
    if (!row.is_array()) throw ParseError("rows must be arrays");
    RowVec<R> out;
    out.reserve(row.size());
    for (const json& e : row) out.push_back(parse_entry<R>(e, p));
    return out;
}

template <typename R>
std::vector<RowVec<R>> parse_rows(const json& rows, std::uint64_t p, const char* what) {
    if (!rows.is_array() || rows.empty()) throw ParseError(std::string(what) + " must be a nonempty array");
    std::vector<RowVec<R>> out;
    out.reserve(rows.size());
    for (const json& r : rows) out.push_back(parse_row<R>(r, p));
    return out;
}

template <typename R>
json dump_rows(const std::vector<RowVec<R>>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json jr = json::array();
        for (const auto& x : r) jr.push_back(dump_entry(x));
        out.push_back(jr);
    }
    return out;
}

template <typename R>
json dump_matrix_rows(const Matrix<R>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json jr = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) jr.push_back(dump_entry(m(i, j)));
        out.push_back(jr);
    }
    return out;
}

std::size_t parse_count(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
        throw ParseError(std::string(key) + " must be a nonnegative integer");
    }
    const std::int64_t x = v.get<std::int64_t>();
    if (x < 0) throw ParseError(std::string(key) + " must be a nonnegative integer");
    return static_cast<std::size_t>(x);
}

template <typename R>
Matrix<R> parse_matrix(const json& doc, std::uint64_t p) {
    if (!doc.contains("rows")) throw ParseError("matrix file needs a \"rows\" array");
    return Matrix<R>(parse_rows<R>(doc.at("rows"), p, "rows"));
}

template <typename R>
TwoFormFamily<R> parse_family(const json& doc, std::uint64_t p) {
    if (!doc.contains("M") || !doc.contains("vectors")) {
        throw ParseError("family file needs \"M\" and \"vectors\"");
    }
    TwoFormFamily<R> f;
    f.m_quadruplets = parse_count(doc, "M");
    f.vectors = parse_rows<R>(doc.at("vectors"), p, "vectors");
    f.validate();
    return f;
}

template <typename R>
KFormFamily<R> parse_kform(const json& doc, std::uint64_t p) {
    if (!doc.contains("k") || !doc.contains("forms")) {
        throw ParseError("k-form file needs \"k\" and \"forms\"");
    }
    KFormFamily<R> f;
    f.k = parse_count(doc, "k");
    const json& forms = doc.at("forms");
    if (!forms.is_array() || forms.empty()) throw ParseError("\"forms\" must be a nonempty array");
    for (const json& form : forms) {
        if (!form.is_array()) throw ParseError("each form must be an array of blades");
        std::vector<std::vector<RowVec<R>>> blades;
        for (const json& blade : form) {
            if (!blade.is_array()) throw ParseError("each blade must be an array of vectors");
            std::vector<RowVec<R>> vecs;
            for (const json& v : blade) vecs.push_back(parse_row<R>(v, p));
            blades.push_back(std::move(vecs));
        }
        f.forms.push_back(std::move(blades));
    }
    f.validate();
    return f;
}

template <typename R>
TwoColorGraph<R> parse_graph(const json& doc, std::uint64_t p) {
    if (!doc.contains("M") || !doc.contains("color1") || !doc.contains("color2")) {
        throw ParseError("graph file needs \"M\", \"color1\" and \"color2\"");
    }
    TwoColorGraph<R> g;
    g.n_pairs = parse_count(doc, "M");
    g.color1 = parse_rows<R>(doc.at("color1"), p, "color1");
    g.color2 = parse_rows<R>(doc.at("color2"), p, "color2");
    g.validate();
    return g;
}

template <typename R>
Rank2Factors<R> parse_factors(const json& doc, std::uint64_t p) {
    if (!doc.contains("M") || !doc.contains("x0") || !doc.contains("x1")) {
        throw ParseError("factors file needs \"M\", \"x0\" and \"x1\"");
    }
    Rank2Factors<R> f;
    f.m = parse_count(doc, "M");
    f.x0 = parse_rows<R>(doc.at("x0"), p, "x0");
    f.x1 = parse_rows<R>(doc.at("x1"), p, "x1");
    f.validate();
    return f;
}

/// Collects the scalar/p header for a document being written.
json header_for(ScalarKind kind, std::uint64_t p) {
    json doc = json::object();
    doc["scalar"] = scalar_kind_name(kind);
    if (kind == ScalarKind::ModPKind) doc["p"] = p;
    return doc;
}

std::uint64_t modulus_of_matrix(const Matrix<ModP>& m) {
    for (const auto& x : m.data()) {
        if (x.bound()) return x.modulus();
    }
    return kDefaultModulus;
}

std::uint64_t modulus_of_rows(const std::vector<RowVec<ModP>>& rows) {
    for (const auto& r : rows) {
        for (const auto& x : r) {
            if (x.bound()) return x.modulus();
        }
    }
    return kDefaultModulus;
}

} // namespace

AnyMatrix read_matrix_file(const std::string& path) {
    const json doc = load_json(path);
    const ScalarKind kind = kind_from_doc(doc, ScalarKind::BigIntKind);
    switch (kind) {
        case ScalarKind::BigIntKind: return parse_matrix<BigInt>(doc, 0);
        case ScalarKind::RationalKind: return parse_matrix<Rational>(doc, 0);
        case ScalarKind::ModPKind: return parse_matrix<ModP>(doc, modulus_from_doc(doc));
        case ScalarKind::ComplexKind: return parse_matrix<Cplx>(doc, 0);
    }
    throw ParseError("unreachable scalar kind");
}

void write_matrix_file(const std::string& path, const AnyMatrix& m) {
    std::visit(
        [&](const auto& mat) {
            using R = std::decay_t<decltype(mat(0, 0))>;
            std::uint64_t p = 0;
            if constexpr (std::is_same_v<R, ModP>) p = modulus_of_matrix(mat);
            json doc = header_for(ring_traits<R>::kind, p);
            doc["rows"] = dump_matrix_rows(mat);
            save_json(path, doc);
        },
        m);
}

AnyFamily read_family_file(const std::string& path) {
    const json doc = load_json(path);
    const ScalarKind kind = kind_from_doc(doc, ScalarKind::BigIntKind);
    switch (kind) {
        case ScalarKind::BigIntKind: return parse_family<BigInt>(doc, 0);
        case ScalarKind::RationalKind: return parse_family<Rational>(doc, 0);
        case ScalarKind::ModPKind: return parse_family<ModP>(doc, modulus_from_doc(doc));
        case ScalarKind::ComplexKind: return parse_family<Cplx>(doc, 0);
    }
    throw ParseError("unreachable scalar kind");
}

void write_family_file(const std::string& path, const AnyFamily& f) {
    std::visit(
        [&](const auto& fam) {
            using R = std::decay_t<decltype(fam.vectors[0][0])>;
            std::uint64_t p = 0;
            if constexpr (std::is_same_v<R, ModP>) p = modulus_of_rows(fam.vectors);
            json doc = header_for(ring_traits<R>::kind, p);
            doc["M"] = fam.m_quadruplets;
            doc["vectors"] = dump_rows(fam.vectors);
            save_json(path, doc);
        },
        f);
}

AnyKForm read_kform_file(const std::string& path) {
    const json doc = load_json(path);
    const ScalarKind kind = kind_from_doc(doc, ScalarKind::BigIntKind);
    switch (kind) {
        case ScalarKind::BigIntKind: return parse_kform<BigInt>(doc, 0);
        case ScalarKind::RationalKind: return parse_kform<Rational>(doc, 0);
        case ScalarKind::ModPKind: return parse_kform<ModP>(doc, modulus_from_doc(doc));
        case ScalarKind::ComplexKind: return parse_kform<Cplx>(doc, 0);
    }
    throw ParseError("unreachable scalar kind");
}

void write_kform_file(const std::string& path, const AnyKForm& f) {
    std::visit(
        [&](const auto& kf) {
            using R = std::decay_t<decltype(kf.forms[0][0][0][0])>;
            std::uint64_t p = 0;
            if constexpr (std::is_same_v<R, ModP>) {
                for (const auto& form : kf.forms) {
                    for (const auto& blade : form) {
                        if (p) break;
                        p = modulus_of_rows(blade);
                    }
                    if (p) break;
                }
                if (!p) p = kDefaultModulus;
            }
            json doc = header_for(ring_traits<R>::kind, p);
            doc["k"] = kf.k;
            json forms = json::array();
            for (const auto& form : kf.forms) {
                json jform = json::array();
                for (const auto& blade : form) jform.push_back(dump_rows(blade));
                forms.push_back(jform);
            }
            doc["forms"] = forms;
            save_json(path, doc);
        },
        f);
}

AnyGraph read_graph_file(const std::string& path) {
    const json doc = load_json(path);
    const ScalarKind kind = kind_from_doc(doc, ScalarKind::BigIntKind);
    switch (kind) {
        case ScalarKind::BigIntKind: return parse_graph<BigInt>(doc, 0);
        case ScalarKind::RationalKind: return parse_graph<Rational>(doc, 0);
        case ScalarKind::ModPKind: return parse_graph<ModP>(doc, modulus_from_doc(doc));
        case ScalarKind::ComplexKind: throw ParseError("graph files support exact scalars only");
    }
    throw ParseError("unreachable scalar kind");
}

void write_graph_file(const std::string& path, const AnyGraph& g) {
    std::visit(
        [&](const auto& graph) {
            using R = std::decay_t<decltype(graph.color1[0][0])>;
            json doc = json::object();
            // The canonical graph format carries no scalar tag; non-bigint
            // kinds add one so the file round-trips.
            if constexpr (std::is_same_v<R, ModP>) {
                doc = header_for(ScalarKind::ModPKind, modulus_of_rows(graph.color1));
            } else if constexpr (std::is_same_v<R, Rational>) {
                doc = header_for(ScalarKind::RationalKind, 0);
            }
            doc["M"] = graph.n_pairs;
            doc["color1"] = dump_rows(graph.color1);
            doc["color2"] = dump_rows(graph.color2);
            save_json(path, doc);
        },
        g);
}

AnyFactors read_factors_file(const std::string& path) {
    const json doc = load_json(path);
    const ScalarKind kind = kind_from_doc(doc, ScalarKind::BigIntKind);
    switch (kind) {
        case ScalarKind::BigIntKind: return parse_factors<BigInt>(doc, 0);
        case ScalarKind::RationalKind: return parse_factors<Rational>(doc, 0);
        case ScalarKind::ModPKind: return parse_factors<ModP>(doc, modulus_from_doc(doc));
        case ScalarKind::ComplexKind: throw ParseError("factors files support exact scalars only");
    }
    throw ParseError("unreachable scalar kind");
}

void write_factors_file(const std::string& path, const AnyFactors& f) {
    std::visit(
        [&](const auto& fac) {
            using R = std::decay_t<decltype(fac.x0[0][0])>;
            std::uint64_t p = 0;
            if constexpr (std::is_same_v<R, ModP>) p = modulus_of_rows(fac.x0);
            json doc = header_for(ring_traits<R>::kind, p);
            doc["M"] = fac.m;
            doc["x0"] = dump_rows(fac.x0);
            doc["x1"] = dump_rows(fac.x1);
            save_json(path, doc);
        },
        f);
}

Matrix<Cplx> read_unitary_file(const std::string& path) {
    AnyMatrix m = read_matrix_file(path);
    if (auto* u = std::get_if<Matrix<Cplx>>(&m)) return std::move(*u);
    throw ParseError(path + ": unitary files must use the complex scalar kind");
}

} // namespace extprod
