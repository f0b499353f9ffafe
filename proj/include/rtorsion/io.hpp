// JSON serialization for every file format the tool reads or writes.
//
// Rationals always travel as strings, "p" or "p/q", never as floats;
// parsing then serializing any value reproduces it byte for byte.  All
// writers emit nlohmann::ordered_json so field order (and hence output
// bytes) is deterministic.

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/exterior.hpp"
#include "rtorsion/group.hpp"
#include "rtorsion/group_ring.hpp"
#include "rtorsion/localization.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/partition.hpp"
#include "rtorsion/snf.hpp"

namespace rtorsion {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<std::ptrdiff_t>(e.byte));
    }
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

namespace detail {

inline const Json& field(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError("missing field \"" + key + "\"");
    return j.at(key);
}

inline std::size_t size_field(const Json& j, const std::string& key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError("field \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

inline std::string string_entry(const Json& v, const std::string& what) {
    if (!v.is_string()) throw ParseError(what + " must be a string literal");
    return v.get<std::string>();
}

}  // namespace detail

// ---- matrices: {"rows": r, "cols": c, "entries": ["p/q", ...]} row-major ----

inline Json to_json(const RationalMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (const Rat& x : m.entries()) entries.push_back(to_string(x));
    j["entries"] = std::move(entries);
    return j;
}

inline Json to_json(const IntegerMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (const Int& x : m.entries()) entries.push_back(to_string(x));
    j["entries"] = std::move(entries);
    return j;
}

inline RationalMatrix rational_matrix_from_json(const Json& j) {
    std::size_t rows = detail::size_field(j, "rows");
    std::size_t cols = detail::size_field(j, "cols");
    const Json& entries = detail::field(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError("entries must hold rows*cols literals");
    RationalMatrix m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jj = 0; jj < cols; ++jj)
            m(i, jj) = parse_rational(detail::string_entry(entries[idx++], "matrix entry"));
    return m;
}

inline IntegerMatrix integer_matrix_from_json(const Json& j) {
    std::size_t rows = detail::size_field(j, "rows");
    std::size_t cols = detail::size_field(j, "cols");
    const Json& entries = detail::field(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError("entries must hold rows*cols literals");
    IntegerMatrix m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jj = 0; jj < cols; ++jj)
            m(i, jj) = parse_integer(detail::string_entry(entries[idx++], "matrix entry"));
    return m;
}

// Exact when every entry has denominator 1.
inline bool is_integer_matrix(const RationalMatrix& m) {
    for (const Rat& x : m.entries())
        if (denominator_of(x) != 1) return false;
    return true;
}

inline IntegerMatrix to_integer(const RationalMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (denominator_of(m(i, j)) != 1)
                throw DomainError("NotIntegral", "matrix entry is not an integer");
            out(i, j) = numerator_of(m(i, j));
        }
    return out;
}

// ---- chain complexes: {"degrees": [...], "boundaries": [matrix, ...]} ----
// boundaries[j] maps degree j+1 to degree j.

inline Json to_json(const BasedChainComplex& c) {
    Json j;
    j["degrees"] = c.degrees;
    Json bs = Json::array();
    for (const auto& b : c.boundaries) bs.push_back(to_json(b));
    j["boundaries"] = std::move(bs);
    return j;
}

inline BasedChainComplex complex_from_json(const Json& j) {
    BasedChainComplex c;
    const Json& degrees = detail::field(j, "degrees");
    if (!degrees.is_array()) throw ParseError("degrees must be an array");
    for (const Json& d : degrees) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw ParseError("degrees must be non-negative integers");
        c.degrees.push_back(d.get<std::size_t>());
    }
    const Json& bs = detail::field(j, "boundaries");
    if (!bs.is_array()) throw ParseError("boundaries must be an array");
    for (const Json& b : bs) c.boundaries.push_back(rational_matrix_from_json(b));
    return c;
}

// ---- homology bases: [{"degree": i, "vectors": [["p/q", ...], ...]}, ...] ----

inline Json to_json(const HomologyBasis& h) {
    Json j = Json::array();
    for (std::size_t i = 0; i < h.vectors.size(); ++i) {
        if (h.vectors[i].empty()) continue;
        Json entry;
        entry["degree"] = i;
        Json vectors = Json::array();
        for (const RationalVector& v : h.vectors[i]) {
            Json vec = Json::array();
            for (const Rat& x : v) vec.push_back(to_string(x));
            vectors.push_back(std::move(vec));
        }
        entry["vectors"] = std::move(vectors);
        j.push_back(std::move(entry));
    }
    return j;
}

inline HomologyBasis homology_basis_from_json(const Json& j, std::size_t degree_count) {
    if (!j.is_array()) throw ParseError("homology basis must be an array of per-degree objects");
    HomologyBasis h;
    h.vectors.resize(degree_count);
    for (const Json& entry : j) {
        std::size_t degree = detail::size_field(entry, "degree");
        if (degree >= degree_count) throw ParseError("homology basis degree out of range");
        const Json& vectors = detail::field(entry, "vectors");
        if (!vectors.is_array()) throw ParseError("vectors must be an array");
        for (const Json& vec : vectors) {
            if (!vec.is_array()) throw ParseError("each representative must be an array");
            RationalVector v;
            for (const Json& x : vec)
                v.push_back(parse_rational(detail::string_entry(x, "vector entry")));
            h.vectors[degree].push_back(std::move(v));
        }
    }
    return h;
}

// ---- presentations: {"generators": [...], "relators": [[[name, e], ...], ...]} ----

inline Json to_json(const GroupPresentation& p) {
    Json j;
    j["generators"] = p.generators;
    Json relators = Json::array();
    for (const Word& w : p.relators) {
        Json word = Json::array();
        for (const Letter& l : w) word.push_back(Json::array({p.generators[l.generator], l.exponent}));
        relators.push_back(std::move(word));
    }
    j["relators"] = std::move(relators);
    return j;
}

inline GroupPresentation presentation_from_json(const Json& j) {
    GroupPresentation p;
    const Json& generators = detail::field(j, "generators");
    if (!generators.is_array()) throw ParseError("generators must be an array of names");
    for (const Json& g : generators) p.generators.push_back(detail::string_entry(g, "generator name"));
    const Json& relators = detail::field(j, "relators");
    if (!relators.is_array()) throw ParseError("relators must be an array of words");
    for (const Json& word : relators) {
        if (!word.is_array()) throw ParseError("each relator must be an array of letters");
        Word w;
        for (const Json& letter : word) {
            if (!letter.is_array() || letter.size() != 2)
                throw ParseError("each letter must be a [generator, exponent] pair");
            std::string name = detail::string_entry(letter[0], "letter generator");
            if (!letter[1].is_number_integer()) throw ParseError("letter exponent must be an integer");
            int e = letter[1].get<int>();
            if (e != 1 && e != -1) throw ParseError("letter exponents must be +1 or -1");
            std::size_t idx = p.generators.size();
            for (std::size_t g = 0; g < p.generators.size(); ++g)
                if (p.generators[g] == name) idx = g;
            if (idx == p.generators.size())
                throw ParseError("letter references undeclared generator \"" + name + "\"");
            w.push_back({idx, e});
        }
        p.relators.push_back(std::move(w));
    }
    return p;
}

// ---- representations: {"dimension": d, "images": {"name": matrix, ...}} ----

inline Json to_json(const Representation& rho) {
    Json j;
    j["dimension"] = rho.dimension;
    Json images = Json::object();
    for (std::size_t g = 0; g < rho.presentation.generators.size(); ++g)
        images[rho.presentation.generators[g]] = to_json(rho.images[g]);
    j["images"] = std::move(images);
    return j;
}

inline Representation representation_from_json(const Json& j, const GroupPresentation& ambient) {
    std::size_t dimension = detail::size_field(j, "dimension");
    const Json& images = detail::field(j, "images");
    if (!images.is_object()) throw ParseError("images must map generator names to matrices");
    std::vector<RationalMatrix> mats;
    mats.reserve(ambient.generators.size());
    for (const std::string& name : ambient.generators) {
        if (!images.contains(name))
            throw ParseError("images is missing generator \"" + name + "\"");
        mats.push_back(rational_matrix_from_json(images.at(name)));
    }
    return make_representation(ambient, dimension, std::move(mats));
}

// ---- group-ring matrices: entries as arrays of [coefficient, word] pairs ----

inline Json to_json(const GroupRingElement& e, const GroupPresentation& ambient) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json word = Json::array();
        for (const Letter& l : w)
            word.push_back(Json::array({ambient.generators[l.generator], l.exponent}));
        terms.push_back(Json::array({to_string(c), std::move(word)}));
    }
    return terms;
}

inline Json to_json(const GroupRingComplex& c) {
    Json j;
    j["presentation"] = to_json(c.presentation);
    j["degrees"] = c.degrees;
    Json bs = Json::array();
    for (const auto& b : c.boundaries) {
        Json m;
        m["rows"] = b.rows();
        m["cols"] = b.cols();
        Json entries = Json::array();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t jj = 0; jj < b.cols(); ++jj)
                entries.push_back(to_json(b(i, jj), c.presentation));
        m["entries"] = std::move(entries);
        bs.push_back(std::move(m));
    }
    j["boundaries"] = std::move(bs);
    return j;
}

// ---- exterior classes: {"genus": g, "terms": [{"generators": [...], "coeff": [...]}]} ----

inline Json to_json(const ExteriorClass& c) {
    Json j;
    j["genus"] = c.genus();
    Json terms = Json::array();
    for (const auto& [mask, poly] : c.terms()) {
        Json term;
        Json gens = Json::array();
        for (std::size_t i = 0; i < 2 * c.genus(); ++i)
            if (mask & (std::uint32_t(1) << i)) gens.push_back(i + 1);
        term["generators"] = std::move(gens);
        Json coeff = Json::array();
        for (const Rat& x : poly.coefficients()) coeff.push_back(to_string(x));
        term["coeff"] = std::move(coeff);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline ExteriorClass exterior_class_from_json(const Json& j) {
    std::size_t genus = detail::size_field(j, "genus");
    ExteriorClass c(genus);
    const Json& terms = detail::field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const Json& term : terms) {
        const Json& gens = detail::field(term, "generators");
        if (!gens.is_array()) throw ParseError("generators must be an array of indices");
        std::uint32_t mask = 0;
        for (const Json& g : gens) {
            if (!g.is_number_integer()) throw ParseError("generator indices must be integers");
            long long idx = g.get<long long>();
            if (idx < 1 || idx > static_cast<long long>(2 * genus))
                throw ParseError("generator index out of range");
            mask |= std::uint32_t(1) << (idx - 1);
        }
        const Json& coeff = detail::field(term, "coeff");
        if (!coeff.is_array()) throw ParseError("coeff must be an array of rational literals");
        std::vector<Rat> cs;
        for (const Json& x : coeff) cs.push_back(parse_rational(detail::string_entry(x, "coefficient")));
        c.set_term(mask, c.coefficient(mask) + LevelPoly(std::move(cs)));
    }
    return c;
}

// ---- derived results ----

inline Json to_json(const SnfResult& r) {
    Json j;
    j["U"] = to_json(r.u);
    j["D"] = to_json(r.d);
    j["V"] = to_json(r.v);
    Json factors = Json::array();
    for (const Int& f : r.invariant_factors()) factors.push_back(to_string(f));
    j["invariant_factors"] = std::move(factors);
    return j;
}

inline Json to_json(const AbelianGroupDescription& a) {
    Json j;
    j["free_rank"] = a.free_rank;
    Json torsion = Json::array();
    for (const Int& f : a.torsion_coefficients) torsion.push_back(to_string(f));
    j["torsion_coefficients"] = std::move(torsion);
    return j;
}

inline Json to_json(const TorsionValue& t) {
    Json j;
    j["magnitude"] = to_string(t.magnitude);
    j["sign"] = t.sign;
    return j;
}

inline Json to_json(const PhaseAngle& p) {
    Json j;
    j["pi_multiple"] = to_string(p.pi_multiple);
    if (p.exact_pair) {
        j["cos"] = to_string(p.cos_value);
        j["sin"] = to_string(p.sin_value);
    }
    return j;
}

inline Json to_json(const TorusPartition& t) {
    Json j;
    Json poly = Json::array();
    for (const Rat& c : t.magnitude.coefficients()) poly.push_back(to_string(c));
    j["magnitude_polynomial"] = std::move(poly);
    j["magnitude"] = to_string(t.magnitude_at_level);
    j["k_exponent"] = t.k_exponent;
    j["eta0"] = to_string(t.prefactor.eta0);
    j["phase"] = to_json(t.prefactor.phase);
    return j;
}

inline Json to_json(const ComparisonReport& r) {
    Json j;
    j["report_version"] = 1;
    j["genus"] = r.genus;
    j["euler_degree"] = r.euler_degree;
    j["dim_H0"] = r.dim_h0;
    j["dim_H1"] = r.dim_h1;
    j["m_X"] = to_string(r.m_x);
    j["manoliu_exponent"] = to_string(r.manoliu_exponent);
    j["bw_exponent"] = to_string(r.bw_exponent);
    j["exponent_difference"] = to_string(r.exponent_difference);
    j["stabilizer_dimension"] = r.stabilizer_dimension;
    j["stabilizer_note"] = r.stabilizer_note;
    j["moduli_components"] = r.moduli_components;
    j["moduli_description"] = r.moduli_description;
    j["normalized_volume"] = to_string(r.normalized_volume);
    j["degenerate_genus"] = r.degenerate_genus;
    return j;
}

}  // namespace rtorsion
