// Finitely presented groups, abelianization, and the standard presentation of
// the fundamental group of a circle bundle of degree n over a closed
// orientable genus-g surface:
//
//   < a_1, b_1, ..., a_g, b_g, h  |  [a_p, h], [b_p, h],
//                                    [a_1,b_1]...[a_g,b_g] h^(-n) >

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rtorsion/errors.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/snf.hpp"

namespace rtorsion {

struct Letter {
    std::size_t generator;  // index into GroupPresentation::generators
    int exponent;           // +1 or -1

    bool operator==(const Letter& o) const {
        return generator == o.generator && exponent == o.exponent;
    }
    bool operator<(const Letter& o) const {
        return generator != o.generator ? generator < o.generator : exponent < o.exponent;
    }
};

using Word = std::vector<Letter>;

inline Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
    return out;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// x y x^-1 y^-1
inline Word commutator(const Word& x, const Word& y) {
    return concat(concat(concat(x, y), inverse_word(x)), inverse_word(y));
}

inline Word power(std::size_t generator, long long exponent) {
    Word out;
    int step = exponent >= 0 ? 1 : -1;
    for (long long i = 0; i != exponent; i += step) out.push_back({generator, step});
    return out;
}

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    bool operator==(const GroupPresentation& o) const {
        return generators == o.generators && relators == o.relators;
    }
    bool operator!=(const GroupPresentation& o) const { return !(*this == o); }

    std::size_t generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return i;
        throw DomainError("UnknownGenerator", "no generator named \"" + name + "\"");
    }

    void check_well_formed() const {
        for (const Word& r : relators)
            for (const Letter& l : r) {
                if (l.generator >= generators.size())
                    throw DomainError("UnknownGenerator", "relator letter references generator #" +
                                                              std::to_string(l.generator));
                if (l.exponent != 1 && l.exponent != -1)
                    throw DomainError("BadExponent", "letter exponents must be +1 or -1");
            }
    }
};

struct AbelianGroupDescription {
    std::size_t free_rank = 0;
    std::vector<Int> torsion_coefficients;  // each > 1, in divisibility order

    bool operator==(const AbelianGroupDescription& o) const {
        return free_rank == o.free_rank && torsion_coefficients == o.torsion_coefficients;
    }
};

// Generators are ordered a1, b1, ..., ag, bg, h.  A negative n puts h^(-n)
// with -n > 0 letters into the last relator; the homology only sees |n|.
inline GroupPresentation seifert_presentation(std::size_t genus, long long euler_degree) {
    GroupPresentation p;
    for (std::size_t i = 1; i <= genus; ++i) {
        p.generators.push_back("a" + std::to_string(i));
        p.generators.push_back("b" + std::to_string(i));
    }
    p.generators.push_back("h");
    std::size_t h = p.generators.size() - 1;

    for (std::size_t i = 0; i < genus; ++i) {
        p.relators.push_back(commutator({{2 * i, 1}}, {{h, 1}}));
        p.relators.push_back(commutator({{2 * i + 1, 1}}, {{h, 1}}));
    }
    Word surface;
    for (std::size_t i = 0; i < genus; ++i)
        surface = concat(std::move(surface), commutator({{2 * i, 1}}, {{2 * i + 1, 1}}));
    p.relators.push_back(concat(std::move(surface), power(h, -euler_degree)));
    return p;
}

// < a_1, b_1, ..., a_g, b_g | [a_1,b_1]...[a_g,b_g] >, the genus-g surface group.
inline GroupPresentation surface_presentation(std::size_t genus) {
    GroupPresentation p;
    for (std::size_t i = 1; i <= genus; ++i) {
        p.generators.push_back("a" + std::to_string(i));
        p.generators.push_back("b" + std::to_string(i));
    }
    Word surface;
    for (std::size_t i = 0; i < genus; ++i)
        surface = concat(std::move(surface), commutator({{2 * i, 1}}, {{2 * i + 1, 1}}));
    p.relators.push_back(std::move(surface));
    return p;
}

// One row per relator; entry (r, j) is the exponent sum of generator j.
inline IntegerMatrix abelianization_matrix(const GroupPresentation& p) {
    p.check_well_formed();
    IntegerMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Letter& l : p.relators[r]) m(r, l.generator) += l.exponent;
    return m;
}

inline AbelianGroupDescription first_homology(const GroupPresentation& p) {
    IntegerMatrix m = abelianization_matrix(p);
    SnfResult snf = smith_normal_form(m);
    AbelianGroupDescription out;
    std::vector<Int> factors = snf.invariant_factors();
    out.free_rank = p.generators.size() - factors.size();
    for (const Int& f : factors)
        if (f > 1) out.torsion_coefficients.push_back(f);
    return out;
}

// dim Hom(H_1(X,Z), R); torsion contributes nothing.
inline std::size_t dim_h1_real(const GroupPresentation& p) { return first_homology(p).free_rank; }

inline Int torsion_subgroup_order(const GroupPresentation& p) {
    Int order(1);
    for (const Int& f : first_homology(p).torsion_coefficients) order *= f;
    return order;
}

}  // namespace rtorsion
