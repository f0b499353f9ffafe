// Integral group-ring coefficients, Fox derivatives, the chain complex of a
// presentation 2-complex, and its specialization through a matrix
// representation of the group.
//
// Words are kept freely reduced, so equal free-group elements combine.
// Whether a boundary composite vanishes is checked only after
// specialization; in the group ring that question is the word problem.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/group.hpp"
#include "rtorsion/linalg.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"

namespace rtorsion {

inline Word freely_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().generator == l.generator &&
            out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(int scalar) {
        if (scalar != 0) terms_[Word{}] = scalar;
    }

    static GroupRingElement from_word(Word w, Int coefficient = Int(1)) {
        GroupRingElement e;
        if (coefficient != 0) e.terms_[freely_reduce(w)] = std::move(coefficient);
        return e;
    }

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    GroupRingElement operator+(const GroupRingElement& o) const {
        GroupRingElement r = *this;
        r += o;
        return r;
    }
    GroupRingElement operator-() const {
        GroupRingElement r;
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    GroupRingElement operator-(const GroupRingElement& o) const { return *this + (-o); }

    // noncommutative product: words concatenate left to right
    GroupRingElement operator*(const GroupRingElement& o) const {
        GroupRingElement r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) r.add_term(freely_reduce(concat(w1, w2)), c1 * c2);
        return r;
    }

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

private:
    void add_term(const Word& w, const Int& c) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (c != 0) terms_[w] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Word, Int> terms_;
};

// Free derivative with respect to one generator:
//   d(uv) = du + u dv,   dx/dx = 1,   dy/dx = 0,   d(x^-1)/dx = -x^-1.
inline GroupRingElement fox_derivative(const Word& w, std::size_t generator) {
    GroupRingElement out;
    Word prefix;
    for (const Letter& l : w) {
        if (l.generator == generator) {
            if (l.exponent == 1) {
                out += GroupRingElement::from_word(prefix);
            } else {
                Word p = prefix;
                p.push_back({l.generator, -1});
                out += GroupRingElement::from_word(std::move(p), Int(-1));
            }
        }
        prefix.push_back(l);
    }
    return out;
}

struct GroupRingComplex {
    GroupPresentation presentation;
    std::vector<std::size_t> degrees;
    std::vector<Matrix<GroupRingElement>> boundaries;  // boundaries[j]: degree j+1 -> degree j
};

// Cellular chain complex of the presentation 2-complex: one 0-cell, a 1-cell
// per generator, a 2-cell per relator.  d1 column g is (g - 1); d2 entry
// (g, r) is the Fox derivative of relator r by generator g.  Trailing empty
// degrees are trimmed.
inline GroupRingComplex presentation_complex(const GroupPresentation& p) {
    p.check_well_formed();
    GroupRingComplex c;
    c.presentation = p;
    c.degrees = {1, p.generators.size(), p.relators.size()};

    Matrix<GroupRingElement> d1(1, p.generators.size());
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        d1(0, g) = GroupRingElement::from_word({{g, 1}}) - GroupRingElement(1);
    Matrix<GroupRingElement> d2(p.generators.size(), p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (std::size_t g = 0; g < p.generators.size(); ++g)
            d2(g, r) = fox_derivative(p.relators[r], g);
    c.boundaries = {std::move(d1), std::move(d2)};

    while (c.degrees.size() > 1 && c.degrees.back() == 0) {
        c.degrees.pop_back();
        c.boundaries.pop_back();
    }
    return c;
}

struct Representation {
    GroupPresentation presentation;
    std::size_t dimension = 0;
    std::vector<RationalMatrix> images;  // one per generator, each invertible

    const RationalMatrix& image(std::size_t generator) const { return images[generator]; }
};

inline RationalMatrix word_image(const Representation& rho, const Word& w) {
    RationalMatrix out = RationalMatrix::identity(rho.dimension);
    for (const Letter& l : w) {
        const RationalMatrix& m = rho.images[l.generator];
        out = out * (l.exponent == 1 ? m : inverse(m));
    }
    return out;
}

// Validates shapes, invertibility, and that every relator maps to the identity.
inline Representation make_representation(const GroupPresentation& p, std::size_t dimension,
                                          std::vector<RationalMatrix> images) {
    p.check_well_formed();
    if (images.size() != p.generators.size())
        throw ShapeMismatch("expected one image per generator");
    for (std::size_t g = 0; g < images.size(); ++g) {
        if (images[g].rows() != dimension || images[g].cols() != dimension)
            throw ShapeMismatch("image of \"" + p.generators[g] + "\" is not " +
                                std::to_string(dimension) + "x" + std::to_string(dimension));
        if (determinant(images[g]) == 0)
            throw DomainError("SingularImage",
                              "image of \"" + p.generators[g] + "\" is not invertible");
    }
    Representation rho{p, dimension, std::move(images)};
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        if (!word_image(rho, p.relators[r]).is_identity()) throw RelatorNotKilled(r);
    return rho;
}

inline Representation trivial_representation(const GroupPresentation& p, std::size_t dimension = 1) {
    std::vector<RationalMatrix> images(p.generators.size(), RationalMatrix::identity(dimension));
    return make_representation(p, dimension, std::move(images));
}

inline RationalMatrix specialize_entry(const GroupRingElement& e, const Representation& rho) {
    RationalMatrix out(rho.dimension, rho.dimension);
    for (const auto& [w, c] : e.terms()) out = out + word_image(rho, w).scaled(Rat(c));
    return out;
}

// Replaces every group-ring entry by its block image under rho.  The result
// has each degree multiplied by dim rho and must again compose to zero.
inline BasedChainComplex specialize(const GroupRingComplex& c, const Representation& rho) {
    if (rho.presentation != c.presentation)
        throw PresentationMismatch("representation and complex have different ambient presentations");
    for (std::size_t r = 0; r < rho.presentation.relators.size(); ++r)
        if (!word_image(rho, rho.presentation.relators[r]).is_identity()) throw RelatorNotKilled(r);

    BasedChainComplex out;
    for (std::size_t n : c.degrees) out.degrees.push_back(n * rho.dimension);
    for (const auto& b : c.boundaries) {
        RationalMatrix m(b.rows() * rho.dimension, b.cols() * rho.dimension);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                place_block(m, i * rho.dimension, j * rho.dimension, specialize_entry(b(i, j), rho));
        out.boundaries.push_back(std::move(m));
    }
    for (std::size_t i = 2; i < out.degrees.size(); ++i)
        if (!(out.boundary(i - 1) * out.boundary(i)).is_zero())
            throw NotAComplexAfterSpecialization(i);
    return out;
}

inline Representation conjugate_representation(const Representation& rho, const RationalMatrix& h) {
    if (h.rows() != rho.dimension || h.cols() != rho.dimension)
        throw ShapeMismatch("conjugator has wrong dimension");
    if (rho.dimension > 0 && determinant(h) == 0) throw SingularConjugator();
    RationalMatrix hinv = inverse(h);
    Representation out = rho;
    for (auto& m : out.images) m = h * m * hinv;
    return out;
}

}  // namespace rtorsion
