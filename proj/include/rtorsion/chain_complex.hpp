// Based chain complexes over the rationals, their homology, and the
// Reidemeister torsion of a based complex.
//
// A complex stores the ranks n_0..n_top of its degrees (the preferred basis
// of each degree is the standard basis) and the boundary maps; boundary j of
// the stored list maps degree j+1 into degree j.  The torsion of a complex
// with homology basis h is
//
//     Tor(C, c){h} = prod_i  det[ lift(b^{i-1}) | b^i | h^i ] ^ ((-1)^(i+1))
//
// taken over every degree i >= 0, where b^i is a basis of the boundaries
// B_i = im d_{i+1}, lift(b^{i-1}) is any d_i-preimage of b^{i-1}, and the
// column blocks appear in exactly that order.  The magnitude is independent
// of every internal choice; the sign is reported relative to this fixed
// ordering.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rtorsion/errors.hpp"
#include "rtorsion/linalg.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/snf.hpp"

namespace rtorsion {

struct BasedChainComplex {
    std::vector<std::size_t> degrees;        // ranks n_0 .. n_top
    std::vector<RationalMatrix> boundaries;  // boundaries[j] : degree j+1 -> degree j

    std::size_t top_degree() const { return degrees.empty() ? 0 : degrees.size() - 1; }

    // d_i for any i; out-of-range degrees give the appropriately shaped zero map.
    RationalMatrix boundary(std::size_t i) const {
        if (i >= 1 && i <= boundaries.size()) return boundaries[i - 1];
        if (i == 0) return RationalMatrix::zero(0, degrees.empty() ? 0 : degrees[0]);
        return RationalMatrix::zero(i - 1 < degrees.size() ? degrees[i - 1] : 0, 0);
    }
};

inline void validate(const BasedChainComplex& c) {
    if (c.degrees.empty()) throw ShapeMismatch("complex must have at least one degree");
    if (c.boundaries.size() + 1 != c.degrees.size())
        throw ShapeMismatch("expected one boundary map per adjacent degree pair");
    for (std::size_t j = 0; j < c.boundaries.size(); ++j) {
        const RationalMatrix& d = c.boundaries[j];
        if (d.rows() != c.degrees[j] || d.cols() != c.degrees[j + 1])
            throw ShapeMismatch("boundary out of degree " + std::to_string(j + 1) +
                                " has shape " + std::to_string(d.rows()) + "x" +
                                std::to_string(d.cols()));
    }
    for (std::size_t i = 2; i < c.degrees.size(); ++i)
        if (!(c.boundary(i - 1) * c.boundary(i)).is_zero()) throw NotAComplex(i);
}

inline std::vector<std::size_t> betti_numbers(const BasedChainComplex& c) {
    validate(c);
    std::vector<std::size_t> betti(c.degrees.size());
    for (std::size_t i = 0; i < c.degrees.size(); ++i) {
        std::size_t cycles = c.degrees[i] - rank(c.boundary(i));
        betti[i] = cycles - rank(c.boundary(i + 1));
    }
    return betti;
}

struct HomologyBasis {
    // vectors[i] lists cycle representatives whose classes form a basis of H_i.
    std::vector<std::vector<RationalVector>> vectors;
};

struct TorsionValue {
    Rat magnitude;  // > 0
    int sign;       // +1 or -1, relative to the fixed column ordering
};

struct IntegralHomology {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;  // each > 1, in divisibility order
};

// Homology of a complex of free abelian groups.  boundaries[j] maps degree
// j+1 to degree j, exactly as in BasedChainComplex.
inline std::vector<IntegralHomology> integral_homology(const std::vector<std::size_t>& degrees,
                                                       const std::vector<IntegerMatrix>& boundaries) {
    BasedChainComplex probe;
    probe.degrees = degrees;
    for (const auto& b : boundaries) probe.boundaries.push_back(to_rational(b));
    validate(probe);

    std::vector<IntegralHomology> out(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        std::size_t rank_in = rank(probe.boundary(i));
        std::size_t rank_out = rank(probe.boundary(i + 1));
        out[i].free_rank = degrees[i] - rank_in - rank_out;
        if (i < boundaries.size()) {
            // torsion of H_i is read off the invariant factors of d_{i+1}
            for (const Int& f : smith_normal_form(boundaries[i]).invariant_factors())
                if (f > 1) out[i].invariant_factors.push_back(f);
        }
    }
    return out;
}

namespace detail {

// All data the torsion product needs in one degree.
struct TorsionScaffold {
    std::vector<std::vector<RationalVector>> boundary_basis;  // b^i, basis of im d_{i+1}
    std::vector<std::vector<RationalVector>> lifts;           // lifts[i] in C_i, d_i(lift) = b^{i-1}
    std::vector<std::vector<RationalVector>> reps;            // homology representatives in C_i
};

inline RationalVector add_scaled(RationalVector v, const RationalVector& w, const Rat& f) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += f * w[i];
    return v;
}

// Builds bases, lifts and representatives; when rng is non-null every choice
// the torsion is claimed not to depend on is re-drawn at random.
inline TorsionScaffold build_scaffold(const BasedChainComplex& c, const HomologyBasis* h,
                                      const std::vector<std::size_t>& betti, Rng* rng) {
    std::size_t n = c.degrees.size();
    TorsionScaffold s;
    s.boundary_basis.resize(n);
    s.lifts.resize(n);
    s.reps.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        RationalMatrix d_next = c.boundary(i + 1);
        s.boundary_basis[i] = image_basis(d_next);
        if (rng && !s.boundary_basis[i].empty()) {
            // re-choose the basis of B_i by an arbitrary invertible mix
            std::size_t r = s.boundary_basis[i].size();
            RationalMatrix mix = random_invertible(r, *rng);
            std::vector<RationalVector> mixed(r, RationalVector(c.degrees[i], Rat(0)));
            for (std::size_t jnew = 0; jnew < r; ++jnew)
                for (std::size_t jold = 0; jold < r; ++jold)
                    mixed[jnew] = add_scaled(std::move(mixed[jnew]), s.boundary_basis[i][jold],
                                             mix(jold, jnew));
            s.boundary_basis[i] = std::move(mixed);
        }
    }

    for (std::size_t i = 1; i < n; ++i) {
        RationalMatrix d_i = c.boundary(i);
        std::vector<RationalVector> kernel;
        if (rng) kernel = kernel_basis(d_i);
        for (const RationalVector& b : s.boundary_basis[i - 1]) {
            RationalVector lift = preimage(d_i, b);
            if (rng)
                for (const RationalVector& k : kernel)
                    lift = add_scaled(std::move(lift), k, rng->rat(3, 2));
            s.lifts[i].push_back(std::move(lift));
        }
    }

    if (h) {
        if (h->vectors.size() > n)
            throw BadHomologyBasis("homology basis lists more degrees than the complex has");
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<RationalVector> reps =
                i < h->vectors.size() ? h->vectors[i] : std::vector<RationalVector>{};
            if (reps.size() != betti[i])
                throw BadHomologyBasis("degree " + std::to_string(i) + " needs " +
                                       std::to_string(betti[i]) + " representatives, got " +
                                       std::to_string(reps.size()));
            RationalMatrix d_i = c.boundary(i);
            for (RationalVector& rep : reps) {
                if (rep.size() != c.degrees[i])
                    throw BadHomologyBasis("representative length mismatch in degree " +
                                           std::to_string(i));
                for (const Rat& x : d_i * rep)
                    if (x != 0)
                        throw BadHomologyBasis("representative in degree " + std::to_string(i) +
                                               " is not a cycle");
                if (rng)  // shift within the homology class
                    for (const RationalVector& b : s.boundary_basis[i])
                        rep = add_scaled(std::move(rep), b, rng->rat(3, 2));
            }
            s.reps[i] = std::move(reps);
        }
    }
    return s;
}

inline TorsionValue torsion_with_choices(const BasedChainComplex& c, const HomologyBasis* h,
                                         Rng* rng) {
    std::vector<std::size_t> betti = betti_numbers(c);
    bool acyclic = true;
    for (std::size_t b : betti)
        if (b != 0) acyclic = false;
    if (!acyclic && h == nullptr) throw MissingHomologyBasis();

    TorsionScaffold s = build_scaffold(c, h, betti, rng);

    TorsionValue out{Rat(1), 1};
    for (std::size_t i = 0; i < c.degrees.size(); ++i) {
        std::vector<RationalVector> columns;
        columns.reserve(c.degrees[i]);
        for (const auto& v : s.lifts[i]) columns.push_back(v);
        for (const auto& v : s.boundary_basis[i]) columns.push_back(v);
        for (const auto& v : s.reps[i]) columns.push_back(v);
        if (columns.size() != c.degrees[i])
            throw BadHomologyBasis("degree " + std::to_string(i) +
                                   " basis assembly is not square");
        Rat det = determinant(RationalMatrix::from_columns(c.degrees[i], columns));
        if (det == 0)
            throw BadHomologyBasis("representatives in degree " + std::to_string(i) +
                                   " are dependent modulo boundaries");
        // exponent (-1)^(i+1)
        if (i % 2 == 0)
            out.magnitude /= abs_of(det);
        else
            out.magnitude *= abs_of(det);
        out.sign *= sign_of(det);
    }
    return out;
}

}  // namespace detail

inline TorsionValue torsion(const BasedChainComplex& c, const HomologyBasis* h = nullptr) {
    return detail::torsion_with_choices(c, h, nullptr);
}

// Recomputes the torsion `trials` times with freshly randomized boundary
// bases, lifts and in-class representative shifts, and demands bit-identical
// magnitudes each time.
inline void torsion_choice_independence_check(const BasedChainComplex& c, const HomologyBasis* h,
                                              std::size_t trials, std::uint64_t seed) {
    TorsionValue reference = torsion(c, h);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        TorsionValue redraw = detail::torsion_with_choices(c, h, &rng);
        if (redraw.magnitude != reference.magnitude)
            throw IndependenceViolated(to_string(reference.magnitude),
                                       to_string(redraw.magnitude));
    }
}

inline BasedChainComplex tensor_product(const BasedChainComplex& c, const BasedChainComplex& d) {
    validate(c);
    validate(d);
    std::size_t top = c.top_degree() + d.top_degree();

    // summand (i, k-i) of degree k starts at offset[k][i - lo(k)]
    auto lo = [&](std::size_t k) { return k > d.top_degree() ? k - d.top_degree() : 0; };
    auto hi = [&](std::size_t k) { return std::min(k, c.top_degree()); };

    BasedChainComplex out;
    std::vector<std::vector<std::size_t>> offsets(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t total = 0;
        for (std::size_t i = lo(k); i <= hi(k); ++i) {
            offsets[k].push_back(total);
            total += c.degrees[i] * d.degrees[k - i];
        }
        out.degrees.push_back(total);
    }

    for (std::size_t k = 1; k <= top; ++k) {
        RationalMatrix dk(out.degrees[k - 1], out.degrees[k]);
        for (std::size_t i = lo(k); i <= hi(k); ++i) {
            std::size_t j = k - i;
            std::size_t col0 = offsets[k][i - lo(k)];
            if (i >= 1 && i - 1 >= lo(k - 1) && i - 1 <= hi(k - 1)) {
                RationalMatrix block = kron(c.boundary(i), RationalMatrix::identity(d.degrees[j]));
                place_block(dk, offsets[k - 1][i - 1 - lo(k - 1)], col0, block);
            }
            if (j >= 1 && i >= lo(k - 1) && i <= hi(k - 1)) {
                RationalMatrix block = kron(RationalMatrix::identity(c.degrees[i]), d.boundary(j));
                if (i % 2 == 1) block = block.scaled(Rat(-1));  // Koszul sign (-1)^i
                place_block(dk, offsets[k - 1][i - lo(k - 1)], col0, block);
            }
        }
        out.boundaries.push_back(std::move(dk));
    }
    validate(out);
    return out;
}

inline BasedChainComplex direct_sum(const BasedChainComplex& c, const BasedChainComplex& d) {
    validate(c);
    validate(d);
    BasedChainComplex out;
    std::size_t top = std::max(c.top_degree(), d.top_degree());
    auto rank_c = [&](std::size_t i) { return i < c.degrees.size() ? c.degrees[i] : 0; };
    auto rank_d = [&](std::size_t i) { return i < d.degrees.size() ? d.degrees[i] : 0; };
    for (std::size_t i = 0; i <= top; ++i) out.degrees.push_back(rank_c(i) + rank_d(i));
    for (std::size_t i = 1; i <= top; ++i) {
        RationalMatrix b(out.degrees[i - 1], out.degrees[i]);
        RationalMatrix bc = i <= c.top_degree() ? c.boundary(i)
                                                : RationalMatrix::zero(rank_c(i - 1), rank_c(i));
        RationalMatrix bd = i <= d.top_degree() ? d.boundary(i)
                                                : RationalMatrix::zero(rank_d(i - 1), rank_d(i));
        place_block(b, 0, 0, bc);
        place_block(b, rank_c(i - 1), rank_c(i), bd);
        out.boundaries.push_back(std::move(b));
    }
    return out;
}

}  // namespace rtorsion
