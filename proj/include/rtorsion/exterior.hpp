// Exterior algebra on 2g degree-1 generators with coefficients that are
// polynomials in the formal level symbol k, plus the genus-independent
// series machinery for the multiplicative A-hat class.
//
// A class is stored as a map from generator subsets (bitmasks over
// e_1..e_2g) to level polynomials; anticommutativity is canonicalized by
// keeping subsets sorted and absorbing the sign of each product into the
// coefficient.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "rtorsion/errors.hpp"
#include "rtorsion/numeric.hpp"

namespace rtorsion {

// Polynomial in the level symbol with exact rational coefficients.
class LevelPoly {
public:
    LevelPoly() = default;
    LevelPoly(const Rat& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    explicit LevelPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static LevelPoly level() { return LevelPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // degree of the zero polynomial is reported as 0
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    LevelPoly operator+(const LevelPoly& o) const {
        std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
        return LevelPoly(std::move(out));
    }
    LevelPoly operator-(const LevelPoly& o) const { return *this + o.scaled(Rat(-1)); }
    LevelPoly operator*(const LevelPoly& o) const {
        if (coeffs_.empty() || o.coeffs_.empty()) return LevelPoly();
        std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
        return LevelPoly(std::move(out));
    }
    LevelPoly scaled(const Rat& f) const {
        std::vector<Rat> out(coeffs_);
        for (Rat& c : out) c *= f;
        return LevelPoly(std::move(out));
    }

    bool operator==(const LevelPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LevelPoly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;  // coeffs_[i] multiplies k^i; trailing zeros removed
};

// Coefficients b_0..b_order of the multiplicative inverse of a power series
// with a_0 != 0, from the convolution recurrence sum_j a_j b_{n-j} = [n = 0].
inline std::vector<Rat> power_series_inverse(const std::vector<Rat>& a, std::size_t order) {
    if (a.empty() || a[0] == 0)
        throw DomainError("NonUnitSeries", "series has no multiplicative inverse");
    std::vector<Rat> b(order + 1, Rat(0));
    b[0] = Rat(1) / a[0];
    for (std::size_t n = 1; n <= order; ++n) {
        Rat acc(0);
        for (std::size_t j = 1; j <= n && j < a.size(); ++j) acc += a[j] * b[n - j];
        b[n] = -acc / a[0];
    }
    return b;
}

// Taylor coefficients of (x/2)/sinh(x/2) through x^order, computed by
// inverting sinh(x/2)/(x/2) = sum_m x^(2m) / (4^m (2m+1)!).
inline std::vector<Rat> a_hat_coefficients(std::size_t order) {
    std::vector<Rat> denom(order + 1, Rat(0));
    Int four_pow(1), odd_factorial(1);
    for (std::size_t m = 0; 2 * m <= order; ++m) {
        if (m > 0) {
            four_pow *= 4;
            odd_factorial *= Int(2 * m) * Int(2 * m + 1);
        }
        denom[2 * m] = Rat(Int(1), four_pow * odd_factorial);
    }
    return power_series_inverse(denom, order);
}

class ExteriorClass {
public:
    explicit ExteriorClass(std::size_t genus) : genus_(genus) {}

    static ExteriorClass zero(std::size_t genus) { return ExteriorClass(genus); }

    static ExteriorClass scalar(std::size_t genus, const LevelPoly& value) {
        ExteriorClass c(genus);
        c.set_term(0, value);
        return c;
    }

    static ExteriorClass unit(std::size_t genus) { return scalar(genus, LevelPoly(Rat(1))); }

    // e_index, 1-based, index <= 2g
    static ExteriorClass generator(std::size_t genus, std::size_t index) {
        if (index < 1 || index > 2 * genus)
            throw DomainError("BadGenerator", "generator index out of range");
        ExteriorClass c(genus);
        c.set_term(std::uint32_t(1) << (index - 1), LevelPoly(Rat(1)));
        return c;
    }

    // Omega = e1^e2 + e3^e4 + ... + e_{2g-1}^e_{2g}
    static ExteriorClass symplectic_form(std::size_t genus) {
        ExteriorClass c(genus);
        for (std::size_t j = 0; j < genus; ++j)
            c.set_term(std::uint32_t(0b11) << (2 * j), LevelPoly(Rat(1)));
        return c;
    }

    std::size_t genus() const { return genus_; }
    const std::map<std::uint32_t, LevelPoly>& terms() const { return terms_; }

    LevelPoly coefficient(std::uint32_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? LevelPoly() : it->second;
    }

    void set_term(std::uint32_t mask, const LevelPoly& value) {
        if (value.is_zero())
            terms_.erase(mask);
        else
            terms_[mask] = value;
    }

    bool is_zero() const { return terms_.empty(); }

    // true when every term has the same subset size
    bool is_homogeneous() const {
        int deg = -1;
        for (const auto& [mask, poly] : terms_) {
            int d = popcount(mask);
            if (deg == -1) deg = d;
            if (d != deg) return false;
        }
        return true;
    }

    ExteriorClass operator+(const ExteriorClass& o) const {
        require_same_genus(o);
        ExteriorClass out = *this;
        for (const auto& [mask, poly] : o.terms_) out.set_term(mask, out.coefficient(mask) + poly);
        return out;
    }

    ExteriorClass operator-(const ExteriorClass& o) const {
        require_same_genus(o);
        ExteriorClass out = *this;
        for (const auto& [mask, poly] : o.terms_) out.set_term(mask, out.coefficient(mask) - poly);
        return out;
    }

    ExteriorClass scaled(const LevelPoly& f) const {
        ExteriorClass out(genus_);
        for (const auto& [mask, poly] : terms_) out.set_term(mask, poly * f);
        return out;
    }

    bool operator==(const ExteriorClass& o) const {
        return genus_ == o.genus_ && terms_ == o.terms_;
    }
    bool operator!=(const ExteriorClass& o) const { return !(*this == o); }

    static int popcount(std::uint32_t x) {
        int n = 0;
        while (x) {
            n += int(x & 1);
            x >>= 1;
        }
        return n;
    }

private:
    void require_same_genus(const ExteriorClass& o) const {
        if (genus_ != o.genus_) throw GenusMismatch(genus_, o.genus_);
    }

    std::size_t genus_;
    std::map<std::uint32_t, LevelPoly> terms_;

    friend ExteriorClass wedge(const ExteriorClass&, const ExteriorClass&);
};

namespace detail {
// sign of merging two disjoint sorted generator subsets: (-1)^inversions
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (std::uint32_t bit_b = b; bit_b; bit_b &= bit_b - 1) {
        std::uint32_t t = bit_b & ~(bit_b - 1);  // lowest set bit of the remainder
        std::uint32_t higher_in_a = a & ~(t | (t - 1));
        inversions += ExteriorClass::popcount(higher_in_a);
    }
    return inversions % 2 == 0 ? 1 : -1;
}
}  // namespace detail

inline ExteriorClass wedge(const ExteriorClass& a, const ExteriorClass& b) {
    if (a.genus() != b.genus()) throw GenusMismatch(a.genus(), b.genus());
    ExteriorClass out(a.genus());
    for (const auto& [ma, pa] : a.terms())
        for (const auto& [mb, pb] : b.terms()) {
            if (ma & mb) continue;
            LevelPoly prod = pa * pb;
            if (detail::merge_sign(ma, mb) < 0) prod = prod.scaled(Rat(-1));
            std::uint32_t m = ma | mb;
            out.set_term(m, out.coefficient(m) + prod);
        }
    return out;
}

// sum a^m / m!; finite because a is nilpotent (no degree-0 part allowed)
inline ExteriorClass exp_class(const ExteriorClass& a) {
    if (!a.coefficient(0).is_zero()) throw NonNilpotentInput();
    ExteriorClass out = ExteriorClass::unit(a.genus());
    ExteriorClass pow = ExteriorClass::unit(a.genus());
    Int factorial(1);
    for (std::size_t m = 1; m <= 2 * a.genus(); ++m) {
        pow = wedge(pow, a);
        if (pow.is_zero()) break;
        factorial *= Int(m);
        out = out + pow.scaled(LevelPoly(Rat(Int(1), factorial)));
    }
    return out;
}

// Coefficient of e_1^...^e_{2g} under the normalization that the top
// generator monomial integrates to 1.  For g = 0 this is the scalar part.
inline LevelPoly integrate_top(const ExteriorClass& a) {
    std::uint32_t full =
        a.genus() == 0 ? 0 : (std::uint32_t(1) << (2 * a.genus())) - 1;
    return a.coefficient(full);
}

// Product over the given Chern roots of the series (x/2)/sinh(x/2) truncated
// at x^order and evaluated at each root.  Roots must be nilpotent classes.
inline ExteriorClass a_hat_series(std::size_t genus, const std::vector<ExteriorClass>& roots,
                                  std::size_t order) {
    std::vector<Rat> series = a_hat_coefficients(order);
    ExteriorClass out = ExteriorClass::unit(genus);
    for (const ExteriorClass& root : roots) {
        if (root.genus() != genus) throw GenusMismatch(genus, root.genus());
        if (!root.coefficient(0).is_zero()) throw NonNilpotentInput();
        ExteriorClass value = ExteriorClass::scalar(genus, LevelPoly(series[0]));
        ExteriorClass pow = ExteriorClass::unit(genus);
        for (std::size_t m = 1; m <= order; ++m) {
            pow = wedge(pow, root);
            if (pow.is_zero()) break;
            if (m < series.size() && series[m] != 0) value = value + pow.scaled(LevelPoly(series[m]));
        }
        out = wedge(out, value);
    }
    return out;
}

}  // namespace rtorsion
