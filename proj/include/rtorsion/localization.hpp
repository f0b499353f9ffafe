// Evaluation of the localized abelian Chern-Simons integrand over the torus
// moduli component U(1)^(2g): the A-hat factor degenerates to 1 (all Chern
// roots vanish), the first Chern class term and the Theta term vanish, and
// the surviving integral of exp(k Omega) is a monomial k^g under the unit
// volume normalization.  The boundary-condition phase exp(-i pi eta0 / 2)
// is carried exactly as a rational multiple of pi.

#pragma once

#include <cstddef>
#include <vector>

#include "rtorsion/errors.hpp"
#include "rtorsion/exterior.hpp"
#include "rtorsion/numeric.hpp"

namespace rtorsion {

// Couplings and regulator data for gauge group U(1) on a degree-n bundle.
struct LocalizationData {
    long long euler_degree = 0;   // n
    std::size_t dim_gauge = 1;    // dim G, 1 for U(1)
    Rat eta0;                     // -(n dim G)/6
    Rat dual_coxeter;             // 0 for U(1)
    Rat epsilon_shift;            // epsilon   = 2 pi / (k + epsilon_shift), so 0
    Rat epsilon_r_shift;          // epsilon_r = 2 pi / (k + dual Coxeter)
    Rat theta_class;              // 0: the universal line bundle is normalized to degree 0
};

inline LocalizationData make_localization_data(long long euler_degree, std::size_t dim_gauge = 1) {
    LocalizationData d;
    d.euler_degree = euler_degree;
    d.dim_gauge = dim_gauge;
    d.eta0 = Rat(Int(-euler_degree) * Int(dim_gauge), Int(6));
    d.dual_coxeter = 0;
    d.epsilon_shift = 0;
    d.epsilon_r_shift = d.dual_coxeter;
    d.theta_class = 0;
    return d;
}

// Unit complex number recorded as an exact multiple of pi; the (cos, sin)
// pair is filled in exactly when the angle is a multiple of pi/2 (the only
// case where both are rational).
struct PhaseAngle {
    Rat pi_multiple;
    bool exact_pair = false;
    Rat cos_value;
    Rat sin_value;
};

inline PhaseAngle phase_from_pi_multiple(const Rat& pi_multiple) {
    PhaseAngle p;
    p.pi_multiple = pi_multiple;
    Rat doubled = pi_multiple * 2;
    if (denominator_of(doubled) == 1) {
        p.exact_pair = true;
        Int quarter_turns = numerator_of(doubled) % 4;
        if (quarter_turns < 0) quarter_turns += 4;
        static const int cos_table[4] = {1, 0, -1, 0};
        static const int sin_table[4] = {0, 1, 0, -1};
        p.cos_value = cos_table[static_cast<int>(quarter_turns)];
        p.sin_value = sin_table[static_cast<int>(quarter_turns)];
    }
    return p;
}

struct EtaPrefactor {
    Rat eta0;
    PhaseAngle phase;  // angle = -pi * eta0 / 2
};

inline EtaPrefactor eta_prefactor(long long euler_degree, std::size_t dim_gauge) {
    EtaPrefactor e;
    e.eta0 = Rat(Int(-euler_degree) * Int(dim_gauge), Int(6));
    e.phase = phase_from_pi_multiple(-e.eta0 / 2);
    return e;
}

struct TorusPartition {
    LevelPoly magnitude;      // the full level polynomial, a monomial of degree g
    Rat magnitude_at_level;   // evaluated at the requested level
    std::size_t k_exponent;   // g
    EtaPrefactor prefactor;
    LocalizationData data;
};

// Integrand assembled from the genuine specializations rather than the
// closed form, so the k^g monomial is an output, not an input.
inline TorusPartition bw_partition_torus(std::size_t genus, long long euler_degree, long long level) {
    if (euler_degree < 1) throw EulerDegreeZero();
    if (level < 1) throw DomainError("BadLevel", "level must be a positive integer");

    // all Chern roots of the torus moduli vanish
    std::vector<ExteriorClass> roots(2 * genus, ExteriorClass::zero(genus));
    ExteriorClass a_hat = a_hat_series(genus, roots, 2 * genus);

    ExteriorClass omega_k = ExteriorClass::symplectic_form(genus).scaled(LevelPoly::level());
    ExteriorClass c1_half = ExteriorClass::zero(genus);       // c1 of the torus tangent bundle is 0
    ExteriorClass theta_term = ExteriorClass::zero(genus);    // Theta vanishes for U(1)
    ExteriorClass integrand = wedge(a_hat, exp_class(omega_k + c1_half + theta_term));

    TorusPartition out;
    out.magnitude = integrate_top(integrand);
    out.magnitude_at_level = out.magnitude.evaluate(Rat(level));
    out.k_exponent = out.magnitude.degree();
    out.prefactor = eta_prefactor(euler_degree, 1);
    out.data = make_localization_data(euler_degree, 1);
    return out;
}

}  // namespace rtorsion
