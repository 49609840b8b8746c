#pragma once

#include <utility>
#include <vector>

#include "reglab/graded.hpp"
#include "reglab/homology.hpp"

namespace reglab {

/// First built-in example family: A = K[y,z,v,w]/(y^2,z^2) over any field,
/// M presented by a 2x4 matrix depending on a parameter m >= 1, N = A/(y,z).
/// Tor/Ext computations reduce to bidiagonal matrix families over K[v,w].
namespace example1 {

struct Params {
    int m = 1;
    FieldSpec field = FieldSpec::rationals();

    void validate() const {
        if (m < 1) throw parameter_error("example1: m must be >= 1");
    }
};

Ring ambient_ring(const Params& p);  // K[y,z,v,w]/(y^2,z^2)
Ring reduced_ring(const Params& p);  // K[v,w]

/// Bidiagonal y/z matrix of size n x (n+1) over the ambient ring, signs
/// alternating with row parity (the even/odd variants differ):
/// A(-base-1)^{n+1} -> A(-base)^n.
GradedMatrix matrix_B(const Params& p, int n, int base_twist);

/// Bidiagonal v^m/w^m companion of matrix_B, signs per parity:
/// A(-base-m)^{n+1} -> A(-base)^n.
GradedMatrix matrix_C(const Params& p, int n, int base_twist);

/// Mapping-cone differential [[B_n, 0], [C_n, B_n]] with the resolution
/// twists of M.
GradedMatrix matrix_D(const Params& p, int n);

/// Differentials B_1..B_n of the minimal free resolution of N over A.
std::vector<GradedMatrix> resolution_of_N(const Params& p, int n_max);
/// Differentials D_1..D_n of the minimal free resolution of M over A.
std::vector<GradedMatrix> resolution_of_M(const Params& p, int n_max);

/// The reduced-ring map whose kernel/cokernel carry Tor:
/// R(-m-n+1)^{n+1} -> R(-n+1)^n over R = K[v,w].
GradedMatrix phi(const Params& p, int n);
/// Dual of phi: R(n-1)^n -> R(m+n-1)^{n+1}.
GradedMatrix psi(const Params& p, int n);

/// Tor_n summands over the reduced ring: {kernel of phi_n, cokernel of
/// phi_{n+1}}.
std::pair<PresentedModule, PresentedModule> tor_module(const Params& p, int n);
/// Ext^n summands: {cokernel of psi_n, kernel of psi_{n+1}}.
std::pair<PresentedModule, PresentedModule> ext_module(const Params& p, int n);

/// Combined regularity/indeg of Tor_n resp. Ext^n. Degree caps default to
/// the closed-form prediction plus slack plus the completion margin; a
/// cap_override replaces them.
RegularityReport tor_regularity(const Params& p, int n, std::optional<int> cap_override = {});
RegularityReport ext_regularity(const Params& p, int n, std::optional<int> cap_override = {});

}  // namespace example1

/// Second built-in example family, characteristic 2 only:
/// A = K[x,y,z,u,v,w]/(x^2,y^2,z^2), M presented by a 2x6 matrix,
/// N = A/(x,y,z). The reduced-ring maps are the block matrices F_n, and
/// the differential-operator interpretation drives the coefficient-ideal
/// staircase.
namespace example2 {

struct Params {
    FieldSpec field = FieldSpec::gf(2);

    void validate() const {
        if (field.characteristic != 2)
            throw parameter_error("example2 requires characteristic 2");
    }
};

Ring ambient_ring();  // GF(2)[x,y,z,u,v,w]/(x^2,y^2,z^2)
Ring reduced_ring();  // GF(2)[u,v,w]
Ring delta_ring();    // GF(2)[u,v,w,x,y,z], polynomial

/// Block matrix with x·I_k on the diagonal blocks and sign-free y/z
/// bidiagonals above, size C(n+1,2) x C(n+2,2), over the ambient ring.
GradedMatrix matrix_E(int n, int base_twist);
/// Same shape with u·I_k and v/w bidiagonals; `ring` may be the ambient or
/// the reduced ring (only u,v,w appear).
GradedMatrix matrix_F(const Ring& ring, int n, int base_twist);
/// Mapping-cone differential [[E_n, 0], [F_n, E_n]].
GradedMatrix matrix_D(int n);

std::vector<GradedMatrix> resolution_of_N(int n_max);
std::vector<GradedMatrix> resolution_of_M(int n_max);

/// R(-n)^{C(n+2,2)} -> R(-n+1)^{C(n+1,2)} over R = GF(2)[u,v,w].
GradedMatrix phi(int n);
GradedMatrix psi(int n);

std::pair<PresentedModule, PresentedModule> tor_module(int n);
std::pair<PresentedModule, PresentedModule> ext_module(int n);

/// phi(1)∘phi(2)∘…∘phi(n): a single row whose nonzero entries generate the
/// image ideal in the degree-0 target.
GradedMatrix phi_composite(int n);

/// The shift operator u·∂x + v·∂y + w·∂z on GF(2)[u,v,w][x,y,z], where ∂
/// maps x^a to x^{a-1} (no multiplicity factor). R-linear; lowers the
/// x,y,z-degree by one.
Polynomial delta_apply(const Polynomial& p);

/// Matrix of delta on the x,y,z-degree-n piece, with monomials in
/// descending lex order; coincides with matrix_F over the reduced ring.
GradedMatrix delta_matrix(int n);

/// Multiplication by ux+vy+wz from the degree-(n-1) piece to the degree-n
/// piece; equals dual_map(phi(n)) under the same basis identification and
/// is injective in every degree.
GradedMatrix mu_multiply(int n);

/// Symmetric matrix of the n-fold delta power on the reversed-monomial
/// basis; entries are u/v/w monomials filtered by the degree-n coefficient
/// support.
GradedMatrix matrix_G(int n);

/// The four-term chain [phi_n, G_n, phi_n^t(shifted)] resolving the
/// cokernel of phi_n when n+1 is a power of two:
/// 0 -> R(-2n-1)^{C(n+1,2)} -> R(-2n)^{C(n+2,2)} -> R(-n)^{C(n+2,2)}
///   -> R(-n+1)^{C(n+1,2)}.
std::vector<GradedMatrix> four_term_complex(int n);

struct CoefficientIdeal {
    int n = 0;
    std::vector<Monomial> generators;  // degree-n monomials in u,v,w, sorted
};

/// Generators via the Frobenius factorization over the binary digits of n.
CoefficientIdeal coefficient_ideal(int n);
/// Oracle: direct expansion of (ux+vy+wz)^n over GF(2).
CoefficientIdeal coefficient_ideal_expanded(int n);

/// R/I_n as a presented module (cokernel of the generator row).
PresentedModule quotient_by_coefficient_ideal(int n);

/// Verifies that u^{C(n+1,2)}, v^{C(n+1,2)}, w^{C(n+1,2)} annihilate the
/// cokernel of phi(n) in every degree where the target piece can be
/// nonzero; `top_degree` is the certified top nonzero degree.
bool pure_powers_annihilate(int n, int indeg, int top_degree);

RegularityReport tor_regularity(int n, std::optional<int> cap_override = {});
RegularityReport ext_regularity(int n, std::optional<int> cap_override = {});
RegularityReport coker_phi_regularity_report(int n, std::optional<int> cap_override = {});
RegularityReport ker_phi_regularity_report(int n, std::optional<int> cap_override = {});
RegularityReport coefficient_quotient_regularity(int n, std::optional<int> cap_override = {});

}  // namespace example2

/// Closed-form answers for both families.
namespace closed_forms {

int example1_reg_tor(int m, int n);     // (m+1)n + (2m-2)
int example1_indeg_tor(int m, int n);   // n
int example1_reg_ext(int m, int n);     // -n
int example1_indeg_ext(int m, int n);   // -n-m+1

int example2_f(int n);                  // 2^{l+1}-2 at n = 2^l-1, else 2^{l+1}-1
int example2_reg_tor(int n);            // n + f(n)
int example2_indeg_tor(int n);          // n
int example2_reg_ext(int n);            // -n
int example2_indeg_ext(int n);          // -n

int coefficient_ideal_regularity(int n);       // 3(2^l-1) for 2^l <= n <= 2^{l+1}-1
long coefficient_ideal_generator_count(int n); // 3^{#binary digits of n}

int coker_phi_regularity(int n);  // example2: 2(2^l-1) + n - 1
int ker_phi_regularity(int n);    // example2: 2(2^l-1) + n + 1

}  // namespace closed_forms

inline long binomial2(long k) { return k * (k - 1) / 2; }

}  // namespace reglab
