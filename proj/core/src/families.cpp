#include "reglab/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace reglab {

namespace example1 {

Ring ambient_ring(const Params& p) {
    p.validate();
    return Ring::make(p.field, {"y", "z", "v", "w"}, {2, 2, std::nullopt, std::nullopt});
}

Ring reduced_ring(const Params& p) {
    p.validate();
    return Ring::make(p.field, {"v", "w"});
}

namespace {

// Signs of the bidiagonal entries depend on the parity of the matrix index
// and of the row (1-based).
int sign_B_super(int n, int row1) { return n % 2 == 0 ? (row1 % 2 ? -1 : 1) : (row1 % 2 ? 1 : -1); }
int sign_C_diag(int n, int row1) { return n % 2 == 0 ? (row1 % 2 ? 1 : -1) : (row1 % 2 ? -1 : 1); }
int sign_C_super(int n) { return n % 2 == 0 ? 1 : -1; }

GradedMatrix bidiagonal(const Ring& ring, int n, int base_twist, int entry_deg,
                        const std::function<Polynomial(int)>& diag,
                        const std::function<Polynomial(int)>& super) {
    GradedFreeModule cod(ring, std::vector<int>(std::size_t(n), base_twist));
    GradedFreeModule dom(ring, std::vector<int>(std::size_t(n) + 1, base_twist + entry_deg));
    GradedMatrix m = GradedMatrix::zero(cod, dom);
    for (int i = 0; i < n; ++i) {
        m.set_entry(std::size_t(i), std::size_t(i), diag(i + 1));
        m.set_entry(std::size_t(i), std::size_t(i) + 1, super(i + 1));
    }
    return m;
}

}  // namespace

GradedMatrix matrix_B(const Params& p, int n, int base_twist) {
    p.validate();
    if (n < 1) throw parameter_error("matrix_B: n must be >= 1");
    Ring A = ambient_ring(p);
    Polynomial y = Polynomial::variable(A, 0), z = Polynomial::variable(A, 1);
    return bidiagonal(
        A, n, base_twist, 1, [&](int) { return y; },
        [&](int row) { return sign_B_super(n, row) < 0 ? -z : z; });
}

GradedMatrix matrix_C(const Params& p, int n, int base_twist) {
    p.validate();
    if (n < 1) throw parameter_error("matrix_C: n must be >= 1");
    Ring A = ambient_ring(p);
    Monomial vm(4, 0), wm(4, 0);
    vm[2] = p.m;
    wm[3] = p.m;
    Polynomial pv(A, vm, Rational(1)), pw(A, wm, Rational(1));
    return bidiagonal(
        A, n, base_twist, p.m,
        [&](int row) { return sign_C_diag(n, row) < 0 ? -pv : pv; },
        [&](int) { return sign_C_super(n) < 0 ? -pw : pw; });
}

GradedMatrix matrix_D(const Params& p, int n) {
    p.validate();
    if (n < 1) throw parameter_error("matrix_D: n must be >= 1");
    Ring A = ambient_ring(p);
    int m = p.m;
    // codomain: A(-m-n+2)^n ⊕ A(-n+1)^n, domain: A(-m-n+1)^{n+1} ⊕ A(-n)^{n+1}
    std::vector<int> cod_tw, dom_tw;
    for (int i = 0; i < n; ++i) cod_tw.push_back(m + n - 2);
    for (int i = 0; i < n; ++i) cod_tw.push_back(n - 1);
    for (int i = 0; i <= n; ++i) dom_tw.push_back(m + n - 1);
    for (int i = 0; i <= n; ++i) dom_tw.push_back(n);
    GradedMatrix D = GradedMatrix::zero(GradedFreeModule(A, cod_tw), GradedFreeModule(A, dom_tw));
    GradedMatrix B = matrix_B(p, n, 0);
    GradedMatrix C = matrix_C(p, n, 0);
    std::size_t un = std::size_t(n);
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j <= un; ++j) {
            if (!B.entry(i, j).is_zero()) {
                D.set_entry(i, j, B.entry(i, j));                    // top-left B_n
                D.set_entry(un + i, un + 1 + j, B.entry(i, j));      // bottom-right B_n
            }
            if (!C.entry(i, j).is_zero()) {
                D.set_entry(un + i, j, C.entry(i, j));               // bottom-left C_n
            }
        }
    }
    return D;
}

std::vector<GradedMatrix> resolution_of_N(const Params& p, int n_max) {
    if (n_max < 1) throw parameter_error("resolution_of_N: n_max must be >= 1");
    std::vector<GradedMatrix> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(matrix_B(p, n, n - 1));
    return out;
}

std::vector<GradedMatrix> resolution_of_M(const Params& p, int n_max) {
    if (n_max < 1) throw parameter_error("resolution_of_M: n_max must be >= 1");
    std::vector<GradedMatrix> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(matrix_D(p, n));
    return out;
}

GradedMatrix phi(const Params& p, int n) {
    p.validate();
    if (n < 1) throw parameter_error("phi: n must be >= 1");
    Ring R = reduced_ring(p);
    Monomial vm(2, 0), wm(2, 0);
    vm[0] = p.m;
    wm[1] = p.m;
    Polynomial pv(R, vm, Rational(1)), pw(R, wm, Rational(1));
    return bidiagonal(
        R, n, n - 1, p.m,
        [&](int row) { return sign_C_diag(n, row) < 0 ? -pv : pv; },
        [&](int) { return sign_C_super(n) < 0 ? -pw : pw; });
}

GradedMatrix psi(const Params& p, int n) { return dual_map(phi(p, n)); }

std::pair<PresentedModule, PresentedModule> tor_module(const Params& p, int n) {
    return {PresentedModule::kernel(phi(p, n)), PresentedModule::cokernel(phi(p, n + 1))};
}

std::pair<PresentedModule, PresentedModule> ext_module(const Params& p, int n) {
    return {PresentedModule::cokernel(psi(p, n)), PresentedModule::kernel(psi(p, n + 1))};
}

RegularityReport tor_regularity(const Params& p, int n, std::optional<int> cap_override) {
    auto [ker_part, coker_part] = tor_module(p, n);
    int margin = 2 * p.m;
    int ker_cap = cap_override.value_or((p.m + 1) * n + p.m - 1 + 3 + margin);
    int coker_cap = cap_override.value_or((p.m + 1) * (n + 1) + p.m - 3 + 3 + margin);
    return combine_summands(regularity(ker_part, ker_cap), regularity(coker_part, coker_cap));
}

RegularityReport ext_regularity(const Params& p, int n, std::optional<int> cap_override) {
    auto [coker_part, ker_part] = ext_module(p, n);
    int cap = cap_override.value_or(-n + 3 + 2 * p.m);
    return combine_summands(regularity(coker_part, cap), regularity(ker_part, cap));
}

}  // namespace example1

namespace example2 {

Ring ambient_ring() {
    return Ring::make(FieldSpec::gf(2), {"x", "y", "z", "u", "v", "w"},
                      {2, 2, 2, std::nullopt, std::nullopt, std::nullopt});
}

Ring reduced_ring() { return Ring::make(FieldSpec::gf(2), {"u", "v", "w"}); }

Ring delta_ring() {
    return Ring::make(FieldSpec::gf(2), {"u", "v", "w", "x", "y", "z"});
}

namespace {

// Block layout shared by matrix_E and matrix_F: block row k (height k)
// holds scalar·I_k at block column k and a sign-free bidiagonal at block
// column k+1. Row offsets C(k,2), column offsets C(k,2) as well.
GradedMatrix staircase(const Ring& ring, int n, int base_twist, std::size_t var_diag,
                       std::size_t var_bi_lo, std::size_t var_bi_hi) {
    if (n < 1) throw parameter_error("block matrix index must be >= 1");
    std::size_t rows = std::size_t(binomial2(n + 1));
    std::size_t cols = std::size_t(binomial2(n + 2));
    GradedFreeModule cod(ring, std::vector<int>(rows, base_twist));
    GradedFreeModule dom(ring, std::vector<int>(cols, base_twist + 1));
    GradedMatrix m = GradedMatrix::zero(std::move(cod), std::move(dom));
    Polynomial a = Polynomial::variable(ring, var_diag);
    Polynomial b = Polynomial::variable(ring, var_bi_lo);
    Polynomial c = Polynomial::variable(ring, var_bi_hi);
    for (int k = 1; k <= n; ++k) {
        std::size_t ro = std::size_t(binomial2(k));
        std::size_t co = std::size_t(binomial2(k));
        std::size_t cb = std::size_t(binomial2(k + 1));
        for (int i = 0; i < k; ++i) {
            m.set_entry(ro + i, co + i, a);
            m.set_entry(ro + i, cb + i, b);
            m.set_entry(ro + i, cb + i + 1, c);
        }
    }
    return m;
}

}  // namespace

GradedMatrix matrix_E(int n, int base_twist) {
    Ring A = ambient_ring();
    return staircase(A, n, base_twist, 0, 1, 2);  // x, y, z
}

GradedMatrix matrix_F(const Ring& ring, int n, int base_twist) {
    auto u = ring.var_index("u"), v = ring.var_index("v"), w = ring.var_index("w");
    if (!u || !v || !w) throw parameter_error("matrix_F: ring must name u, v, w");
    return staircase(ring, n, base_twist, *u, *v, *w);
}

GradedMatrix matrix_D(int n) {
    if (n < 1) throw parameter_error("matrix_D: n must be >= 1");
    Ring A = ambient_ring();
    std::size_t half_r = std::size_t(binomial2(n + 1));
    std::size_t half_c = std::size_t(binomial2(n + 2));
    GradedFreeModule cod(A, std::vector<int>(2 * half_r, n - 1));
    GradedFreeModule dom(A, std::vector<int>(2 * half_c, n));
    GradedMatrix D = GradedMatrix::zero(std::move(cod), std::move(dom));
    GradedMatrix E = matrix_E(n, n - 1);
    GradedMatrix F = matrix_F(A, n, n - 1);
    for (std::size_t i = 0; i < half_r; ++i) {
        for (std::size_t j = 0; j < half_c; ++j) {
            if (!E.entry(i, j).is_zero()) {
                D.set_entry(i, j, E.entry(i, j));
                D.set_entry(half_r + i, half_c + j, E.entry(i, j));
            }
            if (!F.entry(i, j).is_zero()) {
                D.set_entry(half_r + i, j, F.entry(i, j));
            }
        }
    }
    return D;
}

std::vector<GradedMatrix> resolution_of_N(int n_max) {
    if (n_max < 1) throw parameter_error("resolution_of_N: n_max must be >= 1");
    std::vector<GradedMatrix> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(matrix_E(n, n - 1));
    return out;
}

std::vector<GradedMatrix> resolution_of_M(int n_max) {
    if (n_max < 1) throw parameter_error("resolution_of_M: n_max must be >= 1");
    std::vector<GradedMatrix> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(matrix_D(n));
    return out;
}

GradedMatrix phi(int n) {
    if (n < 1) throw parameter_error("phi: n must be >= 1");
    return matrix_F(reduced_ring(), n, n - 1);
}

GradedMatrix psi(int n) { return dual_map(phi(n)); }

std::pair<PresentedModule, PresentedModule> tor_module(int n) {
    if (n < 1) throw parameter_error("tor_module: n must be >= 1");
    return {PresentedModule::kernel(phi(n)), PresentedModule::cokernel(phi(n + 1))};
}

std::pair<PresentedModule, PresentedModule> ext_module(int n) {
    if (n < 1) throw parameter_error("ext_module: n must be >= 1");
    return {PresentedModule::cokernel(psi(n)), PresentedModule::kernel(psi(n + 1))};
}

GradedMatrix phi_composite(int n) {
    if (n < 1) throw parameter_error("phi_composite: n must be >= 1");
    GradedMatrix acc = phi(1);
    for (int k = 2; k <= n; ++k) acc = compose(acc, phi(k));
    return acc;
}

Polynomial delta_apply(const Polynomial& p) {
    const Ring& D = p.ring();
    if (D.var_count() != 6) throw parameter_error("delta_apply expects the 6-variable ring");
    Polynomial out(D);
    Monomial m;
    for (const auto& [mono, coeff] : p.terms()) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (mono[3 + k] == 0) continue;
            m = mono;
            --m[3 + k];
            ++m[k];
            out.add_term(m, coeff);
        }
    }
    return out;
}

namespace {

// x,y,z-degree-n monomial triples in descending lex order.
std::vector<Monomial> xyz_basis(int n) {
    return monomial_basis(Ring::make(FieldSpec::gf(2), {"x", "y", "z"}), n);
}

}  // namespace

GradedMatrix delta_matrix(int n) {
    if (n < 1) throw parameter_error("delta_matrix: n must be >= 1");
    Ring R = reduced_ring();
    Ring D = delta_ring();
    auto dom_basis = xyz_basis(n);
    auto cod_basis = xyz_basis(n - 1);
    GradedFreeModule cod(R, std::vector<int>(cod_basis.size(), n - 1));
    GradedFreeModule dom(R, std::vector<int>(dom_basis.size(), n));
    GradedMatrix out = GradedMatrix::zero(std::move(cod), std::move(dom));
    for (std::size_t j = 0; j < dom_basis.size(); ++j) {
        Monomial six(6, 0);
        for (std::size_t k = 0; k < 3; ++k) six[3 + k] = dom_basis[j][k];
        Polynomial image = delta_apply(Polynomial(D, six, Rational(1)));
        for (const auto& [mono, coeff] : image.terms()) {
            Monomial xyz{mono[3], mono[4], mono[5]};
            Monomial uvw{mono[0], mono[1], mono[2]};
            std::size_t i = monomial_index(cod_basis, xyz);
            out.set_entry(i, j, out.entry(i, j) + Polynomial(R, uvw, coeff));
        }
    }
    return out;
}

GradedMatrix mu_multiply(int n) {
    if (n < 1) throw parameter_error("mu_multiply: n must be >= 1");
    Ring R = reduced_ring();
    auto dom_basis = xyz_basis(n - 1);
    auto cod_basis = xyz_basis(n);
    GradedFreeModule cod(R, std::vector<int>(cod_basis.size(), -n));
    GradedFreeModule dom(R, std::vector<int>(dom_basis.size(), -(n - 1)));
    GradedMatrix out = GradedMatrix::zero(std::move(cod), std::move(dom));
    for (std::size_t j = 0; j < dom_basis.size(); ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
            Monomial xyz = dom_basis[j];
            ++xyz[k];
            Monomial uvw(3, 0);
            uvw[k] = 1;
            std::size_t i = monomial_index(cod_basis, xyz);
            out.set_entry(i, j, out.entry(i, j) + Polynomial(R, uvw, Rational(1)));
        }
    }
    return out;
}

GradedMatrix matrix_G(int n) {
    if (n < 1) throw parameter_error("matrix_G: n must be >= 1");
    Ring R = reduced_ring();
    auto basis = xyz_basis(n);
    std::set<Monomial> support;
    for (const auto& g : coefficient_ideal_expanded(n).generators) support.insert(g);
    std::size_t size = basis.size();
    GradedFreeModule cod(R, std::vector<int>(size, n));
    GradedFreeModule dom(R, std::vector<int>(size, 2 * n));
    GradedMatrix out = GradedMatrix::zero(std::move(cod), std::move(dom));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            Monomial e(3, 0);
            bool ok = true;
            for (std::size_t k = 0; k < 3; ++k) {
                e[k] = n - basis[i][k] - basis[j][k];
                if (e[k] < 0) ok = false;
            }
            if (!ok || !support.count(e)) continue;
            out.set_entry(i, j, Polynomial(R, e, Rational(1)));
        }
    }
    return out;
}

std::vector<GradedMatrix> four_term_complex(int n) {
    if (n < 1) throw parameter_error("four_term_complex: n must be >= 1");
    // dual_map(phi_n) has codomain twists -n; the chain position wants 2n
    return {phi(n), matrix_G(n), dual_map(phi(n)).twist_shifted(3 * n)};
}

CoefficientIdeal coefficient_ideal_expanded(int n) {
    if (n < 1) throw parameter_error("coefficient_ideal: n must be >= 1");
    Ring D = delta_ring();
    Polynomial base(D);
    for (std::size_t k = 0; k < 3; ++k) {
        Monomial m(6, 0);
        m[k] = 1;
        m[3 + k] = 1;
        base.add_term(m, Rational(1));
    }
    Polynomial power = Polynomial::constant(D, Rational(1));
    for (int i = 0; i < n; ++i) power = power * base;
    CoefficientIdeal out;
    out.n = n;
    for (const auto& [mono, coeff] : power.terms()) {
        out.generators.push_back(Monomial{mono[0], mono[1], mono[2]});
    }
    std::sort(out.generators.begin(), out.generators.end());
    return out;
}

CoefficientIdeal coefficient_ideal(int n) {
    if (n < 1) throw parameter_error("coefficient_ideal: n must be >= 1");
    // Frobenius factorization over the binary digits of n: the generator
    // set is the set of products of one pure power u^{2^i}/v^{2^i}/w^{2^i}
    // per set bit.
    std::vector<int> bits;
    for (int i = 0; (1 << i) <= n; ++i) {
        if (n & (1 << i)) bits.push_back(i);
    }
    std::vector<Monomial> gens{Monomial(3, 0)};
    for (int bit : bits) {
        std::vector<Monomial> next;
        next.reserve(gens.size() * 3);
        for (const auto& g : gens) {
            for (std::size_t k = 0; k < 3; ++k) {
                Monomial m = g;
                m[k] += (1 << bit);
                next.push_back(std::move(m));
            }
        }
        gens = std::move(next);
    }
    std::sort(gens.begin(), gens.end());
    CoefficientIdeal out;
    out.n = n;
    out.generators = std::move(gens);
    return out;
}

PresentedModule quotient_by_coefficient_ideal(int n) {
    Ring R = reduced_ring();
    CoefficientIdeal I = coefficient_ideal(n);
    GradedFreeModule cod(R, {0});
    GradedFreeModule dom(R, std::vector<int>(I.generators.size(), n));
    GradedMatrix m = GradedMatrix::zero(std::move(cod), std::move(dom));
    for (std::size_t j = 0; j < I.generators.size(); ++j) {
        m.set_entry(0, j, Polynomial(R, I.generators[j], Rational(1)));
    }
    return PresentedModule::cokernel(std::move(m));
}

RegularityReport tor_regularity(int n, std::optional<int> cap_override) {
    auto [ker_part, coker_part] = tor_module(n);
    int ker_cap = cap_override.value_or(closed_forms::ker_phi_regularity(n) + 6);
    int coker_cap = cap_override.value_or(closed_forms::coker_phi_regularity(n + 1) + 6);
    return combine_summands(regularity(ker_part, ker_cap), regularity(coker_part, coker_cap));
}

RegularityReport ext_regularity(int n, std::optional<int> cap_override) {
    auto [coker_part, ker_part] = ext_module(n);
    int cap = cap_override.value_or(-n + 6);
    return combine_summands(regularity(coker_part, cap), regularity(ker_part, cap));
}

RegularityReport coker_phi_regularity_report(int n, std::optional<int> cap_override) {
    int cap = cap_override.value_or(closed_forms::coker_phi_regularity(n) + 6);
    return regularity(PresentedModule::cokernel(phi(n)), cap);
}

RegularityReport ker_phi_regularity_report(int n, std::optional<int> cap_override) {
    int cap = cap_override.value_or(closed_forms::ker_phi_regularity(n) + 6);
    return regularity(PresentedModule::kernel(phi(n)), cap);
}

RegularityReport coefficient_quotient_regularity(int n, std::optional<int> cap_override) {
    int cap = cap_override.value_or(closed_forms::coefficient_ideal_regularity(n) + 3);
    return regularity(quotient_by_coefficient_ideal(n), cap);
}

bool pure_powers_annihilate(int n, int indeg, int top_degree) {
    if (n < 1) throw parameter_error("pure_powers_annihilate: n must be >= 1");
    int power = int(binomial2(n + 1));
    PresentedModule coker = PresentedModule::cokernel(phi(n));
    // pieces beyond top_degree vanish; multiplication into them is zero
    int last_interesting = top_degree - power;
    if (last_interesting < indeg) return true;
    ModuleSlices slices(coker, indeg, top_degree);
    for (std::size_t var = 0; var < 3; ++var) {
        Monomial mono(3, 0);
        mono[var] = power;
        for (int d = indeg; d <= last_interesting; ++d) {
            if (!slices.monomial_multiplication(mono, d).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace example2

namespace closed_forms {

namespace {
void check_n(int n) {
    if (n < 1) throw parameter_error("closed form defined for n >= 1");
}
void check_m(int m) {
    if (m < 1) throw parameter_error("closed form defined for m >= 1");
}
int floor_log2(int n) {
    int l = 0;
    while ((1 << (l + 1)) <= n) ++l;
    return l;
}
}  // namespace

int example1_reg_tor(int m, int n) {
    check_m(m);
    check_n(n);
    return (m + 1) * n + 2 * m - 2;
}
int example1_indeg_tor(int m, int n) {
    check_m(m);
    check_n(n);
    return n;
}
int example1_reg_ext(int m, int n) {
    check_m(m);
    check_n(n);
    return -n;
}
int example1_indeg_ext(int m, int n) {
    check_m(m);
    check_n(n);
    return -n - m + 1;
}

int example2_f(int n) {
    check_n(n);
    if ((n & (n + 1)) == 0) {
        // n = 2^l - 1
        return 2 * (n + 1) - 2;
    }
    int l = floor_log2(n);
    return (1 << (l + 1)) - 1;
}
int example2_reg_tor(int n) { return n + example2_f(n); }
int example2_indeg_tor(int n) {
    check_n(n);
    return n;
}
int example2_reg_ext(int n) {
    check_n(n);
    return -n;
}
int example2_indeg_ext(int n) {
    check_n(n);
    return -n;
}

int coefficient_ideal_regularity(int n) {
    check_n(n);
    return 3 * ((1 << floor_log2(n)) - 1);
}

long coefficient_ideal_generator_count(int n) {
    check_n(n);
    long count = 1;
    for (int b = std::popcount(unsigned(n)); b > 0; --b) count *= 3;
    return count;
}

int coker_phi_regularity(int n) {
    check_n(n);
    return 2 * ((1 << floor_log2(n)) - 1) + n - 1;
}

int ker_phi_regularity(int n) { return coker_phi_regularity(n) + 2; }

}  // namespace closed_forms

}  // namespace reglab
