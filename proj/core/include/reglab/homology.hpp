#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "reglab/evaluate.hpp"
#include "reglab/graded.hpp"

namespace reglab {

/// Graded Betti numbers: (homological index j, internal degree d) -> rank.
/// Only positive ranks are stored. `complete` asserts no entries exist at
/// or beyond the caps.
struct BettiTable {
    std::map<std::pair<int, int>, std::size_t> entries;
    int degree_cap = 0;
    int homological_cap = 0;
    bool complete = false;

    std::size_t rank(int j, int d) const {
        auto it = entries.find({j, d});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int j, int d, std::size_t r) {
        if (r > 0) entries[{j, d}] += r;
    }
    /// max over the table of d - j; nullopt when the table is empty
    /// (zero module: regularity -infinity).
    std::optional<int> regularity() const;
};

/// Everything `regularity` reports. nullopt regularity means -infinity,
/// nullopt indeg means +infinity (zero module conventions).
struct RegularityReport {
    enum class Method { betti, artinian_top_degree };
    std::optional<int> regularity;
    std::optional<int> indeg;
    bool certified = false;
    Method method = Method::betti;
};

/// Regularity of a direct sum: max of regularities, min of indegs,
/// certified when both parts are.
RegularityReport combine_summands(const RegularityReport& a, const RegularityReport& b);

/// Minimal homogeneous generating set of ker(f) in degrees <= degree_cap,
/// returned as a map G -> domain(f) whose image is the truncated kernel.
/// Minimality: each generator is independent of (maximal ideal)·(earlier
/// generators), degree by degree, ties broken by basis order.
GradedMatrix kernel_generators(const GradedMatrix& f, int degree_cap);

/// Minimal generating set of the image of f, as a submatrix-like map with
/// the same codomain (columns are combinations of f's columns; in practice
/// a subset). Exhaustive: generator degrees are bounded by f's column twists.
GradedMatrix image_generators(const GradedMatrix& f);

/// Removes unit (degree-0) entries by homogeneous row/column operations,
/// shrinking the presentation; the cokernel is unchanged up to isomorphism.
GradedMatrix minimalize_presentation(const GradedMatrix& f);

struct Resolution {
    /// differentials[0] presents step 0 (for cokernels the minimalized
    /// presentation, for kernels the generator map into domain(f));
    /// consecutive maps compose to zero.
    std::vector<GradedMatrix> differentials;
    BettiTable betti;
    bool complete = false;
};

/// Minimal free resolution by successive kernel_generators, degree-capped.
/// complete=false signals truncation (cap exceeded), never an error.
Resolution minimal_resolution(const PresentedModule& module, int homological_cap,
                              int degree_cap);

/// Graded ranks of Tor_j(module, K) computed as Koszul homology of the ring
/// variables with coefficients in the module — the independent oracle for
/// minimal_resolution's Betti numbers. Requires a polynomial ring.
std::map<int, std::size_t> koszul_betti(const PresentedModule& module, int j,
                                        int degree_cap);

/// Castelnuovo–Mumford regularity over a polynomial ring with a
/// certification flag; quotient-ring input is rejected.
RegularityReport regularity(const PresentedModule& module, int degree_cap);

/// Per-position, per-degree exactness verdict for a chain
/// maps = [d_1, ..., d_k], d_i : F_i -> F_{i-1}.
struct ExactnessReport {
    bool is_complex = true;
    /// first i (0-based into maps) with d_i ∘ d_{i+1} != 0
    std::optional<std::size_t> failing_composition;
    struct Position {
        std::size_t index = 0;  // checks exactness at F_index
        bool exact = true;
        /// degrees where dim ker != dim im, with both dimensions
        std::vector<std::tuple<int, std::size_t, std::size_t>> defects;
    };
    std::vector<Position> positions;

    bool all_exact() const;
};

/// Verifies d∘d = 0 symbolically, then rank–nullity exactness at every
/// interior position for each degree <= degree_cap. With leading_zero the
/// complex is read as 0 -> F_k -> ... and injectivity of d_k is checked too.
ExactnessReport check_complex_exactness(const std::vector<GradedMatrix>& maps,
                                        int degree_cap, bool leading_zero = false,
                                        unsigned jobs = 1);

/// Degree-indexed dimensions of graded pieces of the module, with the
/// multiplication-by-variable maps between them; the workhorse behind
/// koszul_betti and the Artinian annihilation checks.
class ModuleSlices {
public:
    ModuleSlices(PresentedModule module, int min_degree, int max_degree);

    int min_degree() const { return lo_; }
    int max_degree() const { return hi_; }
    FieldSpec field() const { return field_; }
    std::size_t dim(int d) const;

    /// Matrix of multiplication by the given variable, dim(d) -> dim(d+1).
    PrimeFieldMatrix var_multiplication(std::size_t var, int d) const;

    /// Matrix of multiplication by a monomial, dim(d) -> dim(d + |mono|).
    PrimeFieldMatrix monomial_multiplication(const Monomial& mono, int d) const;

private:
    PresentedModule module_;
    int lo_, hi_;
    bool coker_;
    FieldSpec field_;
    // cokernel: reduced echelon of im(f_d)^T with pivot rows; kernel: dense
    // kernel bases of f_d
    std::vector<PieceBasis> amb_;                    // ambient piece bases per degree
    std::vector<PrimeFieldMatrix> ech_;              // coker: RREF rows; kernel: K_d
    std::vector<std::vector<std::size_t>> pivots_;   // coker only
    std::vector<std::vector<std::size_t>> quotient_; // coker: complement coordinates

    std::size_t idx(int d) const { return std::size_t(d - lo_); }
};

}  // namespace reglab
