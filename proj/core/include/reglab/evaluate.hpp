#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "reglab/graded.hpp"
#include "reglab/matrix.hpp"

namespace reglab {

/// Basis bookkeeping for the degree-d piece of a graded free module:
/// one monomial basis per summand, concatenated in summand order.
struct PieceBasis {
    int degree = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> offsets;              // per summand
    std::vector<std::vector<Monomial>> bases;      // per summand

    /// (summand, monomial) of a global coordinate index.
    std::pair<std::size_t, const Monomial*> locate(std::size_t index) const;
};

PieceBasis piece_basis(const GradedFreeModule& module, int degree);

/// Memoized monomial bases for one ring; cheap helper local to a
/// computation (not thread-safe, create one per worker).
class BasisCache {
public:
    explicit BasisCache(Ring ring) : ring_(std::move(ring)) {}
    const std::vector<Monomial>& basis(int degree);
    const Ring& ring() const { return ring_; }

private:
    Ring ring_;
    std::map<int, std::vector<Monomial>> cache_;
};

/// Sparse vector in the coordinates of a graded piece. Residue values are
/// used when the field has positive characteristic, exact rationals
/// otherwise.
struct SparseColumn {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> mod_vals;
    std::vector<Rational> rat_vals;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
};

/// Sparse realization of the degree-d piece of a homogeneous map.
struct SparsePiece {
    FieldSpec field;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> er, ec;
    std::vector<std::uint32_t> mod_vals;
    std::vector<Rational> rat_vals;
};

SparsePiece evaluate_sparse(const GradedMatrix& f, int degree);

/// Matrix of the induced K-linear map between the degree-d pieces of
/// domain and codomain, in their monomial bases.
PrimeFieldMatrix evaluate_in_degree(const GradedMatrix& f, int degree);

/// Exact rank of the degree-d piece. Splits the nonzero pattern into
/// connected components and eliminates per block; the result equals
/// evaluate_in_degree(f, degree).rank().
std::size_t rank_in_degree(const GradedMatrix& f, int degree);
std::size_t sparse_rank(const SparsePiece& piece);

/// Basis of the right kernel of the degree-d piece, as sparse columns in
/// the domain-piece coordinates, in a deterministic order.
std::vector<SparseColumn> kernel_in_degree(const GradedMatrix& f, int degree);
std::vector<SparseColumn> sparse_kernel(const SparsePiece& piece);

/// Greedy independence filter: processes candidate columns in order inside
/// a dim-dimensional space and returns the indices of those that enlarge
/// the span of the previously accepted ones. Connected components of the
/// combined support are eliminated separately.
std::vector<std::size_t> greedy_independent(FieldSpec field, std::size_t dim,
                                            const std::vector<SparseColumn>& candidates);

/// dim_K of the degree-d piece of a presented module (rank–nullity on the
/// evaluated presentation).
std::size_t hilbert_function(const PresentedModule& module, int degree);

}  // namespace reglab
