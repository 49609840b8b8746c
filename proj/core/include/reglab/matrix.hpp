#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reglab/field.hpp"

namespace reglab {

/// How the entries of a PrimeFieldMatrix are held.
///   bitpacked — GF(2) rows packed 64 entries per machine word,
///   scalar    — one uint32 residue per entry (any prime p, reference
///               path for GF(2)),
///   rational  — exact rationals (characteristic 0).
enum class MatrixStorage { bitpacked, scalar, rational };

/// Dense exact matrix over GF(p) or the rationals. Values are immutable
/// in spirit: rank/kernel/solve never mutate the receiver, and instances
/// may be shared read-only across threads once filled.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
    PrimeFieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                     MatrixStorage storage);

    static PrimeFieldMatrix identity(FieldSpec field, std::size_t n);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    MatrixStorage storage() const { return storage_; }

    /// Entry as an exact rational (residues come back as 0..p-1).
    Rational entry(std::size_t i, std::size_t j) const;
    void set_entry(std::size_t i, std::size_t j, const Rational& v);
    void set_entry(std::size_t i, std::size_t j, std::int64_t v);

    bool is_zero() const;
    bool operator==(const PrimeFieldMatrix& other) const;

    /// Rank over the field.
    std::size_t rank() const;

    /// Columns form a basis of the right kernel; column count equals
    /// cols() - rank().
    PrimeFieldMatrix kernel_basis() const;

    PrimeFieldMatrix transposed() const;
    PrimeFieldMatrix multiply(const PrimeFieldMatrix& rhs) const;

    /// Solves A X = rhs exactly; nullopt when inconsistent.
    std::optional<PrimeFieldMatrix> solve(const PrimeFieldMatrix& rhs) const;

    /// Reduced row echelon form and the pivot column indices.
    std::pair<PrimeFieldMatrix, std::vector<std::size_t>> row_echelon() const;

    // Fast residue access, valid for bitpacked/scalar storage only.
    std::uint32_t residue_at(std::size_t i, std::size_t j) const;
    void set_residue(std::size_t i, std::size_t j, std::uint32_t v);

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    MatrixStorage storage_;
    std::size_t words_per_row_ = 0;          // bitpacked
    std::vector<std::uint64_t> bits_;        // bitpacked
    std::vector<std::uint32_t> vals_;        // scalar
    std::vector<Rational> rats_;             // rational

    friend class ColumnEchelon;
};

/// Incremental column span with exact arithmetic: feed columns one at a
/// time, keep the independent ones. insert() returns true when the column
/// enlarged the span.
class ColumnEchelon {
public:
    ColumnEchelon(FieldSpec field, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return pivots_.size(); }

    bool insert(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& col);  // (row, residue)
    bool insert(const std::vector<std::pair<std::uint32_t, Rational>>& col);

private:
    FieldSpec field_;
    std::size_t dim_;
    bool packed_;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> bit_cols_;
    std::vector<std::vector<std::uint32_t>> mod_cols_;
    std::vector<std::vector<Rational>> rat_cols_;
    std::vector<std::uint32_t> pivots_;  // pivot row of stored column k
};

}  // namespace reglab
