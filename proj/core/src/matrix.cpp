#include "reglab/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace reglab {

void FieldSpec::validate() const {
    if (characteristic == 0) return;
    if (characteristic > (1u << 31)) {
        throw parameter_error("field characteristic exceeds 2^31");
    }
    if (!is_prime(characteristic)) {
        throw parameter_error("field characteristic " + std::to_string(characteristic) +
                              " is not prime");
    }
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; std::uint64_t(d) * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace modarith {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw parameter_error("noninvertible residue");
    if (t < 0) t += p;
    return std::uint32_t(t);
}

std::uint32_t reduce(const Rational& v, std::uint32_t p) {
    std::uint32_t num = std::uint32_t(mpz_fdiv_ui(v.get_num().get_mpz_t(), p));
    std::uint32_t den = std::uint32_t(mpz_fdiv_ui(v.get_den().get_mpz_t(), p));
    if (den == 0) throw parameter_error("denominator vanishes modulo p");
    return mul(num, inverse(den, p), p);
}

}  // namespace modarith

namespace {

MatrixStorage default_storage(FieldSpec f) {
    if (f.is_rational()) return MatrixStorage::rational;
    return f.characteristic == 2 ? MatrixStorage::bitpacked : MatrixStorage::scalar;
}

inline bool get_bit(const std::vector<std::uint64_t>& w, std::size_t wpr, std::size_t i,
                    std::size_t j) {
    return (w[i * wpr + (j >> 6)] >> (j & 63)) & 1u;
}
inline void flip_bit(std::vector<std::uint64_t>& w, std::size_t wpr, std::size_t i,
                     std::size_t j, bool v) {
    std::uint64_t& word = w[i * wpr + (j >> 6)];
    std::uint64_t mask = std::uint64_t(1) << (j & 63);
    if (v)
        word |= mask;
    else
        word &= ~mask;
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : PrimeFieldMatrix(field, rows, cols, default_storage(field)) {}

PrimeFieldMatrix::PrimeFieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                                   MatrixStorage storage)
    : field_(field), rows_(rows), cols_(cols), storage_(storage) {
    field_.validate();
    if (storage_ == MatrixStorage::bitpacked && field_.characteristic != 2) {
        throw parameter_error("bitpacked storage requires characteristic 2");
    }
    if (storage_ == MatrixStorage::rational && !field_.is_rational()) {
        throw parameter_error("rational storage requires characteristic 0");
    }
    if (storage_ == MatrixStorage::scalar && field_.is_rational()) {
        throw parameter_error("scalar storage requires positive characteristic");
    }
    switch (storage_) {
        case MatrixStorage::bitpacked:
            words_per_row_ = (cols_ + 63) / 64;
            bits_.assign(rows_ * words_per_row_, 0);
            break;
        case MatrixStorage::scalar:
            vals_.assign(rows_ * cols_, 0);
            break;
        case MatrixStorage::rational:
            rats_.assign(rows_ * cols_, Rational(0));
            break;
    }
}

PrimeFieldMatrix PrimeFieldMatrix::identity(FieldSpec field, std::size_t n) {
    PrimeFieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_entry(i, i, std::int64_t(1));
    return m;
}

Rational PrimeFieldMatrix::entry(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    switch (storage_) {
        case MatrixStorage::bitpacked:
            return Rational(get_bit(bits_, words_per_row_, i, j) ? 1 : 0);
        case MatrixStorage::scalar:
            return Rational(vals_[i * cols_ + j]);
        case MatrixStorage::rational:
            return rats_[i * cols_ + j];
    }
    return Rational(0);
}

void PrimeFieldMatrix::set_entry(std::size_t i, std::size_t j, const Rational& v) {
    assert(i < rows_ && j < cols_);
    if (storage_ == MatrixStorage::rational) {
        rats_[i * cols_ + j] = v;
        rats_[i * cols_ + j].canonicalize();
    } else {
        set_residue(i, j, modarith::reduce(v, field_.characteristic));
    }
}

void PrimeFieldMatrix::set_entry(std::size_t i, std::size_t j, std::int64_t v) {
    if (storage_ == MatrixStorage::rational) {
        rats_[i * cols_ + j] = Rational(static_cast<long>(v));
    } else {
        set_residue(i, j, modarith::reduce(v, field_.characteristic));
    }
}

std::uint32_t PrimeFieldMatrix::residue_at(std::size_t i, std::size_t j) const {
    if (storage_ == MatrixStorage::bitpacked) {
        return get_bit(bits_, words_per_row_, i, j) ? 1u : 0u;
    }
    return vals_[i * cols_ + j];
}

void PrimeFieldMatrix::set_residue(std::size_t i, std::size_t j, std::uint32_t v) {
    if (storage_ == MatrixStorage::bitpacked) {
        flip_bit(bits_, words_per_row_, i, j, v & 1u);
    } else {
        vals_[i * cols_ + j] = v % field_.characteristic;
    }
}

bool PrimeFieldMatrix::is_zero() const {
    switch (storage_) {
        case MatrixStorage::bitpacked:
            return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
        case MatrixStorage::scalar:
            return std::all_of(vals_.begin(), vals_.end(), [](auto v) { return v == 0; });
        case MatrixStorage::rational:
            return std::all_of(rats_.begin(), rats_.end(),
                               [](const Rational& v) { return sgn(v) == 0; });
    }
    return true;
}

bool PrimeFieldMatrix::operator==(const PrimeFieldMatrix& other) const {
    if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (entry(i, j) != other.entry(i, j)) return false;
    return true;
}

// --- elimination kernels ------------------------------------------------

namespace {

// Reduced row echelon form in place; returns list of pivot columns.
// full=false keeps only the below-pivot elimination needed for rank.
std::vector<std::size_t> rref_bits(std::vector<std::uint64_t>& rows, std::size_t nrows,
                                   std::size_t ncols, std::size_t wpr, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t w = c >> 6;
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (rows[i * wpr + w] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot == nrows) continue;
        if (pivot != r) {
            for (std::size_t k = 0; k < wpr; ++k)
                std::swap(rows[pivot * wpr + k], rows[r * wpr + k]);
        }
        const std::uint64_t* src = &rows[r * wpr];
        std::size_t lo = full ? 0 : r + 1;
        for (std::size_t i = lo; i < nrows; ++i) {
            if (i == r) continue;
            std::uint64_t* dst = &rows[i * wpr];
            if (dst[w] & mask) {
                for (std::size_t k = w; k < wpr; ++k) dst[k] ^= src[k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> rref_scalar(std::vector<std::uint32_t>& a, std::size_t nrows,
                                     std::size_t ncols, std::uint32_t p, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (a[i * ncols + c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == nrows) continue;
        if (pivot != r) {
            for (std::size_t k = c; k < ncols; ++k)
                std::swap(a[pivot * ncols + k], a[r * ncols + k]);
        }
        std::uint32_t inv = modarith::inverse(a[r * ncols + c], p);
        for (std::size_t k = c; k < ncols; ++k)
            a[r * ncols + k] = modarith::mul(a[r * ncols + k], inv, p);
        std::size_t lo = full ? 0 : r + 1;
        for (std::size_t i = lo; i < nrows; ++i) {
            if (i == r) continue;
            std::uint32_t f = a[i * ncols + c];
            if (f == 0) continue;
            for (std::size_t k = c; k < ncols; ++k) {
                a[i * ncols + k] = modarith::sub(
                    a[i * ncols + k], modarith::mul(f, a[r * ncols + k], p), p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> rref_rational(std::vector<Rational>& a, std::size_t nrows,
                                       std::size_t ncols, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (sgn(a[i * ncols + c]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == nrows) continue;
        if (pivot != r) {
            for (std::size_t k = c; k < ncols; ++k)
                std::swap(a[pivot * ncols + k], a[r * ncols + k]);
        }
        Rational inv = 1 / a[r * ncols + c];
        for (std::size_t k = c; k < ncols; ++k) {
            a[r * ncols + k] *= inv;
            a[r * ncols + k].canonicalize();
        }
        std::size_t lo = full ? 0 : r + 1;
        for (std::size_t i = lo; i < nrows; ++i) {
            if (i == r) continue;
            Rational f = a[i * ncols + c];
            if (sgn(f) == 0) continue;
            for (std::size_t k = c; k < ncols; ++k) {
                a[i * ncols + k] -= f * a[r * ncols + k];
                a[i * ncols + k].canonicalize();
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t PrimeFieldMatrix::rank() const {
    switch (storage_) {
        case MatrixStorage::bitpacked: {
            auto copy = bits_;
            return rref_bits(copy, rows_, cols_, words_per_row_, false).size();
        }
        case MatrixStorage::scalar: {
            auto copy = vals_;
            return rref_scalar(copy, rows_, cols_, field_.characteristic, false).size();
        }
        case MatrixStorage::rational: {
            auto copy = rats_;
            return rref_rational(copy, rows_, cols_, false).size();
        }
    }
    return 0;
}

PrimeFieldMatrix PrimeFieldMatrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    // Retrieve the fully reduced echelon form, then read kernel vectors off
    // the free columns.
    std::vector<std::uint64_t> wb;
    std::vector<std::uint32_t> ws;
    std::vector<Rational> wr;
    switch (storage_) {
        case MatrixStorage::bitpacked:
            wb = bits_;
            pivots = rref_bits(wb, rows_, cols_, words_per_row_, true);
            break;
        case MatrixStorage::scalar:
            ws = vals_;
            pivots = rref_scalar(ws, rows_, cols_, field_.characteristic, true);
            break;
        case MatrixStorage::rational:
            wr = rats_;
            pivots = rref_rational(wr, rows_, cols_, true);
            break;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::size_t kdim = cols_ - pivots.size();
    PrimeFieldMatrix K(field_, cols_, kdim, storage_);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        switch (storage_) {
            case MatrixStorage::bitpacked:
                K.set_residue(f, out, 1);
                for (std::size_t k = 0; k < pivots.size(); ++k) {
                    if (get_bit(wb, words_per_row_, k, f)) K.set_residue(pivots[k], out, 1);
                }
                break;
            case MatrixStorage::scalar: {
                std::uint32_t p = field_.characteristic;
                K.set_residue(f, out, 1);
                for (std::size_t k = 0; k < pivots.size(); ++k) {
                    std::uint32_t v = ws[k * cols_ + f];
                    if (v != 0) K.set_residue(pivots[k], out, p - v);
                }
                break;
            }
            case MatrixStorage::rational:
                K.set_entry(f, out, Rational(1));
                for (std::size_t k = 0; k < pivots.size(); ++k) {
                    const Rational& v = wr[k * cols_ + f];
                    if (sgn(v) != 0) K.set_entry(pivots[k], out, Rational(-v));
                }
                break;
        }
        ++out;
    }
    return K;
}

PrimeFieldMatrix PrimeFieldMatrix::transposed() const {
    PrimeFieldMatrix t(field_, cols_, rows_, storage_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            switch (storage_) {
                case MatrixStorage::bitpacked:
                case MatrixStorage::scalar: {
                    std::uint32_t v = residue_at(i, j);
                    if (v) t.set_residue(j, i, v);
                    break;
                }
                case MatrixStorage::rational:
                    if (sgn(rats_[i * cols_ + j]) != 0)
                        t.set_entry(j, i, rats_[i * cols_ + j]);
                    break;
            }
        }
    }
    return t;
}

PrimeFieldMatrix PrimeFieldMatrix::multiply(const PrimeFieldMatrix& rhs) const {
    if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
        throw composition_error("matrix product shape/field mismatch");
    }
    PrimeFieldMatrix out(field_, rows_, rhs.cols_, storage_);
    switch (storage_) {
        case MatrixStorage::bitpacked: {
            // row_i(out) = xor of rhs rows selected by row_i(this)
            for (std::size_t i = 0; i < rows_; ++i) {
                std::uint64_t* dst = &out.bits_[i * out.words_per_row_];
                for (std::size_t k = 0; k < cols_; ++k) {
                    if (!get_bit(bits_, words_per_row_, i, k)) continue;
                    if (rhs.storage_ == MatrixStorage::bitpacked) {
                        const std::uint64_t* src = &rhs.bits_[k * rhs.words_per_row_];
                        for (std::size_t w = 0; w < out.words_per_row_; ++w) dst[w] ^= src[w];
                    } else {
                        for (std::size_t j = 0; j < rhs.cols_; ++j) {
                            if (rhs.residue_at(k, j))
                                out.set_residue(i, j, out.residue_at(i, j) ^ 1u);
                        }
                    }
                }
            }
            break;
        }
        case MatrixStorage::scalar: {
            std::uint32_t p = field_.characteristic;
            for (std::size_t i = 0; i < rows_; ++i) {
                for (std::size_t k = 0; k < cols_; ++k) {
                    std::uint32_t a = vals_[i * cols_ + k];
                    if (a == 0) continue;
                    for (std::size_t j = 0; j < rhs.cols_; ++j) {
                        std::uint32_t b = rhs.residue_at(k, j);
                        if (b == 0) continue;
                        std::uint32_t& o = out.vals_[i * out.cols_ + j];
                        o = modarith::add(o, modarith::mul(a, b, p), p);
                    }
                }
            }
            break;
        }
        case MatrixStorage::rational: {
            for (std::size_t i = 0; i < rows_; ++i) {
                for (std::size_t k = 0; k < cols_; ++k) {
                    const Rational& a = rats_[i * cols_ + k];
                    if (sgn(a) == 0) continue;
                    for (std::size_t j = 0; j < rhs.cols_; ++j) {
                        Rational b = rhs.entry(k, j);
                        if (sgn(b) == 0) continue;
                        Rational& o = out.rats_[i * out.cols_ + j];
                        o += a * b;
                        o.canonicalize();
                    }
                }
            }
            break;
        }
    }
    return out;
}

std::optional<PrimeFieldMatrix> PrimeFieldMatrix::solve(const PrimeFieldMatrix& rhs) const {
    if (rhs.rows() != rows_ || !(field_ == rhs.field())) {
        throw composition_error("solve: shape/field mismatch");
    }
    // Gauss-Jordan on the augmented matrix [A | rhs]; bitpacked inputs are
    // widened to the scalar form.
    std::size_t n = cols_, m = rhs.cols();
    std::size_t width = n + m;
    if (field_.is_rational()) {
        std::vector<Rational> a(rows_ * width);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < n; ++j) a[i * width + j] = entry(i, j);
            for (std::size_t j = 0; j < m; ++j) a[i * width + n + j] = rhs.entry(i, j);
        }
        auto pivots = rref_rational(a, rows_, width, true);
        for (auto c : pivots)
            if (c >= n) return std::nullopt;
        PrimeFieldMatrix x(field_, n, m, storage_);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            for (std::size_t j = 0; j < m; ++j) x.set_entry(pivots[k], j, a[k * width + n + j]);
        return x;
    }
    std::uint32_t p = field_.characteristic;
    std::vector<std::uint32_t> a(rows_ * width);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * width + j] = residue_at(i, j);
        for (std::size_t j = 0; j < m; ++j) a[i * width + n + j] = rhs.residue_at(i, j);
    }
    auto pivots = rref_scalar(a, rows_, width, p, true);
    for (auto c : pivots)
        if (c >= n) return std::nullopt;
    PrimeFieldMatrix x(field_, n, m, storage_);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < m; ++j)
            if (a[k * width + n + j]) x.set_residue(pivots[k], j, a[k * width + n + j]);
    return x;
}

std::pair<PrimeFieldMatrix, std::vector<std::size_t>> PrimeFieldMatrix::row_echelon() const {
    PrimeFieldMatrix out = *this;
    std::vector<std::size_t> pivots;
    switch (storage_) {
        case MatrixStorage::bitpacked:
            pivots = rref_bits(out.bits_, rows_, cols_, words_per_row_, true);
            break;
        case MatrixStorage::scalar:
            pivots = rref_scalar(out.vals_, rows_, cols_, field_.characteristic, true);
            break;
        case MatrixStorage::rational:
            pivots = rref_rational(out.rats_, rows_, cols_, true);
            break;
    }
    return {std::move(out), std::move(pivots)};
}

// --- ColumnEchelon -------------------------------------------------------

ColumnEchelon::ColumnEchelon(FieldSpec field, std::size_t dim)
    : field_(field), dim_(dim), packed_(field.characteristic == 2) {
    if (packed_) words_ = (dim + 63) / 64;
}

bool ColumnEchelon::insert(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& col) {
    if (field_.is_rational()) {
        std::vector<std::pair<std::uint32_t, Rational>> r;
        r.reserve(col.size());
        for (auto& [i, v] : col) r.emplace_back(i, Rational(v));
        return insert(r);
    }
    std::uint32_t p = field_.characteristic;
    if (packed_) {
        std::vector<std::uint64_t> buf(words_, 0);
        for (auto& [i, v] : col) {
            if (v & 1u) buf[i >> 6] ^= std::uint64_t(1) << (i & 63);
        }
        for (std::size_t k = 0; k < bit_cols_.size(); ++k) {
            std::uint32_t piv = pivots_[k];
            if ((buf[piv >> 6] >> (piv & 63)) & 1u) {
                const auto& c = bit_cols_[k];
                for (std::size_t w = 0; w < words_; ++w) buf[w] ^= c[w];
            }
        }
        for (std::size_t w = 0; w < words_; ++w) {
            if (buf[w]) {
                std::uint32_t piv = std::uint32_t(w * 64 + __builtin_ctzll(buf[w]));
                pivots_.push_back(piv);
                bit_cols_.push_back(std::move(buf));
                return true;
            }
        }
        return false;
    }
    std::vector<std::uint32_t> buf(dim_, 0);
    for (auto& [i, v] : col) buf[i] = modarith::add(buf[i], v % p, p);
    for (std::size_t k = 0; k < mod_cols_.size(); ++k) {
        std::uint32_t f = buf[pivots_[k]];
        if (f == 0) continue;
        const auto& c = mod_cols_[k];
        for (std::size_t i = 0; i < dim_; ++i) {
            if (c[i]) buf[i] = modarith::sub(buf[i], modarith::mul(f, c[i], p), p);
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (buf[i]) {
            std::uint32_t inv = modarith::inverse(buf[i], p);
            for (std::size_t k = i; k < dim_; ++k) buf[k] = modarith::mul(buf[k], inv, p);
            pivots_.push_back(std::uint32_t(i));
            mod_cols_.push_back(std::move(buf));
            return true;
        }
    }
    return false;
}

bool ColumnEchelon::insert(const std::vector<std::pair<std::uint32_t, Rational>>& col) {
    if (!field_.is_rational()) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> r;
        r.reserve(col.size());
        for (auto& [i, v] : col)
            r.emplace_back(i, modarith::reduce(v, field_.characteristic));
        return insert(r);
    }
    std::vector<Rational> buf(dim_, Rational(0));
    for (auto& [i, v] : col) {
        buf[i] += v;
        buf[i].canonicalize();
    }
    for (std::size_t k = 0; k < rat_cols_.size(); ++k) {
        Rational f = buf[pivots_[k]];
        if (sgn(f) == 0) continue;
        const auto& c = rat_cols_[k];
        for (std::size_t i = 0; i < dim_; ++i) {
            if (sgn(c[i]) != 0) {
                buf[i] -= f * c[i];
                buf[i].canonicalize();
            }
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(buf[i]) != 0) {
            Rational inv = 1 / buf[i];
            for (std::size_t k = i; k < dim_; ++k) {
                buf[k] *= inv;
                buf[k].canonicalize();
            }
            pivots_.push_back(std::uint32_t(i));
            rat_cols_.push_back(std::move(buf));
            return true;
        }
    }
    return false;
}

}  // namespace reglab
