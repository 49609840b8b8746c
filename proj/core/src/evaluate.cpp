#include "reglab/evaluate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace reglab {

std::pair<std::size_t, const Monomial*> PieceBasis::locate(std::size_t index) const {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), index);
    std::size_t summand = std::size_t(it - offsets.begin()) - 1;
    return {summand, &bases[summand][index - offsets[summand]]};
}

PieceBasis piece_basis(const GradedFreeModule& module, int degree) {
    PieceBasis pb;
    pb.degree = degree;
    pb.offsets.reserve(module.rank());
    pb.bases.reserve(module.rank());
    std::size_t off = 0;
    for (int a : module.twists()) {
        pb.offsets.push_back(off);
        pb.bases.push_back(monomial_basis(module.ring(), degree - a));
        off += pb.bases.back().size();
    }
    pb.dim = off;
    return pb;
}

const std::vector<Monomial>& BasisCache::basis(int degree) {
    auto it = cache_.find(degree);
    if (it == cache_.end()) {
        it = cache_.emplace(degree, monomial_basis(ring_, degree)).first;
    }
    return it->second;
}

SparsePiece evaluate_sparse(const GradedMatrix& f, int degree) {
    const Ring& ring = f.ring();
    std::uint32_t p = ring.field().characteristic;
    BasisCache cache(ring);

    SparsePiece piece;
    piece.field = ring.field();

    const auto& dom_tw = f.domain().twists();
    const auto& cod_tw = f.codomain().twists();

    std::vector<std::size_t> dom_off(dom_tw.size()), cod_off(cod_tw.size());
    std::size_t off = 0;
    for (std::size_t j = 0; j < dom_tw.size(); ++j) {
        dom_off[j] = off;
        off += cache.basis(degree - dom_tw[j]).size();
    }
    piece.cols = off;
    off = 0;
    for (std::size_t i = 0; i < cod_tw.size(); ++i) {
        cod_off[i] = off;
        off += cache.basis(degree - cod_tw[i]).size();
    }
    piece.rows = off;

    Monomial prod(ring.var_count());
    for (std::size_t j = 0; j < dom_tw.size(); ++j) {
        const auto& dom_basis = cache.basis(degree - dom_tw[j]);
        if (dom_basis.empty()) continue;
        for (std::size_t i = 0; i < cod_tw.size(); ++i) {
            const Polynomial& e = f.entry(i, j);
            if (e.is_zero()) continue;
            const auto& cod_basis = cache.basis(degree - cod_tw[i]);
            for (const auto& [mono, coeff] : e.terms()) {
                std::uint32_t residue = 0;
                if (p != 0) {
                    residue = modarith::reduce(coeff, p);
                    if (residue == 0) continue;
                }
                for (std::size_t t = 0; t < dom_basis.size(); ++t) {
                    const Monomial& mu = dom_basis[t];
                    for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = mono[v] + mu[v];
                    if (!ring.monomial_alive(prod)) continue;
                    std::size_t r = cod_off[i] + monomial_index(cod_basis, prod);
                    piece.er.push_back(std::uint32_t(r));
                    piece.ec.push_back(std::uint32_t(dom_off[j] + t));
                    if (p != 0) {
                        piece.mod_vals.push_back(residue);
                    } else {
                        piece.rat_vals.push_back(coeff);
                    }
                }
            }
        }
    }
    return piece;
}

PrimeFieldMatrix evaluate_in_degree(const GradedMatrix& f, int degree) {
    SparsePiece piece = evaluate_sparse(f, degree);
    PrimeFieldMatrix m(piece.field, piece.rows, piece.cols);
    std::uint32_t p = piece.field.characteristic;
    for (std::size_t k = 0; k < piece.er.size(); ++k) {
        std::size_t i = piece.er[k], j = piece.ec[k];
        if (p == 0) {
            m.set_entry(i, j, m.entry(i, j) + piece.rat_vals[k]);
        } else if (p == 2) {
            m.set_residue(i, j, m.residue_at(i, j) ^ (piece.mod_vals[k] & 1u));
        } else {
            m.set_residue(i, j, modarith::add(m.residue_at(i, j), piece.mod_vals[k], p));
        }
    }
    return m;
}

// --- connected components --------------------------------------------------

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t(0));
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

struct PieceComponents {
    // per component: sorted local row / col index lists and entry ids
    std::vector<std::vector<std::uint32_t>> comp_rows;
    std::vector<std::vector<std::uint32_t>> comp_cols;
    std::vector<std::vector<std::size_t>> comp_entries;
    std::vector<std::uint32_t> untouched_cols;  // no entries at all: free kernel directions
};

// Nodes: columns [0, cols), rows [cols, cols+rows). Components ordered by
// their smallest column index; columns with no entries are returned
// separately.
PieceComponents split_components(const SparsePiece& piece) {
    UnionFind uf(piece.cols + piece.rows);
    for (std::size_t k = 0; k < piece.er.size(); ++k) {
        uf.unite(piece.ec[k], piece.cols + piece.er[k]);
    }
    std::vector<bool> col_touched(piece.cols, false);
    for (std::size_t k = 0; k < piece.er.size(); ++k) col_touched[piece.ec[k]] = true;

    std::map<std::size_t, std::size_t> root_to_comp;  // ordered by root = min node = min col
    PieceComponents out;
    for (std::uint32_t c = 0; c < piece.cols; ++c) {
        if (!col_touched[c]) {
            out.untouched_cols.push_back(c);
            continue;
        }
        std::size_t root = uf.find(c);
        auto [it, inserted] = root_to_comp.try_emplace(root, root_to_comp.size());
        if (inserted) {
            out.comp_rows.emplace_back();
            out.comp_cols.emplace_back();
            out.comp_entries.emplace_back();
        }
        out.comp_cols[it->second].push_back(c);
    }
    for (std::uint32_t r = 0; r < piece.rows; ++r) {
        auto it = root_to_comp.find(uf.find(piece.cols + r));
        if (it != root_to_comp.end()) out.comp_rows[it->second].push_back(r);
    }
    for (std::size_t k = 0; k < piece.er.size(); ++k) {
        out.comp_entries[root_to_comp[uf.find(piece.ec[k])]].push_back(k);
    }
    // Re-key components by smallest column index for a stable order.
    std::vector<std::size_t> order(out.comp_cols.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.comp_cols[a].front() < out.comp_cols[b].front();
    });
    PieceComponents sorted;
    sorted.untouched_cols = std::move(out.untouched_cols);
    for (std::size_t idx : order) {
        sorted.comp_rows.push_back(std::move(out.comp_rows[idx]));
        sorted.comp_cols.push_back(std::move(out.comp_cols[idx]));
        sorted.comp_entries.push_back(std::move(out.comp_entries[idx]));
    }
    return sorted;
}

PrimeFieldMatrix dense_block(const SparsePiece& piece, const std::vector<std::uint32_t>& rows,
                             const std::vector<std::uint32_t>& cols,
                             const std::vector<std::size_t>& entries) {
    PrimeFieldMatrix m(piece.field, rows.size(), cols.size());
    std::uint32_t p = piece.field.characteristic;
    auto local = [](const std::vector<std::uint32_t>& v, std::uint32_t x) {
        return std::size_t(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    for (std::size_t k : entries) {
        std::size_t i = local(rows, piece.er[k]);
        std::size_t j = local(cols, piece.ec[k]);
        if (p == 0) {
            m.set_entry(i, j, m.entry(i, j) + piece.rat_vals[k]);
        } else if (p == 2) {
            m.set_residue(i, j, m.residue_at(i, j) ^ (piece.mod_vals[k] & 1u));
        } else {
            m.set_residue(i, j, modarith::add(m.residue_at(i, j), piece.mod_vals[k], p));
        }
    }
    return m;
}

}  // namespace

std::size_t sparse_rank(const SparsePiece& piece) {
    if (piece.er.empty()) return 0;
    PieceComponents comps = split_components(piece);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < comps.comp_cols.size(); ++c) {
        rank += dense_block(piece, comps.comp_rows[c], comps.comp_cols[c],
                            comps.comp_entries[c])
                    .rank();
    }
    return rank;
}

std::size_t rank_in_degree(const GradedMatrix& f, int degree) {
    return sparse_rank(evaluate_sparse(f, degree));
}

std::vector<SparseColumn> sparse_kernel(const SparsePiece& piece) {
    std::vector<SparseColumn> out;
    PieceComponents comps = split_components(piece);
    bool rational = piece.field.is_rational();

    // merge free directions and component kernels ordered by least column
    std::size_t next_free = 0;
    std::size_t next_comp = 0;
    auto free_head = [&]() -> std::uint32_t {
        return next_free < comps.untouched_cols.size() ? comps.untouched_cols[next_free]
                                                       : UINT32_MAX;
    };
    auto comp_head = [&]() -> std::uint32_t {
        return next_comp < comps.comp_cols.size() ? comps.comp_cols[next_comp].front()
                                                  : UINT32_MAX;
    };
    while (next_free < comps.untouched_cols.size() || next_comp < comps.comp_cols.size()) {
        if (free_head() < comp_head()) {
            SparseColumn col;
            col.rows.push_back(comps.untouched_cols[next_free]);
            if (rational)
                col.rat_vals.emplace_back(1);
            else
                col.mod_vals.push_back(1);
            out.push_back(std::move(col));
            ++next_free;
        } else {
            std::size_t c = next_comp++;
            PrimeFieldMatrix block = dense_block(piece, comps.comp_rows[c], comps.comp_cols[c],
                                                 comps.comp_entries[c]);
            PrimeFieldMatrix K = block.kernel_basis();
            for (std::size_t k = 0; k < K.cols(); ++k) {
                SparseColumn col;
                for (std::size_t i = 0; i < K.rows(); ++i) {
                    if (rational) {
                        Rational v = K.entry(i, k);
                        if (sgn(v) == 0) continue;
                        col.rows.push_back(comps.comp_cols[c][i]);
                        col.rat_vals.push_back(std::move(v));
                    } else {
                        std::uint32_t v = K.residue_at(i, k);
                        if (v == 0) continue;
                        col.rows.push_back(comps.comp_cols[c][i]);
                        col.mod_vals.push_back(v);
                    }
                }
                out.push_back(std::move(col));
            }
        }
    }
    return out;
}

std::vector<SparseColumn> kernel_in_degree(const GradedMatrix& f, int degree) {
    return sparse_kernel(evaluate_sparse(f, degree));
}

std::vector<std::size_t> greedy_independent(FieldSpec field, std::size_t dim,
                                            const std::vector<SparseColumn>& candidates) {
    std::vector<std::size_t> accepted;
    if (candidates.empty()) return accepted;
    UnionFind uf(dim);
    for (const auto& col : candidates) {
        for (std::size_t k = 1; k < col.rows.size(); ++k) uf.unite(col.rows[0], col.rows[k]);
    }
    // group candidates by component, keeping the global order inside groups
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (candidates[idx].empty()) continue;
        groups[uf.find(candidates[idx].rows[0])].push_back(idx);
    }
    bool rational = field.is_rational();
    for (auto& [root, members] : groups) {
        // local coordinates: union of supports, sorted
        std::vector<std::uint32_t> coords;
        for (std::size_t idx : members)
            coords.insert(coords.end(), candidates[idx].rows.begin(),
                          candidates[idx].rows.end());
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        auto local = [&](std::uint32_t x) {
            return std::uint32_t(std::lower_bound(coords.begin(), coords.end(), x) -
                                 coords.begin());
        };
        ColumnEchelon ech(field, coords.size());
        for (std::size_t idx : members) {
            const SparseColumn& col = candidates[idx];
            bool kept;
            if (rational) {
                std::vector<std::pair<std::uint32_t, Rational>> v;
                v.reserve(col.rows.size());
                for (std::size_t k = 0; k < col.rows.size(); ++k)
                    v.emplace_back(local(col.rows[k]), col.rat_vals[k]);
                kept = ech.insert(v);
            } else {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> v;
                v.reserve(col.rows.size());
                for (std::size_t k = 0; k < col.rows.size(); ++k)
                    v.emplace_back(local(col.rows[k]), col.mod_vals[k]);
                kept = ech.insert(v);
            }
            if (kept) accepted.push_back(idx);
        }
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

std::size_t hilbert_function(const PresentedModule& module, int degree) {
    SparsePiece piece = evaluate_sparse(module.map, degree);
    std::size_t r = sparse_rank(piece);
    if (module.kind == PresentedModule::Kind::cokernel) {
        return piece.rows - r;
    }
    return piece.cols - r;
}

}  // namespace reglab
