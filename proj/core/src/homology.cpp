#include "reglab/homology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "reglab/parallel.hpp"

namespace reglab {

std::optional<int> BettiTable::regularity() const {
    std::optional<int> reg;
    for (const auto& [jd, r] : entries) {
        int v = jd.second - jd.first;
        if (!reg || v > *reg) reg = v;
    }
    return reg;
}

RegularityReport combine_summands(const RegularityReport& a, const RegularityReport& b) {
    RegularityReport out;
    out.certified = a.certified && b.certified;
    if (a.regularity && b.regularity) {
        out.regularity = std::max(*a.regularity, *b.regularity);
        out.method = *a.regularity >= *b.regularity ? a.method : b.method;
    } else if (a.regularity) {
        out.regularity = a.regularity;
        out.method = a.method;
    } else {
        out.regularity = b.regularity;
        out.method = b.method;
    }
    if (a.indeg && b.indeg) {
        out.indeg = std::min(*a.indeg, *b.indeg);
    } else if (a.indeg) {
        out.indeg = a.indeg;
    } else {
        out.indeg = b.indeg;
    }
    return out;
}

bool ExactnessReport::all_exact() const {
    if (!is_complex) return false;
    return std::all_of(positions.begin(), positions.end(),
                       [](const Position& p) { return p.exact; });
}

// --- syzygy step -----------------------------------------------------------

namespace {

// Multiplies a degree-(d-1) vector of the free module by a variable,
// landing in the degree-d piece. Dead monomials (quotient rings) drop out.
SparseColumn multiply_by_var(const Ring& ring, const PieceBasis& from, const PieceBasis& to,
                             const SparseColumn& t, std::size_t var) {
    SparseColumn out;
    bool rational = ring.field().is_rational();
    Monomial m;
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        auto [summand, mono] = from.locate(t.rows[k]);
        m = *mono;
        ++m[var];
        if (!ring.monomial_alive(m)) continue;
        std::size_t row = to.offsets[summand] + monomial_index(to.bases[summand], m);
        out.rows.push_back(std::uint32_t(row));
        if (rational)
            out.rat_vals.push_back(t.rat_vals[k]);
        else
            out.mod_vals.push_back(t.mod_vals[k]);
    }
    return out;
}

std::vector<Polynomial> column_to_polys(const GradedFreeModule& F, const PieceBasis& pb,
                                        const SparseColumn& col) {
    std::vector<Polynomial> out(F.rank(), Polynomial(F.ring()));
    bool rational = F.ring().field().is_rational();
    for (std::size_t k = 0; k < col.rows.size(); ++k) {
        auto [summand, mono] = pb.locate(col.rows[k]);
        Rational c = rational ? col.rat_vals[k] : Rational(col.mod_vals[k]);
        out[summand].add_term(*mono, c);
    }
    return out;
}

GradedMatrix assemble_generators(const GradedFreeModule& codomain,
                                 const std::vector<int>& degrees,
                                 const std::vector<std::vector<Polynomial>>& columns) {
    GradedFreeModule domain(codomain.ring(), degrees);
    GradedMatrix out = GradedMatrix::zero(codomain, domain);
    for (std::size_t g = 0; g < columns.size(); ++g) {
        for (std::size_t i = 0; i < codomain.rank(); ++i) {
            if (!columns[g][i].is_zero()) out.set_entry(i, g, columns[g][i]);
        }
    }
    return out;
}

}  // namespace

GradedMatrix kernel_generators(const GradedMatrix& f, int degree_cap) {
    const GradedFreeModule& F = f.domain();
    const Ring& ring = f.ring();
    FieldSpec field = ring.field();

    std::vector<int> gen_degrees;
    std::vector<std::vector<Polynomial>> gen_columns;

    if (F.rank() > 0) {
        std::vector<SparseColumn> span;
        PieceBasis pb_prev;
        for (int d = F.min_twist(); d <= degree_cap; ++d) {
            PieceBasis pb = piece_basis(F, d);
            std::vector<SparseColumn> candidates;
            for (const SparseColumn& t : span) {
                for (std::size_t v = 0; v < ring.var_count(); ++v) {
                    SparseColumn c = multiply_by_var(ring, pb_prev, pb, t, v);
                    if (!c.empty()) candidates.push_back(std::move(c));
                }
            }
            const std::size_t n_span = candidates.size();
            for (SparseColumn& k : kernel_in_degree(f, d)) candidates.push_back(std::move(k));

            std::vector<SparseColumn> span_next;
            for (std::size_t idx : greedy_independent(field, pb.dim, candidates)) {
                if (idx >= n_span) {
                    gen_degrees.push_back(d);
                    gen_columns.push_back(column_to_polys(F, pb, candidates[idx]));
                }
                span_next.push_back(std::move(candidates[idx]));
            }
            span = std::move(span_next);
            pb_prev = std::move(pb);
        }
    }
    return assemble_generators(F, gen_degrees, gen_columns);
}

GradedMatrix image_generators(const GradedMatrix& f) {
    const GradedFreeModule& F0 = f.codomain();
    const Ring& ring = f.ring();
    FieldSpec field = ring.field();
    std::uint32_t p = field.characteristic;

    std::vector<int> gen_degrees;
    std::vector<std::vector<Polynomial>> gen_columns;

    if (f.cols() > 0 && F0.rank() > 0) {
        BasisCache cache(ring);
        std::vector<SparseColumn> span;
        PieceBasis pb_prev;
        int lo = f.domain().min_twist();
        int hi = f.domain().max_twist();
        for (int d = lo; d <= hi; ++d) {
            PieceBasis pb = piece_basis(F0, d);
            std::vector<SparseColumn> candidates;
            for (const SparseColumn& t : span) {
                for (std::size_t v = 0; v < ring.var_count(); ++v) {
                    SparseColumn c = multiply_by_var(ring, pb_prev, pb, t, v);
                    if (!c.empty()) candidates.push_back(std::move(c));
                }
            }
            const std::size_t n_span = candidates.size();
            std::vector<std::size_t> col_of_candidate;
            for (std::size_t j = 0; j < f.cols(); ++j) {
                if (f.domain().twists()[j] != d) continue;
                SparseColumn c;
                for (std::size_t i = 0; i < F0.rank(); ++i) {
                    const Polynomial& e = f.entry(i, j);
                    if (e.is_zero()) continue;
                    const auto& basis = pb.bases[i];
                    for (const auto& [mono, coeff] : e.terms()) {
                        c.rows.push_back(
                            std::uint32_t(pb.offsets[i] + monomial_index(basis, mono)));
                        if (p == 0)
                            c.rat_vals.push_back(coeff);
                        else
                            c.mod_vals.push_back(modarith::reduce(coeff, p));
                    }
                }
                if (c.empty()) continue;  // zero column generates nothing
                candidates.push_back(std::move(c));
                col_of_candidate.push_back(j);
            }
            std::vector<SparseColumn> span_next;
            for (std::size_t idx : greedy_independent(field, pb.dim, candidates)) {
                if (idx >= n_span) {
                    std::size_t j = col_of_candidate[idx - n_span];
                    gen_degrees.push_back(d);
                    std::vector<Polynomial> col(F0.rank(), Polynomial(ring));
                    for (std::size_t i = 0; i < F0.rank(); ++i) col[i] = f.entry(i, j);
                    gen_columns.push_back(std::move(col));
                }
                span_next.push_back(std::move(candidates[idx]));
            }
            span = std::move(span_next);
            pb_prev = std::move(pb);
        }
    }
    return assemble_generators(F0, gen_degrees, gen_columns);
}

GradedMatrix minimalize_presentation(const GradedMatrix& f) {
    std::vector<int> row_tw = f.codomain().twists();
    std::vector<int> col_tw = f.domain().twists();
    std::size_t rows = f.rows(), cols = f.cols();
    std::vector<std::vector<Polynomial>> e(rows, std::vector<Polynomial>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) e[i][j] = f.entry(i, j);

    for (;;) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = 0; i < rows && pi == rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (!e[i][j].is_zero() && e[i][j].degree() == 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rows) break;
        Rational c = e[pi][pj].terms().begin()->second;
        Rational inv = 1 / c;
        for (std::size_t i = 0; i < rows; ++i) e[i][pj] = e[i][pj].scaled(inv);
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == pj || e[pi][j].is_zero()) continue;
            Polynomial q = e[pi][j];
            for (std::size_t i = 0; i < rows; ++i) e[i][j] = e[i][j] - q * e[i][pj];
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pi || e[i][pj].is_zero()) continue;
            Polynomial r = e[i][pj];
            for (std::size_t j = 0; j < cols; ++j) e[i][j] = e[i][j] - r * e[pi][j];
        }
        e.erase(e.begin() + pi);
        row_tw.erase(row_tw.begin() + pi);
        for (auto& row : e) row.erase(row.begin() + pj);
        col_tw.erase(col_tw.begin() + pj);
        --rows;
        --cols;
    }

    std::vector<Polynomial> flat;
    flat.reserve(rows * cols);
    for (auto& row : e)
        for (auto& q : row) flat.push_back(std::move(q));
    return GradedMatrix(GradedFreeModule(f.ring(), row_tw),
                        GradedFreeModule(f.ring(), col_tw), std::move(flat));
}

// --- minimal resolution ------------------------------------------------------

namespace {

// Completion margin: a syzygy step is trusted as exhaustive only when
// degree_cap covers its generators plus (#variables)·(max entry degree of
// the module's presentation).
bool margin_ok(const GradedMatrix& g, int margin, int degree_cap) {
    if (g.domain().rank() == 0) return true;
    return g.domain().max_twist() + margin <= degree_cap;
}

void add_twists(BettiTable& table, int j, const std::vector<int>& twists) {
    for (int a : twists) table.add(j, a, 1);
}

}  // namespace

Resolution minimal_resolution(const PresentedModule& module, int homological_cap,
                              int degree_cap) {
    if (homological_cap < 1) throw parameter_error("homological_cap must be >= 1");
    Resolution res;
    res.betti.degree_cap = degree_cap;
    res.betti.homological_cap = homological_cap;

    bool coker = module.kind == PresentedModule::Kind::cokernel;
    bool ended = false;
    std::size_t max_diffs;

    if (coker) {
        GradedMatrix d1 = image_generators(minimalize_presentation(module.map));
        add_twists(res.betti, 0, d1.codomain().twists());
        add_twists(res.betti, 1, d1.domain().twists());
        if (d1.cols() == 0) ended = true;
        res.differentials.push_back(std::move(d1));
        max_diffs = std::size_t(homological_cap);
    } else {
        GradedMatrix s = kernel_generators(module.map, degree_cap);
        add_twists(res.betti, 0, s.domain().twists());
        if (s.cols() == 0) ended = true;
        res.differentials.push_back(std::move(s));
        max_diffs = std::size_t(homological_cap) + 1;
    }

    while (!ended && res.differentials.size() < max_diffs) {
        GradedMatrix next = kernel_generators(res.differentials.back(), degree_cap);
        if (next.cols() == 0) {
            ended = true;
            break;
        }
        int j = coker ? int(res.differentials.size()) + 1 : int(res.differentials.size());
        add_twists(res.betti, j, next.domain().twists());
        res.differentials.push_back(std::move(next));
    }

    int margin = int(module.ring().var_count()) *
                 std::max(1, module.map.max_entry_degree());
    bool margins = coker ? true : margin_ok(module.map, margin, degree_cap);
    for (const auto& d : res.differentials)
        margins = margins && margin_ok(d, margin, degree_cap);
    res.complete = ended && margins;
    res.betti.complete = res.complete;
    return res;
}

// --- module slices -----------------------------------------------------------

ModuleSlices::ModuleSlices(PresentedModule module, int min_degree, int max_degree)
    : module_(std::move(module)), lo_(min_degree), hi_(max_degree) {
    if (hi_ < lo_) throw parameter_error("ModuleSlices: empty degree range");
    coker_ = module_.kind == PresentedModule::Kind::cokernel;
    field_ = module_.ring().field();
    const GradedFreeModule& amb =
        coker_ ? module_.map.codomain() : module_.map.domain();
    for (int d = lo_; d <= hi_; ++d) {
        amb_.push_back(piece_basis(amb, d));
        PrimeFieldMatrix E = evaluate_in_degree(module_.map, d);
        if (coker_) {
            auto [rref, piv] = E.transposed().row_echelon();
            std::vector<std::size_t> complement;
            std::size_t next = 0;
            for (std::size_t i = 0; i < amb_.back().dim; ++i) {
                if (next < piv.size() && piv[next] == i) {
                    ++next;
                } else {
                    complement.push_back(i);
                }
            }
            ech_.push_back(std::move(rref));
            pivots_.push_back(std::move(piv));
            quotient_.push_back(std::move(complement));
        } else {
            ech_.push_back(E.kernel_basis());
            pivots_.emplace_back();
            quotient_.emplace_back();
        }
    }
}

std::size_t ModuleSlices::dim(int d) const {
    if (d < lo_ || d > hi_) return 0;
    return coker_ ? quotient_[idx(d)].size() : ech_[idx(d)].cols();
}

PrimeFieldMatrix ModuleSlices::var_multiplication(std::size_t var, int d) const {
    if (d < lo_ || d + 1 > hi_) throw parameter_error("var_multiplication out of range");
    const Ring& ring = module_.ring();
    PrimeFieldMatrix out(field_, dim(d + 1), dim(d));
    if (out.rows() == 0 || out.cols() == 0) return out;

    const PieceBasis& from = amb_[idx(d)];
    const PieceBasis& to = amb_[idx(d + 1)];

    if (coker_) {
        const auto& piv_to = pivots_[idx(d + 1)];
        const auto& quo_to = quotient_[idx(d + 1)];
        const PrimeFieldMatrix& rref = ech_[idx(d + 1)];
        for (std::size_t c = 0; c < quotient_[idx(d)].size(); ++c) {
            auto [summand, mono] = from.locate(quotient_[idx(d)][c]);
            Monomial m = *mono;
            ++m[var];
            if (!ring.monomial_alive(m)) continue;
            std::size_t target = to.offsets[summand] + monomial_index(to.bases[summand], m);
            auto pit = std::lower_bound(piv_to.begin(), piv_to.end(), target);
            if (pit != piv_to.end() && *pit == target) {
                // pivot coordinate: subtract the echelon row of im(f)
                std::size_t k = std::size_t(pit - piv_to.begin());
                for (std::size_t q = 0; q < quo_to.size(); ++q) {
                    Rational v = rref.entry(k, quo_to[q]);
                    if (sgn(v) != 0) out.set_entry(q, c, Rational(-v));
                }
            } else {
                auto qit = std::lower_bound(quo_to.begin(), quo_to.end(), target);
                assert(qit != quo_to.end() && *qit == target);
                out.set_entry(std::size_t(qit - quo_to.begin()), c, std::int64_t(1));
            }
        }
        return out;
    }

    const PrimeFieldMatrix& K_from = ech_[idx(d)];
    const PrimeFieldMatrix& K_to = ech_[idx(d + 1)];
    PrimeFieldMatrix V(field_, to.dim, K_from.cols());
    for (std::size_t c = 0; c < K_from.cols(); ++c) {
        for (std::size_t i = 0; i < K_from.rows(); ++i) {
            Rational v = K_from.entry(i, c);
            if (sgn(v) == 0) continue;
            auto [summand, mono] = from.locate(i);
            Monomial m = *mono;
            ++m[var];
            if (!ring.monomial_alive(m)) continue;
            std::size_t target = to.offsets[summand] + monomial_index(to.bases[summand], m);
            V.set_entry(target, c, V.entry(target, c) + v);
        }
    }
    auto solved = K_to.solve(V);
    if (!solved) throw error("kernel slice multiplication left the kernel (internal)");
    return *solved;
}

PrimeFieldMatrix ModuleSlices::monomial_multiplication(const Monomial& mono, int d) const {
    PrimeFieldMatrix cur = PrimeFieldMatrix::identity(field_, dim(d));
    int at = d;
    for (std::size_t v = 0; v < mono.size(); ++v) {
        for (int k = 0; k < mono[v]; ++k) {
            cur = var_multiplication(v, at).multiply(cur);
            ++at;
        }
    }
    return cur;
}

// --- Koszul homology oracle ---------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t(0));
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Koszul differential C_j,d -> C_{j-1},d with coefficients in the module.
PrimeFieldMatrix koszul_differential(const ModuleSlices& slices, std::size_t vars,
                                     std::size_t j, int d) {
    FieldSpec field = slices.field();
    auto subsets_from = combinations(vars, j);
    auto subsets_to = combinations(vars, j - 1);
    std::map<std::vector<std::size_t>, std::size_t> to_index;
    for (std::size_t s = 0; s < subsets_to.size(); ++s) to_index[subsets_to[s]] = s;

    std::size_t src_dim = slices.dim(d - int(j));
    std::size_t dst_dim = slices.dim(d - int(j) + 1);
    PrimeFieldMatrix out(field, subsets_to.size() * dst_dim, subsets_from.size() * src_dim);
    if (src_dim == 0 || dst_dim == 0) return out;

    for (std::size_t s = 0; s < subsets_from.size(); ++s) {
        const auto& S = subsets_from[s];
        for (std::size_t t = 0; t < S.size(); ++t) {
            std::vector<std::size_t> T = S;
            T.erase(T.begin() + t);
            std::size_t s2 = to_index.at(T);
            PrimeFieldMatrix block = slices.var_multiplication(S[t], d - int(j));
            bool negate = (t % 2) == 1;
            for (std::size_t r = 0; r < block.rows(); ++r) {
                for (std::size_t c = 0; c < block.cols(); ++c) {
                    Rational v = block.entry(r, c);
                    if (sgn(v) == 0) continue;
                    if (negate) v = -v;
                    std::size_t rr = s2 * dst_dim + r;
                    std::size_t cc = s * src_dim + c;
                    out.set_entry(rr, cc, out.entry(rr, cc) + v);
                }
            }
        }
    }
    return out;
}

}  // namespace

std::map<int, std::size_t> koszul_betti(const PresentedModule& module, int j,
                                        int degree_cap) {
    const Ring& ring = module.ring();
    if (!ring.is_polynomial()) {
        throw unsupported_ring_error("koszul_betti requires a polynomial ring");
    }
    if (j < 0) throw parameter_error("homological index must be >= 0");
    std::map<int, std::size_t> out;
    std::size_t vars = ring.var_count();
    if (std::size_t(j) > vars) return out;

    const GradedFreeModule& amb = module.kind == PresentedModule::Kind::cokernel
                                      ? module.map.codomain()
                                      : module.map.domain();
    if (amb.rank() == 0) return out;
    int lo = amb.min_twist();
    if (degree_cap < lo + j) return out;
    ModuleSlices slices(module, lo, degree_cap);

    std::size_t binom_j = combinations(vars, std::size_t(j)).size();
    for (int d = lo + j; d <= degree_cap; ++d) {
        std::size_t dim = binom_j * slices.dim(d - j);
        if (dim == 0) continue;
        std::size_t r1 = 0, r2 = 0;
        if (j >= 1) r1 = koszul_differential(slices, vars, std::size_t(j), d).rank();
        if (std::size_t(j) < vars && slices.dim(d - j - 1) > 0) {
            r2 = koszul_differential(slices, vars, std::size_t(j) + 1, d).rank();
        }
        std::size_t betti = dim - r1 - r2;
        if (betti > 0) out[d] = betti;
    }
    return out;
}

// --- regularity ---------------------------------------------------------------

RegularityReport regularity(const PresentedModule& module, int degree_cap) {
    const Ring& ring = module.ring();
    if (!ring.is_polynomial()) {
        throw unsupported_ring_error(
            "regularity is computed over the ambient polynomial ring only");
    }
    RegularityReport rep;
    bool coker = module.kind == PresentedModule::Kind::cokernel;

    if (coker) {
        const GradedFreeModule& F0 = module.map.codomain();
        if (F0.rank() == 0) {
            rep.certified = true;
            rep.method = RegularityReport::Method::artinian_top_degree;
            return rep;  // zero module: reg = -inf, indeg = +inf
        }
        int lo = F0.min_twist();
        int maxgen = F0.max_twist();
        std::optional<int> first, last;
        for (int d = lo; d <= degree_cap; ++d) {
            std::size_t h = hilbert_function(module, d);
            if (h > 0) {
                if (!first) first = d;
                last = d;
            } else if (d >= maxgen) {
                // generated in degrees <= maxgen, so zero from here on
                rep.regularity = last;
                rep.indeg = first;
                rep.certified = true;
                rep.method = RegularityReport::Method::artinian_top_degree;
                return rep;
            }
        }
        // not Artinian within the cap: fall through to the Betti route
    }

    Resolution res = minimal_resolution(module, int(ring.var_count()) + 1, degree_cap);
    rep.regularity = res.betti.regularity();
    rep.certified = res.complete;
    rep.method = RegularityReport::Method::betti;
    std::optional<int> indeg;
    for (const auto& [jd, r] : res.betti.entries) {
        if (jd.first != 0) continue;
        if (!indeg || jd.second < *indeg) indeg = jd.second;
    }
    rep.indeg = indeg;
    return rep;
}

// --- exactness ----------------------------------------------------------------

ExactnessReport check_complex_exactness(const std::vector<GradedMatrix>& maps,
                                        int degree_cap, bool leading_zero, unsigned jobs) {
    ExactnessReport report;
    if (maps.empty()) return report;

    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        if (!compose(maps[i], maps[i + 1]).is_zero()) {
            report.is_complex = false;
            report.failing_composition = i;
            return report;
        }
    }

    // rank of every (map, degree) pair that some position needs
    struct Task {
        std::size_t map;
        int degree;
    };
    std::vector<Task> tasks;
    auto degrees_of = [&](std::size_t pos) {
        const GradedFreeModule& F = maps[pos - 1].domain();
        return std::pair<int, int>{F.min_twist(), degree_cap};
    };
    std::map<std::pair<std::size_t, int>, std::size_t> ranks;
    std::size_t top = leading_zero ? maps.size() : maps.size() - 1;
    for (std::size_t pos = 1; pos <= top; ++pos) {
        auto [lo, hi] = degrees_of(pos);
        for (int d = lo; d <= hi; ++d) {
            ranks.try_emplace({pos - 1, d}, 0);
            if (pos < maps.size()) ranks.try_emplace({pos, d}, 0);
        }
    }
    for (const auto& [key, value] : ranks) tasks.push_back({key.first, key.second});
    std::vector<std::size_t> results(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        results[i] = rank_in_degree(maps[tasks[i].map], tasks[i].degree);
    });
    for (std::size_t i = 0; i < tasks.size(); ++i)
        ranks[{tasks[i].map, tasks[i].degree}] = results[i];

    for (std::size_t pos = 1; pos <= top; ++pos) {
        ExactnessReport::Position p;
        p.index = pos;
        const GradedFreeModule& F = maps[pos - 1].domain();
        auto [lo, hi] = degrees_of(pos);
        for (int d = lo; d <= hi; ++d) {
            std::size_t dim = F.dimension_in_degree(d);
            std::size_t ker = dim - ranks[{pos - 1, d}];
            std::size_t im = pos < maps.size() ? ranks[{pos, d}] : 0;
            if (ker != im) {
                p.exact = false;
                p.defects.emplace_back(d, ker, im);
            }
        }
        report.positions.push_back(std::move(p));
    }
    return report;
}

}  // namespace reglab
