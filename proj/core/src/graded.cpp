#include "reglab/graded.hpp"

#include <algorithm>

namespace reglab {

int GradedFreeModule::min_twist() const {
    if (twists_.empty()) return 0;
    return *std::min_element(twists_.begin(), twists_.end());
}

int GradedFreeModule::max_twist() const {
    if (twists_.empty()) return 0;
    return *std::max_element(twists_.begin(), twists_.end());
}

std::size_t GradedFreeModule::dimension_in_degree(int degree) const {
    std::size_t dim = 0;
    for (int a : twists_) dim += monomial_count(ring_, degree - a);
    return dim;
}

GradedMatrix::GradedMatrix(GradedFreeModule codomain, GradedFreeModule domain,
                           std::vector<Polynomial> entries_row_major)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      entries_(std::move(entries_row_major)) {
    if (!domain_.ring().same_as(codomain_.ring())) {
        throw parameter_error("domain and codomain live over different rings");
    }
    if (entries_.size() != rows() * cols()) {
        throw parameter_error("entry grid size does not match module ranks");
    }
    check_homogeneous();
}

GradedMatrix GradedMatrix::zero(GradedFreeModule codomain, GradedFreeModule domain) {
    std::vector<Polynomial> entries(codomain.rank() * domain.rank(),
                                    Polynomial(codomain.ring()));
    return GradedMatrix(std::move(codomain), std::move(domain), std::move(entries));
}

GradedMatrix GradedMatrix::identity(const GradedFreeModule& module) {
    GradedMatrix m = zero(module, module);
    for (std::size_t i = 0; i < module.rank(); ++i) {
        m.set_entry(i, i, Polynomial::constant(module.ring(), Rational(1)));
    }
    return m;
}

void GradedMatrix::set_entry(std::size_t i, std::size_t j, Polynomial p) {
    if (!p.is_zero()) {
        if (!p.is_homogeneous() ||
            p.degree() != domain_.twists()[j] - codomain_.twists()[i]) {
            throw homogeneity_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not homogeneous of degree " +
                                    std::to_string(domain_.twists()[j] -
                                                   codomain_.twists()[i]));
        }
    }
    entries_[i * cols() + j] = std::move(p);
}

void GradedMatrix::check_homogeneous() const {
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            const Polynomial& p = entry(i, j);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() ||
                p.degree() != domain_.twists()[j] - codomain_.twists()[i]) {
                throw homogeneity_error(
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") violates homogeneity: expected degree " +
                    std::to_string(domain_.twists()[j] - codomain_.twists()[i]));
            }
        }
    }
}

bool GradedMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

bool GradedMatrix::entries_equal(const GradedMatrix& other) const {
    if (rows() != other.rows() || cols() != other.cols()) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!(entries_[k] == other.entries_[k])) return false;
    return true;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& rhs) const {
    if (!domain_.same_as(rhs.domain_) || !codomain_.same_as(rhs.codomain_)) {
        throw composition_error("matrix sum shape mismatch");
    }
    std::vector<Polynomial> sum;
    sum.reserve(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) sum.push_back(entries_[k] + rhs.entries_[k]);
    return GradedMatrix(codomain_, domain_, std::move(sum));
}

GradedMatrix GradedMatrix::twist_shifted(int s) const {
    auto shift = [s](std::vector<int> t) {
        for (int& a : t) a += s;
        return t;
    };
    return GradedMatrix(GradedFreeModule(codomain_.ring(), shift(codomain_.twists())),
                        GradedFreeModule(domain_.ring(), shift(domain_.twists())), entries_);
}

int GradedMatrix::max_entry_degree() const {
    int d = 0;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
}

GradedMatrix compose(const GradedMatrix& f, const GradedMatrix& g) {
    if (!f.domain().same_as(g.codomain())) {
        throw composition_error("compose: domain(f) must equal codomain(g)");
    }
    GradedMatrix out = GradedMatrix::zero(f.codomain(), g.domain());
    // sparse triple loop: skip zero polynomials
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t k = 0; k < f.cols(); ++k) {
            const Polynomial& a = f.entry(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < g.cols(); ++j) {
                const Polynomial& b = g.entry(k, j);
                if (b.is_zero()) continue;
                out.set_entry(i, j, out.entry(i, j) + a * b);
            }
        }
    }
    return out;
}

GradedMatrix dual_map(const GradedMatrix& f) {
    auto negate = [](std::vector<int> t) {
        for (int& a : t) a = -a;
        return t;
    };
    GradedFreeModule dual_dom(f.ring(), negate(f.codomain().twists()));
    GradedFreeModule dual_cod(f.ring(), negate(f.domain().twists()));
    std::vector<Polynomial> entries(f.rows() * f.cols(), Polynomial(f.ring()));
    GradedMatrix out(std::move(dual_cod), std::move(dual_dom), std::move(entries));
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) out.set_entry(j, i, f.entry(i, j));
    return out;
}

PresentedModule PresentedModule::free_module(const Ring& ring, std::vector<int> twists) {
    GradedFreeModule target(ring, std::move(twists));
    GradedFreeModule empty(ring, {});
    return cokernel(GradedMatrix::zero(std::move(target), std::move(empty)));
}

}  // namespace reglab
