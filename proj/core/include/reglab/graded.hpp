#pragma once

#include <vector>

#include "reglab/ring.hpp"

namespace reglab {

/// Twisted graded free module F = ⊕_k Ring(-a_k). twists() stores the a_k,
/// i.e. the degree each generator sits in; the order is significant and
/// matches matrix row/column order.
class GradedFreeModule {
public:
    GradedFreeModule() = default;
    GradedFreeModule(Ring ring, std::vector<int> twists)
        : ring_(std::move(ring)), twists_(std::move(twists)) {}

    const Ring& ring() const { return ring_; }
    const std::vector<int>& twists() const { return twists_; }
    std::size_t rank() const { return twists_.size(); }

    int min_twist() const;
    int max_twist() const;

    /// K-dimension of the degree-d piece.
    std::size_t dimension_in_degree(int degree) const;

    bool same_as(const GradedFreeModule& other) const {
        return ring_.same_as(other.ring_) && twists_ == other.twists_;
    }

private:
    Ring ring_;
    std::vector<int> twists_;
};

/// Homogeneous map between twisted graded free modules: entry (i, j) is
/// zero or homogeneous of degree twists(domain)[j] - twists(codomain)[i].
/// Checked at construction.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(GradedFreeModule codomain, GradedFreeModule domain,
                 std::vector<Polynomial> entries_row_major);

    /// Zero map with the given shape.
    static GradedMatrix zero(GradedFreeModule codomain, GradedFreeModule domain);
    static GradedMatrix identity(const GradedFreeModule& module);

    const GradedFreeModule& domain() const { return domain_; }
    const GradedFreeModule& codomain() const { return codomain_; }
    const Ring& ring() const { return codomain_.ring(); }
    std::size_t rows() const { return codomain_.rank(); }
    std::size_t cols() const { return domain_.rank(); }

    const Polynomial& entry(std::size_t i, std::size_t j) const {
        return entries_[i * cols() + j];
    }
    void set_entry(std::size_t i, std::size_t j, Polynomial p);

    bool is_zero() const;
    bool entries_equal(const GradedMatrix& other) const;

    GradedMatrix operator+(const GradedMatrix& rhs) const;

    /// All twists shifted by s: same entries, domain/codomain twisted.
    GradedMatrix twist_shifted(int s) const;

    int max_entry_degree() const;

private:
    GradedFreeModule domain_, codomain_;
    std::vector<Polynomial> entries_;

    void check_homogeneous() const;
};

/// Matrix product f∘g (apply g first); entries reduced to ring normal form.
GradedMatrix compose(const GradedMatrix& f, const GradedMatrix& g);

/// Transpose with negated twists; an involution.
GradedMatrix dual_map(const GradedMatrix& f);

/// Graded module presented as the cokernel or kernel of a homogeneous map.
struct PresentedModule {
    enum class Kind { cokernel, kernel };
    Kind kind = Kind::cokernel;
    GradedMatrix map;

    const Ring& ring() const { return map.ring(); }

    static PresentedModule cokernel(GradedMatrix m) {
        return PresentedModule{Kind::cokernel, std::move(m)};
    }
    static PresentedModule kernel(GradedMatrix m) {
        return PresentedModule{Kind::kernel, std::move(m)};
    }
    /// Free module ⊕ Ring(-a_k), presented as the cokernel of a zero map.
    static PresentedModule free_module(const Ring& ring, std::vector<int> twists);
};

}  // namespace reglab
