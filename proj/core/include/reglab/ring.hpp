#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reglab/field.hpp"

namespace reglab {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Standard-graded polynomial ring K[x_1..x_d], optionally modulo pure
/// power relations x_i^{e_i} (e_i >= 2). All variables have degree 1.
/// Handles are cheap to copy and safe to share across threads.
class Ring {
public:
    Ring() = default;
    static Ring make(FieldSpec field, std::vector<std::string> variables,
                     std::vector<std::optional<int>> power_relations = {});

    FieldSpec field() const { return data_->field; }
    std::size_t var_count() const { return data_->variables.size(); }
    const std::string& var_name(std::size_t i) const { return data_->variables[i]; }
    const std::vector<std::string>& variables() const { return data_->variables; }
    std::optional<int> power_relation(std::size_t i) const { return data_->powers[i]; }
    const std::vector<std::optional<int>>& power_relations() const { return data_->powers; }

    /// True when there are no quotient relations.
    bool is_polynomial() const;

    std::optional<std::size_t> var_index(const std::string& name) const;

    /// Normal-form check: every relation variable's exponent below its power.
    bool monomial_alive(const Monomial& m) const;

    bool same_as(const Ring& other) const;
    explicit operator bool() const { return static_cast<bool>(data_); }

private:
    struct Data {
        FieldSpec field;
        std::vector<std::string> variables;
        std::vector<std::optional<int>> powers;
    };
    std::shared_ptr<const Data> data_;
};

/// All normal-form monomials of the given total degree, exponent vectors in
/// descending lexicographic order (first variable dominant). Empty for
/// negative degree.
std::vector<Monomial> monomial_basis(const Ring& ring, int degree);

/// Number of normal-form monomials of the given degree.
std::size_t monomial_count(const Ring& ring, int degree);

/// Position of a normal-form monomial inside monomial_basis(ring, deg).
std::size_t monomial_index(const std::vector<Monomial>& basis, const Monomial& m);

/// Homogeneous-friendly sparse polynomial with exact coefficients, kept in
/// ring normal form (no dead monomials, no zero coefficients; residues
/// reduced when the field has positive characteristic).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, const Monomial& m, const Rational& c);

    static Polynomial variable(const Ring& ring, std::size_t index);
    static Polynomial constant(const Ring& ring, const Rational& c);

    const Ring& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m (reducing into normal form; silently drops dead monomials).
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    /// Total degree of a nonzero homogeneous polynomial; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    std::string str() const;

private:
    Ring ring_;
    std::map<Monomial, Rational> terms_;

    void normalize_coeff(Rational& c) const;
};

}  // namespace reglab
