#include "reglab/ring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace reglab {

Ring Ring::make(FieldSpec field, std::vector<std::string> variables,
                std::vector<std::optional<int>> power_relations) {
    field.validate();
    if (power_relations.empty()) {
        power_relations.assign(variables.size(), std::nullopt);
    }
    if (power_relations.size() != variables.size()) {
        throw parameter_error("power_relations length must match variable count");
    }
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw parameter_error("empty variable name");
        if (!seen.insert(v).second) throw parameter_error("duplicate variable name: " + v);
    }
    for (const auto& e : power_relations) {
        if (e && *e < 2) throw parameter_error("power relation exponent must be >= 2");
    }
    Ring r;
    auto d = std::make_shared<Data>();
    d->field = field;
    d->variables = std::move(variables);
    d->powers = std::move(power_relations);
    r.data_ = std::move(d);
    return r;
}

bool Ring::is_polynomial() const {
    for (const auto& e : data_->powers)
        if (e) return false;
    return true;
}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < data_->variables.size(); ++i)
        if (data_->variables[i] == name) return i;
    return std::nullopt;
}

bool Ring::monomial_alive(const Monomial& m) const {
    assert(m.size() == var_count());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (data_->powers[i] && m[i] >= *data_->powers[i]) return false;
    }
    return true;
}

bool Ring::same_as(const Ring& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    return data_->field == other.data_->field && data_->variables == other.data_->variables &&
           data_->powers == other.data_->powers;
}

namespace {

void enumerate(const Ring& ring, std::size_t var, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
    if (var + 1 == ring.var_count()) {
        auto cap = ring.power_relation(var);
        if (cap && remaining >= *cap) return;
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    auto cap = ring.power_relation(var);
    int hi = cap ? std::min(remaining, *cap - 1) : remaining;
    // descending first-variable exponent gives descending lex order
    for (int e = hi; e >= 0; --e) {
        cur[var] = e;
        enumerate(ring, var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const Ring& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (ring.var_count() == 0) {
        if (degree == 0) out.push_back(Monomial{});
        return out;
    }
    Monomial cur(ring.var_count(), 0);
    enumerate(ring, 0, degree, cur, out);
    return out;
}

std::size_t monomial_count(const Ring& ring, int degree) {
    if (degree < 0) return 0;
    return monomial_basis(ring, degree).size();
}

std::size_t monomial_index(const std::vector<Monomial>& basis, const Monomial& m) {
    // basis is sorted descending lexicographically
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [](const Monomial& a, const Monomial& b) { return a > b; });
    if (it == basis.end() || *it != m) {
        throw parameter_error("monomial not present in basis");
    }
    return std::size_t(it - basis.begin());
}

Polynomial::Polynomial(Ring ring, const Monomial& m, const Rational& c)
    : ring_(std::move(ring)) {
    add_term(m, c);
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
    Monomial m(ring.var_count(), 0);
    m[index] = 1;
    return Polynomial(ring, m, Rational(1));
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
    return Polynomial(ring, Monomial(ring.var_count(), 0), c);
}

void Polynomial::normalize_coeff(Rational& c) const {
    c.canonicalize();
    std::uint32_t p = ring_.field().characteristic;
    if (p != 0) {
        c = Rational(modarith::reduce(c, p));
    }
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    assert(m.size() == ring_.var_count());
    if (!ring_.monomial_alive(m)) return;
    Rational v = c;
    normalize_coeff(v);
    if (sgn(v) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        normalize_coeff(it->second);
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(ring_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out(ring_);
    Monomial prod(ring_.var_count());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending lex order for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational coeff = c;
        if (!first) {
            if (sgn(coeff) < 0) {
                os << " - ";
                coeff = -coeff;
            } else {
                os << " + ";
            }
        } else if (sgn(coeff) < 0) {
            os << "-";
            coeff = -coeff;
        }
        first = false;
        bool has_vars = total_degree(m) > 0;
        bool coeff_is_one = coeff == Rational(1);
        if (!coeff_is_one || !has_vars) {
            os << coeff.get_str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_.var_name(i);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace reglab
