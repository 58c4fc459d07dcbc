// Sparse exact multivariate polynomials.
//
// Terms live in a std::map keyed by exponent vector under plain lexicographic
// vector comparison, which gives every polynomial one canonical form
// independent of any monomial order.  No zero coefficients are ever stored.
// Values are immutable in spirit: all operations return fresh polynomials.
#pragma once

#include "eqmod/field.hpp"
#include "eqmod/monomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqmod {

struct PolyRing {
    std::vector<std::string> vars;
    Field field;

    PolyRing(std::vector<std::string> v, FieldSpec fs);

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;  // -1 when absent

    bool same_as(const PolyRing& o) const { return vars == o.vars && field.spec() == o.field.spec(); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, FieldSpec fs = FieldSpec::rationals());

class Polynomial {
public:
    using TermMap = std::map<Expvec, Coeff>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Coeff& c);
    static Polynomial variable(RingPtr ring, size_t idx);
    static Polynomial term(RingPtr ring, Expvec m, const Coeff& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && exp_is_one(terms_.begin()->first)); }
    // Nonzero constant term, i.e. a unit of the local ring k[x]_(x).
    bool has_unit_term() const;

    int degree() const;  // total degree, -1 for the zero polynomial
    bool is_homogeneous() const;
    bool uses_only(const std::vector<bool>& allowed) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Coeff& c) const;
    Polynomial times_term(const Expvec& m, const Coeff& c) const;

    // Image under the evaluation sending each listed variable to 0.
    Polynomial substitute_zero(const std::vector<std::string>& vars) const;

    // Reinterpret in another ring; `map[i]` is the target index of source
    // variable i, or -1 when the variable must not occur.
    Polynomial mapped_to(const RingPtr& target, const std::vector<int>& map) const;

    std::string to_string() const;

    // Mutating helper used by the arithmetic kernels.
    void add_term(const Expvec& m, const Coeff& c);

private:
    void check_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    TermMap terms_;
};

// Parses the CLI polynomial grammar: integer or rational coefficients,
// variables by name, operators + - * ^, parentheses; juxtaposition is not
// multiplication.  Throws std::invalid_argument with a position message.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace eqmod
