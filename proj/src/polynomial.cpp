#include "eqmod/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqmod {

PolyRing::PolyRing(std::vector<std::string> v, FieldSpec fs) : vars(std::move(v)), field(fs) {
    if (vars.empty()) throw std::invalid_argument("PolyRing: variable list is empty");
    std::set<std::string> seen;
    for (const auto& name : vars) {
        if (name.empty()) throw std::invalid_argument("PolyRing: empty variable name");
        if (!seen.insert(name).second) throw std::invalid_argument("PolyRing: duplicate variable " + name);
    }
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, FieldSpec fs) {
    return std::make_shared<const PolyRing>(std::move(vars), fs);
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
    Polynomial p(ring);
    Coeff cc = ring->field.canon(c);
    if (cc != 0) p.terms_.emplace(Expvec(ring->nvars(), 0), cc);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t idx) {
    if (idx >= ring->nvars()) throw std::invalid_argument("Polynomial: variable index out of range");
    Expvec m(ring->nvars(), 0);
    m[idx] = 1;
    return term(std::move(ring), std::move(m), Coeff(1));
}

Polynomial Polynomial::term(RingPtr ring, Expvec m, const Coeff& c) {
    if (m.size() != ring->nvars()) throw std::invalid_argument("Polynomial: exponent length mismatch");
    Polynomial p(ring);
    Coeff cc = ring->field.canon(c);
    if (cc != 0) p.terms_.emplace(std::move(m), std::move(cc));
    return p;
}

bool Polynomial::has_unit_term() const {
    if (terms_.empty()) return false;
    auto it = terms_.find(Expvec(ring_->nvars(), 0));
    return it != terms_.end();
}

int Polynomial::degree() const {
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

bool Polynomial::uses_only(const std::vector<bool>& allowed) const {
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0 && !allowed[i]) return false;
    return true;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
        throw std::invalid_argument("Polynomial: ring mismatch");
}

void Polynomial::add_term(const Expvec& m, const Coeff& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = ring_->field.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(*this);
    const Field& F = ring_->field;
    for (const auto& [m, c] : o.terms_) r.add_term(m, F.neg(c));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    const Field& F = ring_->field;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, F.neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(ring_);
    const Field& F = ring_->field;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(exp_mul(ma, mb), F.mul(ca, cb));
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    Polynomial r(ring_);
    const Field& F = ring_->field;
    Coeff cc = F.canon(c);
    if (cc == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, F.mul(a, cc));
    return r;
}

Polynomial Polynomial::times_term(const Expvec& m, const Coeff& c) const {
    Polynomial r(ring_);
    const Field& F = ring_->field;
    if (c == 0) return r;
    for (const auto& [mm, a] : terms_) r.terms_.emplace(exp_mul(mm, m), F.mul(a, c));
    return r;
}

Polynomial Polynomial::substitute_zero(const std::vector<std::string>& vars) const {
    std::vector<bool> kill(ring_->nvars(), false);
    for (const auto& name : vars) {
        int idx = ring_->var_index(name);
        if (idx < 0) throw std::invalid_argument("substitute_zero: unknown variable " + name);
        kill[static_cast<size_t>(idx)] = true;
    }
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        bool dies = false;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0 && kill[i]) { dies = true; break; }
        if (!dies) r.terms_.emplace(m, c);
    }
    return r;
}

Polynomial Polynomial::mapped_to(const RingPtr& target, const std::vector<int>& map) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Expvec mm(target->nvars(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0) throw std::invalid_argument("mapped_to: polynomial uses a variable outside the target ring");
            mm[static_cast<size_t>(map[i])] = static_cast<std::uint16_t>(mm[static_cast<size_t>(map[i])] + m[i]);
        }
        r.add_term(mm, target->field.canon(c));
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Print highest degree first, then reverse structural order, so output is
    // stable and reads naturally.
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        int da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        Coeff abs_c = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = abs_c == 1;
        bool printed_coeff = false;
        if (!unit_coeff || exp_is_one(m)) {
            out << abs_c.get_str();
            printed_coeff = true;
        }
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed_coeff) out << "*";
            printed_coeff = true;
            out << ring_->vars[i];
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('+')) {
        } else if (eat('-')) {
            neg = true;
        }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            long e = parse_uint();
            Polynomial r = Polynomial::constant(ring_, Coeff(1));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            if (eat('/')) {
                mpz_class den = parse_integer();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(ring_, Coeff(num, den));
            }
            return Polynomial::constant(ring_, Coeff(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_name();
            int idx = ring_->var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring_, static_cast<size_t>(idx));
        }
        fail("expected number, variable or '('");
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    long parse_uint() {
        mpz_class v = parse_integer();
        if (v < 0 || v > 1000) fail("exponent out of range");
        return v.get_si();
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    RingPtr ring_;
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

}  // namespace eqmod
