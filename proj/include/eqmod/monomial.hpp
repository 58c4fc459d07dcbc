// Exponent vectors and monomial orders.
//
// A monomial is a plain exponent vector whose length equals the ring's
// variable count.  Orders are small value objects: grevlex, lex, and a
// two-block elimination order (grevlex inside each block) used to eliminate
// the leading variable block.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace eqmod {

using Expvec = std::vector<std::uint16_t>;

inline int total_degree(const Expvec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline Expvec exp_mul(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

inline bool exp_divides(const Expvec& a, const Expvec& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expvec exp_div(const Expvec& b, const Expvec& a) {  // b / a, assumes a | b
    Expvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
    return r;
}

inline Expvec exp_lcm(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool exp_coprime(const Expvec& a, const Expvec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

inline bool exp_is_one(const Expvec& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    // Variables [0, split) form the block to be eliminated.
    static MonomialOrder block_elimination(size_t split) { return MonomialOrder(Kind::Block, split); }

    Kind kind() const { return kind_; }
    size_t split() const { return split_; }

    // -1 : a < b, 0 : equal, +1 : a > b
    int compare(const Expvec& a, const Expvec& b) const {
        switch (kind_) {
            case Kind::Lex: return cmp_lex(a, b, 0, a.size());
            case Kind::Grevlex: return cmp_grevlex(a, b, 0, a.size());
            case Kind::Block: {
                if (split_ > a.size()) throw std::invalid_argument("MonomialOrder: block split exceeds variable count");
                if (int c = cmp_grevlex(a, b, 0, split_)) return c;
                return cmp_grevlex(a, b, split_, a.size());
            }
        }
        return 0;
    }

    bool less(const Expvec& a, const Expvec& b) const { return compare(a, b) < 0; }
    bool greater(const Expvec& a, const Expvec& b) const { return compare(a, b) > 0; }

private:
    MonomialOrder(Kind k, size_t s) : kind_(k), split_(s) {}

    static int cmp_lex(const Expvec& a, const Expvec& b, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static int cmp_grevlex(const Expvec& a, const Expvec& b, size_t lo, size_t hi) {
        long da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller exponent in the last differing slot wins
        }
        return 0;
    }

    Kind kind_;
    size_t split_;
};

// Orders on terms of a free module R^s.  A module term is (component, monomial).
class ModuleOrder {
public:
    enum class Kind {
        TermOverPosition,  // monomials first, lower component breaks ties
        PositionOverTerm,  // lower component dominates
        ComponentElim,     // components < split dominate everything above; TOP inside each block
    };

    static ModuleOrder top(MonomialOrder base) { return ModuleOrder(Kind::TermOverPosition, base, 0); }
    static ModuleOrder pot(MonomialOrder base) { return ModuleOrder(Kind::PositionOverTerm, base, 0); }
    static ModuleOrder component_elimination(MonomialOrder base, size_t split) {
        return ModuleOrder(Kind::ComponentElim, base, split);
    }

    Kind kind() const { return kind_; }
    const MonomialOrder& base() const { return base_; }

    int compare(size_t comp_a, const Expvec& a, size_t comp_b, const Expvec& b) const {
        switch (kind_) {
            case Kind::TermOverPosition: {
                if (int c = base_.compare(a, b)) return c;
                if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;  // lower component is larger
                return 0;
            }
            case Kind::PositionOverTerm: {
                if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
                return base_.compare(a, b);
            }
            case Kind::ComponentElim: {
                const bool a_hi = comp_a < split_, b_hi = comp_b < split_;
                if (a_hi != b_hi) return a_hi ? 1 : -1;
                if (int c = base_.compare(a, b)) return c;
                if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
                return 0;
            }
        }
        return 0;
    }

private:
    ModuleOrder(Kind k, MonomialOrder base, size_t split) : kind_(k), base_(base), split_(split) {}

    Kind kind_;
    MonomialOrder base_;
    size_t split_;
};

}  // namespace eqmod
