// Exact one-variable Laurent-polynomial arithmetic over arbitrary-precision
// integers, plus the small quantum-algebra helpers built on it.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotcab/errors.hpp"

namespace knotcab {

using Int = boost::multiprecision::cpp_int;

// Terms are kept sorted by ascending exponent with no zero coefficients, so
// equality is plain structural equality and iteration order is canonical.
class LaurentPoly {
public:
    struct Term {
        std::int64_t exp = 0;
        Int coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default; // zero polynomial
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one();
    static LaurentPoly variable(); // A
    static LaurentPoly monomial(Int coeff, std::int64_t exp);
    // Builds from arbitrary (exp, coeff) pairs, combining duplicates.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::int64_t min_exp() const; // throws ZeroPolynomial
    std::int64_t max_exp() const; // throws ZeroPolynomial
    std::int64_t span() const;    // max_exp - min_exp, throws ZeroPolynomial
    Int coeff(std::int64_t exp) const; // 0 when absent

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        a -= b;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly& mul_monomial(const Int& coeff, std::int64_t exp);
    LaurentPoly pow(unsigned k) const;
    // Substitutes A -> A^-1 (negates every exponent).
    LaurentPoly reversed() const;

    // Exact division; throws NotDivisible when the divisor is zero or the
    // remainder is nonzero.
    LaurentPoly div_exact(const LaurentPoly& divisor) const;

    // Text form, descending exponent: "-1*A^-4 + 1*A^-12".  Constant terms
    // print as bare integers.
    std::string to_text(const std::string& var = "A") const;
    // JSON form: array of [exponent, coefficient-as-decimal-string] pairs,
    // descending exponent.
    std::string to_json() const;
    static LaurentPoly from_json(const std::string& json);

private:
    std::vector<Term> terms_;
    void normalize();
};

// Loop value of the bracket: delta = -A^2 - A^-2.
LaurentPoly bracket_delta();

// Quantum integer [n] = A^{2n-2} + A^{2n-6} + ... + A^{-2n+2}.
// [0] is the zero polynomial (documented convention, not an error).
LaurentPoly quantum_integer(unsigned n);

// Chebyshev-like expansion of S_n(x) where S_0 = 1, S_1 = x and
// S_{n+1} = x*S_n - S_{n-1}.  Stores the nonzero coefficients of x^k,
// ascending k; all k are congruent to n mod 2.
struct ChebyshevExpansion {
    unsigned n = 0;
    std::vector<std::pair<unsigned, Int>> coeffs;
};
ChebyshevExpansion chebyshev(unsigned n);

// A-polynomial re-expressed in q = A^4: p(A) = A^offset * poly_q(q).
// offset is the common residue of all exponents mod 4, in [0, 3].
struct QForm {
    int offset = 0;
    LaurentPoly poly_q;
};
// Throws NotOnLattice when exponents are not all congruent mod 4.
// The zero polynomial maps to {0, zero}.
QForm to_q(const LaurentPoly& p);

} // namespace knotcab
