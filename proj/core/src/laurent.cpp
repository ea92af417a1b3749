#include "knotcab/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace knotcab {

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
}

LaurentPoly LaurentPoly::one() { return monomial(1, 0); }

LaurentPoly LaurentPoly::variable() { return monomial(1, 1); }

LaurentPoly LaurentPoly::monomial(Int coeff, std::int64_t exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

std::int64_t LaurentPoly::min_exp() const {
    if (terms_.empty()) throw ZeroPolynomial("min_exp of zero polynomial");
    return terms_.front().exp;
}

std::int64_t LaurentPoly::max_exp() const {
    if (terms_.empty()) throw ZeroPolynomial("max_exp of zero polynomial");
    return terms_.back().exp;
}

std::int64_t LaurentPoly::span() const {
    if (terms_.empty()) throw ZeroPolynomial("span of zero polynomial");
    return terms_.back().exp - terms_.front().exp;
}

Int LaurentPoly::coeff(std::int64_t exp) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exp,
        [](const Term& t, std::int64_t e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
            out.push_back(o.terms_[j++]);
        } else {
            Int c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back({terms_[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<std::int64_t, Int> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
    LaurentPoly p;
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, std::move(c)});
    return p;
}

LaurentPoly& LaurentPoly::mul_monomial(const Int& coeff, std::int64_t exp) {
    if (coeff == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.exp += exp;
        t.coeff *= coeff;
    }
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        p.terms_.push_back({-it->exp, it->coeff});
    return p;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw NotDivisible("division by zero polynomial");
    if (is_zero()) return {};
    // If the quotient exists, its exponents lie in
    // [min_exp - divisor.min_exp, max_exp - divisor.max_exp].
    const std::int64_t qmin = min_exp() - divisor.min_exp();
    LaurentPoly rem = *this;
    const Int& dlead = divisor.terms_.back().coeff;
    const std::int64_t dexp = divisor.max_exp();
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const Term& top = rem.terms_.back();
        const std::int64_t qe = top.exp - dexp;
        if (qe < qmin || top.coeff % dlead != 0)
            throw NotDivisible("remainder is nonzero");
        Int qc = top.coeff / dlead;
        LaurentPoly step = divisor;
        step.mul_monomial(qc, qe);
        rem -= step;
        qterms.push_back({qe, std::move(qc)});
    }
    return from_terms(std::move(qterms));
}

std::string LaurentPoly::to_text(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (it->exp == 0) {
            os << c.str();
        } else {
            os << c.str() << "*" << var;
            if (it->exp != 1) os << "^" << it->exp;
        }
    }
    return os.str();
}

std::string LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        arr.push_back({it->exp, it->coeff.str()});
    return arr.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& json) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("polynomial JSON must be an array");
    std::vector<Term> terms;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
            throw ParseError("polynomial JSON entries must be [exp, coeff] pairs");
        Int c;
        if (pair[1].is_string()) {
            try {
                c = Int(pair[1].get<std::string>());
            } catch (const std::exception&) {
                throw ParseError("bad coefficient string in polynomial JSON");
            }
        } else if (pair[1].is_number_integer()) {
            c = Int(pair[1].get<std::int64_t>());
        } else {
            throw ParseError("coefficient must be a decimal string or integer");
        }
        terms.push_back({pair[0].get<std::int64_t>(), std::move(c)});
    }
    return from_terms(std::move(terms));
}

LaurentPoly bracket_delta() {
    return LaurentPoly::from_terms({{2, -1}, {-2, -1}});
}

LaurentPoly quantum_integer(unsigned n) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        terms.push_back({2 * std::int64_t(n) - 2 - 4 * std::int64_t(i), 1});
    return LaurentPoly::from_terms(std::move(terms));
}

ChebyshevExpansion chebyshev(unsigned n) {
    // Dense coefficient rows for S_{k}, recurring upward.
    std::vector<Int> prev{1};     // S_0 = 1
    std::vector<Int> cur{0, 1};   // S_1 = x
    if (n == 0) cur = prev;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Int> next(k + 2, 0);
        for (unsigned i = 0; i <= k; ++i)
            if (cur[i] != 0) next[i + 1] += cur[i]; // x * S_k
        for (unsigned i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    ChebyshevExpansion e;
    e.n = n;
    for (unsigned k = 0; k < cur.size(); ++k)
        if (cur[k] != 0) e.coeffs.emplace_back(k, cur[k]);
    return e;
}

QForm to_q(const LaurentPoly& p) {
    QForm q;
    if (p.is_zero()) return q;
    const std::int64_t r = ((p.min_exp() % 4) + 4) % 4;
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : p.terms()) {
        if (((t.exp % 4) + 4) % 4 != r)
            throw NotOnLattice("exponents are not congruent mod 4");
        terms.push_back({(t.exp - r) / 4, t.coeff});
    }
    q.offset = int(r);
    q.poly_q = LaurentPoly::from_terms(std::move(terms));
    return q;
}

} // namespace knotcab
