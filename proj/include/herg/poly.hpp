#pragma once

// Sparse multivariate Laurent polynomials with exact integer coefficients,
// and the quotient of Z[a,b] by the ideal (b^2 - ab) in normal form.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "herg/herg.hpp"

namespace herg {

class Poly {
public:
    using Exps = std::vector<int>;
    using Coeff = long long;
    using TermMap = std::map<Exps, Coeff, std::greater<Exps>>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars, std::vector<int> idempotent = {});

    static Poly constant(const Poly& proto, Coeff c);
    static Poly monomial(const Poly& proto, Exps exps, Coeff c = 1);
    static Poly var(const Poly& proto, int index, int power = 1, Coeff c = 1);

    void add_term(Exps exps, Coeff c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    // Substitutes each variable by a Laurent monomial (coeff, exponents) over
    // the target prototype's variables.
    Poly subst(const Poly& target_proto,
               const std::vector<std::pair<Coeff, Exps>>& images) const;

    Poly swap_vars(int i, int j) const;

    // Canonical text: terms in lexicographically descending exponent order,
    // factors joined by '*', '^' only for exponents other than 1, negative
    // exponents as e.g. a^-1.
    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::vector<std::uint8_t> idem_;  // exponent capped at 1 (w^2 = w)
    TermMap terms_;

    void cap(Exps& e) const;
};

// Variable orders for the invariant rings.
namespace rings {

// (xm1, y, z, s, w, t); xm1 holds the x-1 base; w is idempotent.
Poly r_proto();
// (a, b)
Poly ab_proto();
// (xm1, a, b) for bridge relations that keep the x-1 base symbolic.
Poly xab_proto();

enum RVar { XM1 = 0, Y = 1, Z = 2, S = 3, W = 4, T = 5 };
enum ABVar { A = 0, B = 1 };

}  // namespace rings

// Rewrites b^m -> a^{m-1} b for m >= 2 in the designated variable pair.
Poly reduce_quotient(const Poly& p, int a_index, int b_index);

// Z[a,b] / (b^2 - ab): normal form keeps every b-exponent at 0 or 1 via
// a^n b^m -> a^{n+m-1} b for m >= 2 (n may be negative).
class QuotientPoly {
public:
    QuotientPoly() : p_(rings::ab_proto()) {}
    explicit QuotientPoly(const Poly& raw_ab) : p_(reduce(raw_ab)) {}

    static Poly reduce(Poly ab);

    const Poly& normal_form() const { return p_; }
    bool operator==(const QuotientPoly& o) const { return p_ == o.p_; }
    bool operator!=(const QuotientPoly& o) const { return !(*this == o); }
    QuotientPoly operator+(const QuotientPoly& o) const { return QuotientPoly(p_ + o.p_); }
    QuotientPoly operator-(const QuotientPoly& o) const { return QuotientPoly(p_ - o.p_); }
    QuotientPoly operator*(const QuotientPoly& o) const { return QuotientPoly(p_ * o.p_); }
    std::string str() const { return p_.str(); }

private:
    Poly p_;
};

}  // namespace herg
