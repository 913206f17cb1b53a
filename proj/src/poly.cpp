#include "herg/poly.hpp"

#include <cstdlib>
#include <sstream>

namespace herg {

Poly::Poly(std::vector<std::string> vars, std::vector<int> idempotent)
    : vars_(std::move(vars)), idem_(vars_.size(), 0) {
    for (int i : idempotent) idem_[static_cast<std::size_t>(i)] = 1;
}

Poly Poly::constant(const Poly& proto, Coeff c) {
    Poly p(proto.vars_, {});
    p.idem_ = proto.idem_;
    p.add_term(Exps(proto.arity(), 0), c);
    return p;
}

Poly Poly::monomial(const Poly& proto, Exps exps, Coeff c) {
    Poly p(proto.vars_, {});
    p.idem_ = proto.idem_;
    p.add_term(std::move(exps), c);
    return p;
}

Poly Poly::var(const Poly& proto, int index, int power, Coeff c) {
    Exps e(proto.arity(), 0);
    e[static_cast<std::size_t>(index)] = power;
    return monomial(proto, std::move(e), c);
}

void Poly::cap(Exps& e) const {
    for (std::size_t i = 0; i < idem_.size(); ++i)
        if (idem_[i] && e[i] > 1) e[i] = 1;
}

void Poly::add_term(Exps exps, Coeff c) {
    if (c == 0) return;
    if (exps.size() != arity()) throw HergError("poly: arity mismatch");
    cap(exps);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.vars_ != vars_) throw HergError("poly: mixed variable sets");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.vars_ != vars_) throw HergError("poly: mixed variable sets");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (o.vars_ != vars_) throw HergError("poly: mixed variable sets");
    Poly out(vars_, {});
    out.idem_ = idem_;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exps e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    }
    return out;
}

bool Poly::operator==(const Poly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

Poly Poly::subst(const Poly& target_proto,
                 const std::vector<std::pair<Coeff, Exps>>& images) const {
    if (images.size() != arity()) throw HergError("poly: substitution arity mismatch");
    Poly out(target_proto.vars(), {});
    out.idem_ = target_proto.idem_;
    for (const auto& [e, c] : terms_) {
        Coeff coeff = c;
        Exps target(target_proto.arity(), 0);
        bool dead = false;
        for (std::size_t i = 0; i < e.size() && !dead; ++i) {
            int power = e[i];
            if (power == 0) continue;
            const auto& [ic, iexps] = images[i];
            if (ic == 0) {
                if (power > 0) dead = true;
                else throw HergError("poly: zero image with negative exponent");
                continue;
            }
            if (ic != 1 && ic != -1 && power < 0)
                throw HergError("poly: non-unit image coefficient with negative exponent");
            if (ic == -1 && (power % 2 != 0)) coeff = -coeff;
            if (ic != 1 && ic != -1)
                for (int p = 0; p < power; ++p) coeff *= ic;
            for (std::size_t j = 0; j < target.size(); ++j) target[j] += power * iexps[j];
        }
        if (!dead) out.add_term(std::move(target), coeff);
    }
    return out;
}

Poly Poly::swap_vars(int i, int j) const {
    Poly out(vars_, {});
    out.idem_ = idem_;
    for (const auto& [e, c] : terms_) {
        Exps swapped = e;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
        out.add_term(std::move(swapped), c);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars_[i];
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << factors;
        }
    }
    return os.str();
}

namespace rings {

Poly r_proto() { return Poly({"xm1", "y", "z", "s", "w", "t"}, {W}); }
Poly ab_proto() { return Poly({"a", "b"}); }
Poly xab_proto() { return Poly({"xm1", "a", "b"}); }

}  // namespace rings

Poly reduce_quotient(const Poly& p, int a_index, int b_index) {
    std::size_t ai = static_cast<std::size_t>(a_index);
    std::size_t bi = static_cast<std::size_t>(b_index);
    Poly out(p.vars(), {});
    for (const auto& [e, c] : p.terms()) {
        if (e[bi] < 0) throw HergError("quotient: negative b exponent");
        if (e[bi] >= 2) {
            Poly::Exps r = e;
            r[ai] += r[bi] - 1;
            r[bi] = 1;
            out.add_term(std::move(r), c);
        } else {
            out.add_term(e, c);
        }
    }
    return out;
}

Poly QuotientPoly::reduce(Poly ab) {
    if (ab.arity() != 2) throw HergError("quotient: expected a two-variable polynomial");
    return reduce_quotient(ab, 0, 1);
}

}  // namespace herg
