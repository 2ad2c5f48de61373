#include "ncres/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncres {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

Poly Poly::var(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_[{1}] = Rational(1);
    return p;
}

Poly Poly::monomial(const std::vector<std::string>& vars,
                    const std::vector<int>& exps, const Rational& coef) {
    if (vars.size() != exps.size())
        throw std::invalid_argument("Poly::monomial: arity mismatch");
    Poly p(coef);
    for (size_t i = 0; i < vars.size(); ++i)
        for (int k = 0; k < exps[i]; ++k) p *= Poly::var(vars[i]);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

void align(Poly& a, Poly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    auto remap = [&u](Poly& p) {
        std::vector<int> pos(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i)
            pos[i] = int(std::lower_bound(u.begin(), u.end(), p.vars_[i]) - u.begin());
        Poly::TermMap fresh;
        for (const auto& [e, c] : p.terms_) {
            std::vector<int> ne(u.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            fresh[ne] = c;
        }
        p.terms_ = std::move(fresh);
        p.vars_ = u;
    };
    remap(a);
    remap(b);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    Poly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) it->second += c;
    }
    prune();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += (-o); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    align(x, y);
    Poly r;
    r.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.terms_.try_emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.prune();
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    align(x, y);
    return x.terms_ == y.terms_;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly acc(Rational(1)), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> vals(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it != point.end()) vals[i] = &it->second;
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vals[i])
                throw std::domain_error("Poly::eval: missing assignment for " + vars_[i]);
            t *= vals[i]->pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::map<std::string, Rational>& point) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Poly term(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it != point.end()) term *= Poly(it->second.pow(e[i]));
            else term *= Poly::var(vars_[i]).pow(e[i]);
        }
        r += term;
    }
    return r;
}

Poly Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
    if (divisor.is_constant()) {
        Poly r = *this;
        r *= divisor.constant_value().inv();
        return r;
    }
    Poly rem = *this, div = divisor, quot;
    align(rem, div);
    quot.vars_ = rem.vars_;
    const auto& dlead = *div.terms_.begin();
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.begin();
        std::vector<int> e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) throw std::domain_error("Poly: inexact division");
        }
        Rational c = rlead.second / dlead.second;
        Poly m;
        m.vars_ = rem.vars_;
        m.terms_[e] = c;
        quot += m;
        rem -= m * div;
    }
    return quot;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(0);
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        BigInt an = c.num() < 0 ? BigInt(-c.num()) : c.num();
        num_gcd = boost::multiprecision::gcd(num_gcd, an);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, c.den()) * c.den();
    }
    Rational r(num_gcd, den_lcm);
    if (terms_.begin()->second.sign() < 0) r = -r;
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
            any = true;
        }
        if (!any) os << a.str();
        else if (a.is_one()) os << mono.str();
        else os << a.str() << "*" << mono.str();
    }
    return os.str();
}

// ---- Laurent ----

Laurent::Laurent(const Poly& constant) {
    if (!constant.is_zero()) coeffs_[0] = constant;
}

Laurent Laurent::lambda_power(int k) {
    Laurent l;
    l.coeffs_[k] = Poly(Rational(1));
    return l;
}

void Laurent::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero()) it = coeffs_.erase(it);
        else ++it;
    }
}

int Laurent::min_power() const {
    if (coeffs_.empty()) throw std::domain_error("Laurent: zero has no min power");
    return coeffs_.begin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [k, p] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(k, p);
        if (!fresh) it->second += p;
    }
    prune();
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, pa] : a.coeffs_)
        for (const auto& [kb, pb] : b.coeffs_) {
            auto [it, fresh] = r.coeffs_.try_emplace(ka + kb, pa * pb);
            if (!fresh) it->second += pa * pb;
        }
    r.prune();
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [p, c] : coeffs_) r.coeffs_[p + k] = c;
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r;
    if (c.is_zero()) return r;
    for (const auto& [p, q] : coeffs_) {
        Poly x = q;
        x *= c;
        r.coeffs_[p] = x;
    }
    return r;
}

Poly Laurent::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Poly() : it->second;
}

std::string Laurent::str(const std::string& param) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (k != 0) os << "*" << param << "^" << k;
    }
    return os.str();
}

} // namespace ncres
