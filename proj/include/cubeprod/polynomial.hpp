#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cubeprod {

/// Sparse multivariate polynomial with named variables and exact coefficients.
/// Coeff must support +, -, *, /, ==, default construction (zero) and
/// construction from int. Monomials are compared lexicographically, which is
/// the order used for leading terms and exact division.
template <typename Coeff>
class Polynomial {
  public:
    using Monomial = std::vector<unsigned>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, Coeff c) {
        Polynomial p(std::move(vars));
        if (!(c == Coeff(0))) p.terms_.emplace(Monomial(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static Polynomial variable(const std::vector<std::string>& vars, size_t index) {
        if (index >= vars.size()) throw std::invalid_argument("Polynomial: variable index out of range");
        Polynomial p(vars);
        Monomial m(vars.size(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), Coeff(1));
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == Monomial(vars_.size(), 0);
    }

    Coeff constant_value() const {
        if (terms_.empty()) return Coeff(0);
        if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
        return terms_.begin()->second;
    }

    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, Coeff(0) - c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_vars(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_vars(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, Coeff(0) - c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_vars(o);
        Polynomial r(vars_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(vars_.size());
                for (size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Polynomial operator*(const Coeff& s) const {
        Polynomial r(vars_);
        if (s == Coeff(0)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(vars_, Coeff(1));
        for (unsigned j = 0; j < e; ++j) r = r * *this;
        return r;
    }

    Coeff eval(const std::vector<Coeff>& point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("Polynomial::eval: wrong arity");
        Coeff total(0);
        for (const auto& [m, c] : terms_) {
            Coeff t = c;
            for (size_t v = 0; v < m.size(); ++v)
                for (unsigned j = 0; j < m[v]; ++j) t = t * point[v];
            total = total + t;
        }
        return total;
    }

    /// Exact single-divisor division: returns q with *this == q * d, or
    /// nullopt if no such polynomial exists.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const {
        check_vars(d);
        if (d.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
        Polynomial remainder = *this;
        Polynomial quotient(vars_);
        const auto& [dm, dc] = *d.terms_.rbegin();
        while (!remainder.is_zero()) {
            const auto& [rm, rc] = *remainder.terms_.rbegin();
            Monomial qm(vars_.size());
            for (size_t v = 0; v < qm.size(); ++v) {
                if (rm[v] < dm[v]) return std::nullopt;
                qm[v] = rm[v] - dm[v];
            }
            Coeff qc = rc / dc;
            Polynomial step(vars_);
            step.terms_.emplace(qm, qc);
            quotient.add_term(qm, qc);
            remainder = remainder - step * d;
        }
        return quotient;
    }

    /// If *this == c * other for a constant c (both nonzero), returns c.
    std::optional<Coeff> proportionality_to(const Polynomial& other) const {
        check_vars(other);
        if (is_zero() || other.is_zero()) return std::nullopt;
        const auto& [lm, lc] = *terms_.rbegin();
        const auto& [om, oc] = *other.terms_.rbegin();
        if (lm != om) return std::nullopt;
        Coeff ratio = lc / oc;
        if (*this == other * ratio) return ratio;
        return std::nullopt;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += coeff_str(it->second);
            for (size_t v = 0; v < it->first.size(); ++v) {
                if (it->first[v] == 0) continue;
                out += "*" + vars_[v];
                if (it->first[v] > 1) out += "^" + std::to_string(it->first[v]);
            }
        }
        return out;
    }

  private:
    void check_vars(const Polynomial& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("Polynomial: mismatched variable sets");
    }

    void add_term(const Monomial& m, const Coeff& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!(c == Coeff(0))) terms_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (it->second == Coeff(0)) terms_.erase(it);
    }

    static std::string coeff_str(const mpq_class& c) { return c.get_str(); }
    template <typename T>
    static std::string coeff_str(const T& c) { return c.str(); }

    std::vector<std::string> vars_;
    std::map<Monomial, Coeff> terms_;
};

using RationalPoly = Polynomial<mpq_class>;

}  // namespace cubeprod
