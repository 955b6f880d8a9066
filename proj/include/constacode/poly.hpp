/**
 * @file poly.hpp
 * @brief Dense exact univariate polynomials over a Field.
 *
 * Coefficients are stored low degree first with no trailing zeros; the zero
 * polynomial has an empty coefficient sequence. All binary operations require
 * both operands to share one Field context.
 */
#ifndef CONSTACODE_POLY_HPP
#define CONSTACODE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "constacode/gf.hpp"

namespace constacode {

class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr f) : F_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<FE> coeffs) : F_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly constant(FieldPtr f, const FE& a) {
        Poly r(f);
        if (!f->is_zero(a)) r.c_ = {a};
        return r;
    }
    static Poly x(FieldPtr f) {
        Poly r(f);
        r.c_ = {f->zero(), f->one()};
        return r;
    }
    /// x^n - lambda
    static Poly binomial(FieldPtr f, u64 n, const FE& lambda) {
        Poly r(f);
        r.c_.assign(n + 1, f->zero());
        r.c_[0] = f->neg(lambda);
        r.c_[n] = f->one();
        r.trim();
        return r;
    }
    /// x - a
    static Poly x_minus(FieldPtr f, const FE& a) {
        Poly r(f);
        r.c_ = {f->neg(a), f->one()};
        r.trim();
        return r;
    }

    const FieldPtr& field() const { return F_; }
    const std::vector<FE>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && F_->is_one(c_[0]); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const FE& lead() const {
        if (c_.empty()) throw std::invalid_argument("lead of zero polynomial");
        return c_.back();
    }
    FE coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_->zero(); }
    bool is_monic() const { return !c_.empty() && F_->is_one(c_.back()); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.F_ == b.F_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator+(const Poly& o) const { return wrap(detail::FAlg::add(ops(), ctx(o), o.c_)); }
    Poly operator-(const Poly& o) const { return wrap(detail::FAlg::sub(ops(), ctx(o), o.c_)); }
    Poly operator*(const Poly& o) const { return wrap(detail::FAlg::mul(ops(), ctx(o), o.c_)); }

    Poly scaled(const FE& a) const { return wrap(detail::FAlg::scale(ops(), c_, a)); }

    std::pair<Poly, Poly> divrem(const Poly& o) const {
        std::vector<FE> q, r;
        detail::FAlg::divrem(ops(), ctx(o), o.c_, q, r);
        return {wrap(std::move(q)), wrap(std::move(r))};
    }
    Poly operator/(const Poly& o) const {
        auto [q, r] = divrem(o);
        if (!r.is_zero()) throw std::invalid_argument("polynomial division with nonzero remainder");
        return q;
    }
    Poly operator%(const Poly& o) const { return divrem(o).second; }
    bool divides(const Poly& o) const { return o.divrem(*this).second.is_zero(); }

    /// Monic gcd; gcd(f, 0) is the monic normalization of f.
    Poly gcd(const Poly& o) const { return wrap(detail::FAlg::gcd_monic(ops(), ctx(o), o.c_)); }

    Poly pow(u128 e) const {
        Poly r = constant(F_, F_->one());
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e > 0) b = b * b;
        }
        return r;
    }

    Poly modpow(u128 e, const Poly& m) const { return wrap(detail::FAlg::modpow(ops(), ctx(m), e, m.c_)); }

    FE eval(const FE& a) const { return detail::FAlg::eval(ops(), c_, a); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(F_);
        std::vector<FE> d(c_.size() - 1, F_->zero());
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_->mul(c_[i], F_->from_uint(i % F_->characteristic()));
        return wrap(std::move(d));
    }

    /// f(x^t)
    Poly inflate(u64 t) const {
        if (t == 0) throw std::invalid_argument("inflate: t must be positive");
        if (c_.empty()) return Poly(F_);
        std::vector<FE> d(u64(c_.size() - 1) * t + 1, F_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) d[i * t] = c_[i];
        return wrap(std::move(d));
    }

    /// Coefficient-wise image under a map on elements (e.g. a Frobenius).
    template <class Fn>
    Poly map_coeffs(Fn&& fn) const {
        std::vector<FE> d = c_;
        for (auto& e : d) e = fn(e);
        return wrap(std::move(d));
    }

    /// Lift into a tower extension of this polynomial's field.
    Poly lift_to(const FieldPtr& ext) const {
        if (ext->base() != F_) throw std::invalid_argument("lift_to: target is not an extension of the context");
        std::vector<FE> d(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) d[i] = ext->embed(c_[i]);
        return Poly(ext, std::move(d));
    }

    /// Project a polynomial whose coefficients all lie in the base field.
    Poly project_to_base() const {
        const FieldPtr b = F_->base();
        if (!b) throw std::logic_error("project_to_base: prime-rooted context");
        std::vector<FE> d(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!F_->in_base(c_[i]))
                throw VerificationError("coefficient does not lie in the base field");
            d[i] = F_->to_base(c_[i]);
        }
        return Poly(b, std::move(d));
    }

    std::string str(const std::string& var = "x") const;

  private:
    detail::FOps ops() const { return detail::FOps{F_.get()}; }
    const std::vector<FE>& ctx(const Poly& o) const {
        if (F_ != o.F_) throw std::invalid_argument("polynomial context mismatch");
        return c_;
    }
    Poly wrap(std::vector<FE> v) const { return Poly(F_, std::move(v)); }
    void trim() {
        while (!c_.empty() && F_->is_zero(c_.back())) c_.pop_back();
    }

    FieldPtr F_;
    std::vector<FE> c_;
};

/// Leading-coefficient normalization; same roots, monic result.
inline Poly monic_hat(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("monic_hat of zero polynomial");
    if (f.is_monic()) return f;
    return f.scaled(f.field()->inv(f.lead()));
}

/// Reciprocal f* = f(0)^{-1} x^{deg f} f(1/x); requires f(0) != 0.
/// Always monic; an involution on monic polynomials.
inline Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal of zero polynomial");
    if (f.field()->is_zero(f.coeffs()[0])) throw std::invalid_argument("reciprocal: x divides the polynomial");
    std::vector<FE> rev(f.coeffs().rbegin(), f.coeffs().rend());
    Poly r(f.field(), std::move(rev));
    return monic_hat(r);
}

/// Substitution x -> a x (coefficient i picks up a^i); requires a != 0.
inline Poly scale_substitute(const Poly& f, const FE& a) {
    const auto& K = f.field();
    if (K->is_zero(a)) throw std::invalid_argument("scale_substitute: zero scale");
    std::vector<FE> d = f.coeffs();
    FE pw = K->one();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) pw = K->mul(pw, a);
        d[i] = K->mul(d[i], pw);
    }
    return Poly(K, std::move(d));
}

/// Canonical order: by degree, then coefficient sequences low degree first.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return fe_less(ca[i], cb[i]);
    }
    return false;
}

inline std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (F_->is_zero(c_[i])) continue;
        if (!out.empty()) out += " + ";
        std::string coef;
        if (F_->degree() == 1) {
            coef = std::to_string(c_[i][0]);
        } else {
            coef = "[";
            for (std::size_t j = 0; j < c_[i].size(); ++j) {
                if (j) coef += ",";
                coef += std::to_string(c_[i][j]);
            }
            coef += "]";
        }
        if (i == 0) {
            out += coef;
        } else {
            if (!(F_->degree() == 1 && c_[i][0] == 1)) out += coef + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace constacode

#endif  // CONSTACODE_POLY_HPP
