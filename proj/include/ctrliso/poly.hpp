#pragma once

#include <vector>

#include "ctrliso/numeric.hpp"

namespace ctrliso {

// Univariate polynomial, coefficients by ascending degree. Canonical form: no
// trailing zero coefficients; the zero polynomial stores none.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

    static Poly monomial(int degree, T coeff = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    T leading() const { return is_zero() ? T(0) : c_.back(); }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
        return Poly(std::move(out));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> out(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(out));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace ctrliso
