#ifndef MONIDEAL_MONOMIAL_HPP
#define MONIDEAL_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "monideal/checked.hpp"
#include "monideal/errors.hpp"

namespace monideal {

// Dense exponent vector. The ring is carried by the enclosing ideal or
// passed alongside; a monomial only knows its length. The unit monomial
// is all-zero.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::int64_t> exponents)
        : e_(std::move(exponents)) {
        for (std::int64_t v : e_)
            if (v < 0)
                throw domain_error("negative exponent in monomial");
        deg_ = 0;
        for (std::int64_t v : e_)
            deg_ = checked_add(deg_, v);
    }

    static Monomial unit(std::size_t n) {
        return Monomial(std::vector<std::int64_t>(n, 0));
    }

    std::size_t size() const noexcept { return e_.size(); }
    std::int64_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::int64_t>& exponents() const noexcept { return e_; }
    std::int64_t total_degree() const noexcept { return deg_; }
    bool is_unit() const noexcept { return deg_ == 0; }

    // this | other
    bool divides(const Monomial& other) const {
        check_length(other);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i])
                return false;
        return true;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0)
                s.push_back(i);
        return s;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check_length(b);
        std::vector<std::int64_t> e(a.e_.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = checked_add(a.e_[i], b.e_[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

private:
    void check_length(const Monomial& other) const {
        if (e_.size() != other.e_.size())
            throw ring_mismatch("monomials have different variable counts");
    }

    std::vector<std::int64_t> e_;
    std::int64_t deg_ = 0;
};

// requires d | m
inline Monomial divide(const Monomial& m, const Monomial& d) {
    if (!d.divides(m))
        throw domain_error("monomial division with a non-divisor");
    std::vector<std::int64_t> e(m.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = m[i] - d[i];
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw ring_mismatch("monomials have different variable counts");
    std::vector<std::int64_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw ring_mismatch("monomials have different variable counts");
    std::vector<std::int64_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

// Total degree ascending, then lexicographic on the exponent vector.
// Fixes the canonical generator order everywhere.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree();
    return std::lexicographical_compare(a.exponents().begin(),
                                        a.exponents().end(),
                                        b.exponents().begin(),
                                        b.exponents().end());
}

} // namespace monideal

#endif
