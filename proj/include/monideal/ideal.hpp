#ifndef MONIDEAL_IDEAL_HPP
#define MONIDEAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monideal/monomial.hpp"
#include "monideal/ring.hpp"

namespace monideal {

// A monomial ideal held as its unique minimal generator set, in canonical
// order (total degree ascending, then lex on exponent vectors). Structural
// equality of representations coincides with ideal equality. The zero
// ideal has no generators; the unit ideal has the single all-zero one.
class MonomialIdeal {
public:
    static MonomialIdeal zero(Ring ring) {
        return MonomialIdeal(std::move(ring), {});
    }

    static MonomialIdeal unit(Ring ring) {
        std::size_t n = ring.size();
        return from_generators(std::move(ring), {Monomial::unit(n)});
    }

    // Minimalizes: divisibility-minimal subset, deduplicated, canonical order.
    static MonomialIdeal from_generators(Ring ring,
                                         std::vector<Monomial> gens);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept {
        return gens_.size() == 1 && gens_[0].is_unit();
    }
    // proper = different from the whole ring
    bool is_proper() const noexcept { return !is_unit(); }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

    // Exact memoization key: ring names plus generator exponents.
    std::string canonical_key() const;
    // FNV-1a hash of the canonical key, as 16 hex digits.
    std::uint64_t fingerprint() const;
    std::string fingerprint_hex() const;

private:
    MonomialIdeal(Ring ring, std::vector<Monomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    Ring ring_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(std::move(ring), std::move(gens));
}

// true iff some generator of I divides m
bool is_member(const Monomial& m, const MonomialIdeal& I);

// J subseteq I
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

// mutual containment; by canonicity, identical representations
bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// (I : m), computed as minimalize{ u / gcd(u, m) }
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m);

// (I : J), the intersection over generators v of J of (I : v).
// J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal radical(const MonomialIdeal& I);

// union of the generators' supports
std::vector<std::size_t> support(const MonomialIdeal& I);

} // namespace monideal

#endif
