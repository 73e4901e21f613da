#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/prime.hpp"

namespace monideal {

// An irreducible monomial ideal (x_{i_1}^{a_1}, ..., x_{i_k}^{a_k}):
// distinct variables, positive exponents, stored sorted by variable index.
class IrreducibleComponent {
public:
    IrreducibleComponent(
        Ring ring, std::vector<std::pair<std::size_t, std::int64_t>> powers);

    const Ring& ring() const { return ring_; }
    const std::vector<std::pair<std::size_t, std::int64_t>>&
    pure_powers() const {
        return powers_;
    }

    MonomialIdeal to_ideal() const;
    MonomialPrime radical() const;

    bool operator==(const IrreducibleComponent& other) const;
    bool operator<(const IrreducibleComponent& other) const;

private:
    Ring ring_;
    std::vector<std::pair<std::size_t, std::int64_t>> powers_;
};

struct Decomposition {
    MonomialIdeal source;
    // Irredundant, in canonical order.  Irredundant irreducible
    // decompositions of a monomial ideal are unique, so this list is a
    // canonical invariant of the source ideal.
    std::vector<IrreducibleComponent> components;
};

// Irredundant irreducible decomposition.  Requires a nonzero proper ideal.
Decomposition irreducible_decomposition(const MonomialIdeal& I);

// Ass(R/I): the radicals of the irreducible components, sorted, deduplicated.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I);

// The inclusion-minimal members of Ass(R/I).
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);

} // namespace monideal
