#pragma once

#include <cstdint>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/prime.hpp"

namespace monideal {

// I + J: concatenate generators and minimalize.
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

// Expansion replaces each source variable x_j by a block of tuple[j] fresh
// variables.  Block (j, k) is named "<name(x_j)>_<k>", k = 1..tuple[j], and
// blocks appear in source-variable order.
class ExpansionSpec {
public:
    ExpansionSpec(Ring source, std::vector<std::int64_t> tuple);

    const Ring& source() const { return source_; }
    const Ring& target() const { return target_; }
    const std::vector<std::int64_t>& tuple() const { return tuple_; }
    std::size_t block_offset(std::size_t j) const { return offsets_[j]; }
    std::size_t block_size(std::size_t j) const {
        return static_cast<std::size_t>(tuple_[j]);
    }

private:
    Ring source_;
    std::vector<std::int64_t> tuple_;
    std::vector<std::size_t> offsets_;
    Ring target_;
};

// I*: for each generator x^a, the product over blocks j of all degree-a(j)
// monomials in block j's variables, summed over generators and minimalized.
MonomialIdeal expand(const MonomialIdeal& I, const ExpansionSpec& spec);

// π: x_{j,k} ↦ x_j; the source exponent of x_j is the block-j exponent sum.
Monomial contract_pi(const Monomial& m, const ExpansionSpec& spec);

struct WeightSpec {
    std::vector<std::int64_t> weights; // one per variable, all >= 1
    explicit WeightSpec(std::vector<std::int64_t> w);
};

// I_W: x_i ↦ x_i^{w_i} applied to every generator.  Scaling preserves the
// divisibility order, so minimality is preserved.
MonomialIdeal weight(const MonomialIdeal& I, const WeightSpec& spec);

// I(p): set every exponent outside p to zero, then read the result over the
// sub-ring on p's variables (names preserved, in index order).
MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p);

// Re-express an ideal over a sub-ring in a ring containing all its
// variables, matched by name.
MonomialIdeal embed(const MonomialIdeal& J, const Ring& R);

// J ⊆ I decided by checking J(p) ⊆ I(p) for every p ∈ Ass(R/I); equals
// direct containment.  Requires I nonzero and proper.
bool containment_via_localization(const MonomialIdeal& J,
                                  const MonomialIdeal& I);

} // namespace monideal
