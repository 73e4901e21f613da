#ifndef MONIDEAL_PARSER_HPP
#define MONIDEAL_PARSER_HPP

#include <string>
#include <string_view>

#include <cstdint>
#include <utility>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/ideal.hpp"
#include "monideal/monomial.hpp"
#include "monideal/persistence.hpp"
#include "monideal/prime.hpp"
#include "monideal/ring.hpp"

namespace monideal {

// Surface grammar (whitespace insignificant, positions are 1-based):
//
//   ring    := ident ("," ident)*
//   monom   := "1" | factor ("*" factor)*
//   factor  := ident ("^" uint)?
//   ideal   := "0" | monom ("," monom)*     (optionally in parentheses)
//   prime   := "(" ident ("," ident)* ")"
//
// Identifiers are a letter followed by letters, digits or underscores.
// Repeated factors multiply (x*x = x^2); a zero exponent contributes
// nothing. Juxtaposition ("xy") is not multiplication.

Ring parse_ring(std::string_view text);
Monomial parse_monomial(std::string_view text, const Ring& ring);
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);
MonomialPrime parse_prime(std::string_view text, const Ring& ring);

// Canonical, byte-deterministic text. parse(print_canonical(x)) == x.
std::string print_canonical(const Ring& ring);
std::string print_canonical(const Monomial& m, const Ring& ring);
std::string print_canonical(const MonomialIdeal& I);
std::string print_canonical(const MonomialPrime& p);

// JSON wire format, versioned with "format": 1.
// Ideals: { "format": 1, "ring": [names], "generators": [[exponents]] }.
std::string to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(std::string_view text);

std::string to_json(const MonomialPrime& p);
MonomialPrime prime_from_json(std::string_view text);

// Analysis reports. Pattern entries serialize as "eq"/"neq"; witnesses as
// [a, b, c] or null; associated primes as lists of variable names in ring
// order.
std::string to_json(const ColonPattern& pattern);
std::string to_json(const SpiReport& report);
std::string to_json(const FluctuationVerdict& verdict);
std::string to_json(const Decomposition& dec);
std::string
to_json(const std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>&
            ass_by_power,
        const Ring& ring);

} // namespace monideal

#endif
