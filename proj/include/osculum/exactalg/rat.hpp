#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace osculum {

// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

// Residue of r modulo prime p, or nullopt when p divides the denominator.
std::optional<std::uint64_t> rat_mod(const Rat& r, std::uint64_t p);

// Smallest rational n/d with |n|, d <= sqrt(m / 2) and n/d = u (mod m).
std::optional<Rat> rational_reconstruct(const mpz_class& u, const mpz_class& m);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace osculum
