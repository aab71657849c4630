#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idealgraph {

struct PrimePower {
    std::uint64_t prime = 2;
    std::uint32_t exponent = 1;

    bool operator==(const PrimePower&) const = default;
};

// n = prod primes[i].prime ^ primes[i].exponent, entries sorted strictly
// ascending by prime. Empty for n = 1.
struct Factorization {
    std::vector<PrimePower> primes;
    std::uint64_t n = 1;

    std::size_t prime_count() const { return primes.size(); }

    bool operator==(const Factorization&) const = default;
};

// Exponent vector (e1,...,ek), 0 <= ei <= alpha_i, relative to a governing
// Factorization. Denotes the divisor prod p_i^e_i, i.e. the ideal it
// generates in Z_n. gcd/lcm of divisors are componentwise min/max.
struct Divisor {
    std::vector<std::uint32_t> exponents;

    bool operator==(const Divisor&) const = default;
};

inline constexpr std::uint64_t kMaxN = 0x7fffffffffffffffULL;  // 2^63 - 1

// Deterministic trial division. Throws std::invalid_argument for n = 0 and
// std::out_of_range for n > 2^63 - 1.
Factorization factorize(std::uint64_t n);

std::uint64_t divisor_value(const Divisor& d, const Factorization& f);

Divisor divisor_lcm(const Divisor& a, const Divisor& b);
Divisor divisor_gcd(const Divisor& a, const Divisor& b);

// True when every exponent is zero (the divisor 1).
bool is_unit(const Divisor& d);
// True when the exponent vector equals (alpha_1,...,alpha_k) (the divisor n).
bool is_full(const Divisor& d, const Factorization& f);

// All divisors of n except 1 and n, sorted ascending by integer value.
// Size is tau(n) - 2 for n > 1, empty for n = 1 and n prime.
std::vector<Divisor> nontrivial_divisors(const Factorization& f);

// tau(n) = prod (alpha_i + 1)
std::uint64_t divisor_count(const Factorization& f);

// "2^2 * 3" style; "1" for the empty product.
std::string format_factorization(const Factorization& f);

}  // namespace idealgraph
