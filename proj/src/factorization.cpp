#include "idealgraph/factorization.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace idealgraph {

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n = 0 has no prime factorization");
    if (n > kMaxN) throw std::out_of_range("factorize: n exceeds 2^63 - 1");

    Factorization f;
    f.n = n;

    std::uint64_t m = n;
    auto divide_out = [&m](std::uint64_t p) {
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        return e;
    };

    for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{3}}) {
        if (std::uint32_t e = divide_out(p)) f.primes.push_back({p, e});
    }
    // 6k +- 1 wheel; candidates need testing only up to sqrt(remaining m)
    for (std::uint64_t p = 5; p <= m / p;) {
        if (std::uint32_t e = divide_out(p)) f.primes.push_back({p, e});
        p += 2;
        if (p <= m / p) {
            if (std::uint32_t e = divide_out(p)) f.primes.push_back({p, e});
        }
        p += 4;
    }
    if (m > 1) f.primes.push_back({m, 1});

    return f;
}

std::uint64_t divisor_value(const Divisor& d, const Factorization& f) {
    assert(d.exponents.size() == f.primes.size());
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        assert(d.exponents[i] <= f.primes[i].exponent);
        for (std::uint32_t e = 0; e < d.exponents[i]; ++e) v *= f.primes[i].prime;
    }
    return v;
}

Divisor divisor_lcm(const Divisor& a, const Divisor& b) {
    assert(a.exponents.size() == b.exponents.size());
    Divisor r;
    r.exponents.resize(a.exponents.size());
    for (std::size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    return r;
}

Divisor divisor_gcd(const Divisor& a, const Divisor& b) {
    assert(a.exponents.size() == b.exponents.size());
    Divisor r;
    r.exponents.resize(a.exponents.size());
    for (std::size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] = std::min(a.exponents[i], b.exponents[i]);
    return r;
}

bool is_unit(const Divisor& d) {
    return std::all_of(d.exponents.begin(), d.exponents.end(),
                       [](std::uint32_t e) { return e == 0; });
}

bool is_full(const Divisor& d, const Factorization& f) {
    assert(d.exponents.size() == f.primes.size());
    for (std::size_t i = 0; i < d.exponents.size(); ++i)
        if (d.exponents[i] != f.primes[i].exponent) return false;
    return true;
}

std::uint64_t divisor_count(const Factorization& f) {
    std::uint64_t tau = 1;
    for (const auto& pp : f.primes) tau *= pp.exponent + 1;
    return tau;
}

std::vector<Divisor> nontrivial_divisors(const Factorization& f) {
    const std::size_t k = f.primes.size();
    std::uint64_t tau = divisor_count(f);
    if (tau <= 2) return {};

    std::vector<std::pair<std::uint64_t, Divisor>> all;
    all.reserve(tau - 2);

    // mixed-radix enumeration of all exponent vectors
    Divisor d;
    d.exponents.assign(k, 0);
    while (true) {
        if (!is_unit(d) && !is_full(d, f)) all.emplace_back(divisor_value(d, f), d);

        std::size_t i = 0;
        while (i < k && d.exponents[i] == f.primes[i].exponent) {
            d.exponents[i] = 0;
            ++i;
        }
        if (i == k) break;
        ++d.exponents[i];
    }

    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Divisor> out;
    out.reserve(all.size());
    for (auto& [v, dv] : all) out.push_back(std::move(dv));
    return out;
}

std::string format_factorization(const Factorization& f) {
    if (f.primes.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f.primes.size(); ++i) {
        if (i) s += " * ";
        s += std::to_string(f.primes[i].prime);
        if (f.primes[i].exponent > 1) s += "^" + std::to_string(f.primes[i].exponent);
    }
    return s;
}

}  // namespace idealgraph
