#ifndef COMMGRAPH_PRIMES_HPP
#define COMMGRAPH_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace commgraph
{

/// Distinct prime divisors in increasing order, by trial division.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

inline bool is_prime(std::uint64_t n)
{
  auto d = prime_divisors(n);
  return d.size() == 1 && d.front() == n;
}

} // namespace commgraph

#endif // COMMGRAPH_PRIMES_HPP
