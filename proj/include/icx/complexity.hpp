#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace icx {

/* Table entries are one byte.  127 doubles as the "not yet known" marker
   during the sieve; it is a safe cap because f(n) <= 3*log2(n) < 127 for
   all n < 2^42, far beyond what fits in memory here. */
using value_t = std::uint8_t;
inline constexpr value_t kValueCap = 127;

/* E(k) values above this are clamped so that E(a) + E(b) never overflows
   a uint64.  Exact for k <= 117, which covers every table the cap allows. */
inline constexpr std::uint64_t kMaxProductClamp = std::uint64_t{1} << 62;

/// Exact complexity counts f(n) for 1..limit.  Immutable once built.
class ComplexityTable {
 public:
  std::uint64_t limit() const { return limit_; }

  /// f(n) for 1 <= n <= limit (unchecked fast path).
  value_t operator[](std::uint64_t n) const { return values_[n]; }

  /// f(n) with range checking; throws std::out_of_range.
  value_t at(std::uint64_t n) const;

  const std::vector<value_t>& raw() const { return values_; }

  /// Builds a table directly from raw values (values[0] is ignored).
  static ComplexityTable from_values(std::vector<value_t> values);

 private:
  friend ComplexityTable brute_force_table(std::uint64_t n_max);
  template <class SumLimit>
  friend ComplexityTable compute_table_with_limit(std::uint64_t n_max,
                                                  SumLimit&& sum_limit);

  explicit ComplexityTable(std::uint64_t limit)
      : limit_(limit), values_(limit + 1, kValueCap) {
    if (limit >= 1) values_[1] = 1;
  }

  std::uint64_t limit_;
  std::vector<value_t> values_;  // index 0 unused, never read
};

/// E(k): the largest product of positive integers summing to k (OEIS A000792).
/// E(0) = E(1) = 1, E(2) = 2, E(4) = 4; otherwise factors of 3 are extracted
/// first.  Values are clamped at kMaxProductClamp (k > 117).
std::uint64_t max_product(unsigned k);

namespace detail {

constexpr std::uint64_t max_product_at(unsigned k) {
  std::uint64_t result = 1;
  while (k >= 5 || k == 3) {
    if (result > kMaxProductClamp / 3) return kMaxProductClamp;
    result *= 3;
    k -= 3;
  }
  std::uint64_t shifted = result << (k / 2);
  return shifted > kMaxProductClamp ? kMaxProductClamp : shifted;
}

constexpr auto make_max_product_table() {
  std::array<std::uint64_t, 2 * std::size_t{kValueCap} + 2> t{};
  for (unsigned k = 0; k < t.size(); ++k) t[k] = max_product_at(k);
  return t;
}

// Indexed by k up to 2*cap+1 so that E(target - k) never leaves the table.
inline constexpr auto kMaxProductTable = make_max_product_table();

}  // namespace detail

/// Inclusive upper limit for the summand loop at n: with target = f(n-1),
/// decrement k from target/2 until E(k) + E(target-k) >= n and return E(k).
/// Requires 2 <= n <= table.limit() and the table exact on 1..n-1.
std::uint64_t kmax(std::uint64_t n, const ComplexityTable& table);

/// Quadratic oracle: all divisors 2 <= d <= sqrt(n) and all summands
/// 1 <= a <= n/2.  Rejects n_max outside [1, 10^5].
ComplexityTable brute_force_table(std::uint64_t n_max);

/// Sieve with a caller-supplied clamp on the summand loop.  The clamp gets
/// (n, limitm) and returns the limit actually used; compute_table passes the
/// identity.  Entries stay exact as long as the clamp never cuts below the
/// best summand, which the improvement experiments check empirically.
template <class SumLimit>
ComplexityTable compute_table_with_limit(std::uint64_t n_max,
                                         SumLimit&& sum_limit) {
  ComplexityTable table(n_max);
  auto& f = table.values_;
  const auto& ek = detail::kMaxProductTable;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    unsigned fn = f[n];
    const unsigned target = f[n - 1];
    if (target + 1 < fn) fn = target + 1;
    unsigned k = target / 2;
    while (ek[k] + ek[target - k] < n) --k;
    const std::uint64_t limitm = sum_limit(n, ek[k]);
    for (std::uint64_t m = 6; m <= limitm; ++m) {
      const unsigned s = unsigned(f[m]) + unsigned(f[n - m]);
      if (s < fn) fn = s;
    }
    f[n] = value_t(fn);
    for (std::uint64_t m = 2, mn = 2 * n; m <= n && mn <= n_max; ++m, mn += n) {
      const unsigned p = fn + unsigned(f[m]);
      if (p < f[mn]) f[mn] = value_t(p);
    }
  }
  return table;
}

/// Exact f(n) for all n <= n_max via the forward sieve.
ComplexityTable compute_table(std::uint64_t n_max);

/// f(n) - 3*log3(n), the defect.  Non-negative; tiny negative rounding
/// residue at exact powers of 3 is clamped to zero.
double defect(std::uint64_t n, const ComplexityTable& table);

}  // namespace icx
