#include "turan/formulas.hpp"

#include <limits>
#include <numeric>

#include "turan/treelab.hpp"

namespace turan {

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

constexpr long long kSaturated = std::numeric_limits<long long>::max();

// Saturating C(a, b); anything above ~4.6e18 collapses to kSaturated.
long long binom_sat(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (long long i = 1; i <= b; ++i) {
    r = r * static_cast<unsigned __int128>(a - b + i);
    r /= static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(kSaturated) / 4) return kSaturated;
  }
  return static_cast<long long>(r);
}

long long mul_sat(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

long long add_sat(long long a, long long b) {
  if (a > kSaturated - b) return kSaturated;
  return a + b;
}

}  // namespace

Rational::Rational(long long num, long long den) : num(num), den(den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (this->den < 0) {
    this->num = -this->num;
    this->den = -this->den;
  }
  long long g = std::gcd(this->num < 0 ? -this->num : this->num, this->den);
  if (g > 1) {
    this->num /= g;
    this->den /= g;
  }
}

long long Rational::floor() const {
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

FormulaResult ex_p3_single(long long n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  FormulaResult r;
  r.exact_rational = Rational(n, 2);
  r.value = n / 2;
  r.in_proved_range = true;
  r.kind = BoundKind::exact;
  r.citation = "P3";
  return r;
}

FormulaResult erdos_gallai_bound(long long n, long long l) {
  if (l < 2) throw DomainError("path length l must be at least 2");
  if (n < 0) throw DomainError("n must be nonnegative");
  FormulaResult r;
  r.exact_rational = Rational((l - 2) * n, 2);
  r.value = r.exact_rational.floor();
  r.in_proved_range = true;
  r.kind = BoundKind::upper_bound;
  r.citation = "erdos-gallai";
  return r;
}

FormulaResult ex_k_p3(long long n, long long k) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (n < 3 * k)
    throw DomainError("n must be at least 3k (k disjoint P3 do not fit)");
  FormulaResult r;
  long long value = choose2(k - 1) + (n - k + 1) * (k - 1) + (n - k + 1) / 2;
  r.value = value;
  r.exact_rational = Rational::whole(value);
  r.in_proved_range = (k == 1) || (n >= 7 * k);
  r.kind = BoundKind::exact;
  r.citation = "kP3";
  return r;
}

FormulaResult gorgol_lower_p3(long long n, long long k) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (n < 3 * k)
    throw DomainError("n must be at least 3k (k disjoint P3 do not fit)");
  FormulaResult r;
  long long value;
  if (n < 5 * k - 1)
    value = choose2(3 * k - 1) + (n - 3 * k + 1) / 2;
  else
    value = choose2(k - 1) + (n - k + 1) * (k - 1) + (n - k + 1) / 2;
  r.value = value;
  r.exact_rational = Rational::whole(value);
  r.in_proved_range = true;
  r.kind = BoundKind::lower_bound;
  r.citation = "gorgol-lower";
  return r;
}

FormulaResult ex_k_pl(long long n, long long k, long long l) {
  if (k <= 1)
    throw DomainError("k must be at least 2 (for k = 1 use erdos_gallai_bound)");
  if (l <= 3)
    throw DomainError("l must be at least 4 (for l = 3 use ex_k_p3)");
  long long t = k * (l / 2) - 1;
  if (n < t)
    throw DomainError("n must be at least k*floor(l/2) - 1");
  long long c_l = (l % 2 == 1) ? 1 : 0;
  FormulaResult r;
  long long value = choose2(t) + t * (n - t) + c_l;
  r.value = value;
  r.exact_rational = Rational::whole(value);
  long long threshold = add_sat(
      2 * l, mul_sat(mul_sat(2 * k * l, (l + 1) / 2 + 1), binom_sat(l, l / 2)));
  r.in_proved_range = n >= threshold;
  r.kind = BoundKind::exact;
  r.citation = "kPl";
  return r;
}

FormulaResult ex_equibipartite_forest(long long n, const Graph& h) {
  ForestInfo info = validate_forest(h);
  long long l = info.l;
  if (n < l) throw DomainError("n must be at least l = |V(H)|/2");
  FormulaResult r;
  long long value = (l - 1) * (n - l + 1);
  if (info.has_perfect_matching) value += choose2(l - 1);
  r.value = value;
  r.exact_rational = Rational::whole(value);
  long long threshold =
      add_sat(3 * l * l,
              mul_sat(mul_sat(32, mul_sat(mul_sat(l, l), mul_sat(l, mul_sat(l, l)))),
                      binom_sat(2 * l, l)));
  r.in_proved_range = n >= threshold;
  r.conditional_on_erdos_sos = true;
  r.kind = BoundKind::exact;
  r.citation = "equibipartite-forest";
  return r;
}

Rational badlemma_bound(long long n, long long m, long long r, long long t,
                        long long ex_f2) {
  if (t < 1 || t > r || r > n)
    throw DomainError("parameters must satisfy 1 <= t <= r <= n");
  if (r > 60) throw DomainError("r above 60 is not supported (C(r,t) overflows)");
  long long m_prime = m - ex_f2 - choose2(r);
  long long num = m_prime - (n - r) * (t - 1);
  long long den = mul_sat(r - t + 1, binom_sat(r, t));
  if (den == kSaturated) throw DomainError("denominator overflow");
  return Rational(num, den);
}

std::pair<long long, long long> gorgol_generic_lower(
    long long n, long long k, long long v,
    const std::function<long long(long long)>& ex_g) {
  if (k < 1 || v < 1) throw DomainError("k and v must be at least 1");
  if (n < k * v) throw DomainError("n must be at least k*v");
  long long first = ex_g(n - k * v + 1) + choose2(k * v - 1);
  long long second = ex_g(n - k + 1) + choose2(k - 1) + (k - 1) * (n - k + 1);
  return {first, second};
}

}  // namespace turan
