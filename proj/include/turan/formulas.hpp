// Closed-form Turan numbers and bounds for forbidden path packings and
// equibipartite forests, each returned with validity metadata.
#ifndef TURAN_FORMULAS_HPP
#define TURAN_FORMULAS_HPP

#include <functional>
#include <string>
#include <utility>

#include "turan/graph.hpp"

namespace turan {

// Reduced fraction, den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long num, long long den);
  static Rational whole(long long v) { return Rational(v, 1); }

  long long floor() const;
  bool operator==(const Rational&) const = default;
};

enum class BoundKind { exact, upper_bound, lower_bound };

struct FormulaResult {
  long long value = 0;  // floor(exact_rational), nonnegative
  Rational exact_rational;
  bool in_proved_range = false;
  bool conditional_on_erdos_sos = false;
  BoundKind kind = BoundKind::exact;
  std::string citation;
};

// ex(n, P_3) = floor(n/2); exact for every n.
FormulaResult ex_p3_single(long long n);

// Erdos-Gallai: ex(n, P_l) <= (l-2) n / 2. Upper bound, tight iff (l-1) | n.
FormulaResult erdos_gallai_bound(long long n, long long l);

// ex(n, k.P_3) = C(k-1,2) + (n-k+1)(k-1) + floor((n-k+1)/2);
// proved for n >= 7k (k = 1 holds for every n). Requires n >= 3k.
FormulaResult ex_k_p3(long long n, long long k);

// Gorgol's piecewise lower bound for k.P_3:
//   C(3k-1,2) + floor((n-3k+1)/2)            for 3k <= n < 5k-1,
//   the ex_k_p3 expression                    for n >= 5k-1.
FormulaResult gorgol_lower_p3(long long n, long long k);

// ex(n, k.P_l) = C(k floor(l/2) - 1, 2)
//              + (k floor(l/2) - 1)(n - k floor(l/2) + 1) + c_l,
// c_l = 1 for odd l, 0 for even l; proved for
// n >= 2l + 2kl(ceil(l/2)+1) C(l, floor(l/2)). Requires k >= 2, l >= 4.
FormulaResult ex_k_pl(long long n, long long k, long long l);

// ex(n, H) for an equibipartite forest H on 2l vertices with >= 2 tree
// components, conditional on the Erdos-Sos conjecture:
//   C(l-1,2) + (l-1)(n-l+1)  if H has a perfect matching,
//   (l-1)(n-l+1)             otherwise.
// The displayed validity threshold is n >= 3l^2 + 32 l^5 C(2l, l); the
// proof's lower-order terms are not recoverable, so in_proved_range uses
// the threshold as displayed.
FormulaResult ex_equibipartite_forest(long long n, const Graph& h);

// Codegree guarantee: in an (F1 u F2)-free graph on n vertices with m edges,
// any F1 copy (r = |V(F1)|) has t vertices with shared neighbourhood of size
// at least ((m' - (n-r)(t-1)) / (r-t+1)) / C(r,t), m' = m - ex_f2 - C(r,2).
// May be <= 0 (vacuous).
Rational badlemma_bound(long long n, long long m, long long r, long long t,
                        long long ex_f2);

// Edge counts of the two generic lower-bound constructions for forbidding
// k disjoint copies of a connected graph G on v vertices, given ex(., G):
//   first  = ex_g(n - kv + 1) + C(kv-1, 2)           (clique + extremal)
//   second = ex_g(n - k + 1) + C(k-1,2) + (k-1)(n-k+1)  (join with K_{k-1})
std::pair<long long, long long> gorgol_generic_lower(
    long long n, long long k, long long v,
    const std::function<long long(long long)>& ex_g);

}  // namespace turan

#endif  // TURAN_FORMULAS_HPP
