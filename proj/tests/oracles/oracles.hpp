#pragma once

// Brute-force reference implementations used by the tests. Nothing here
// calls into the library under test except the conversions at the bottom.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/polynomial.hpp"
#include "reeskit/poset.hpp"

namespace oracle {

using Perm = std::vector<unsigned>;
/// Coefficients keyed by (t exponent, q exponent).
using Poly = std::map<std::pair<unsigned, unsigned>, long long>;
void add(Poly& p, unsigned t, unsigned q, long long c = 1);
long long eval(const Poly& p, long long t, long long q);

std::vector<Perm> all_permutations(unsigned n);
std::vector<Perm> rearrangements(std::vector<unsigned> multiset);
std::vector<Perm> words(unsigned n, unsigned m);

std::vector<unsigned> descent_positions(const Perm& w);
unsigned des(const Perm& w);
unsigned asc(const Perm& w);
unsigned maj(const Perm& w);
unsigned inv(const Perm& w);
unsigned exc(const Perm& w);
unsigned ai(const Perm& w);
unsigned aid(const Perm& w);

std::uint64_t derangement_number(unsigned n);
std::vector<Perm> derangements(unsigned n);
std::vector<unsigned> multiset_from(const std::vector<unsigned>& mu);
/// Bottom rows of the multiset derangements with top row sorted(mu).
std::vector<Perm> multiset_derangements(const std::vector<unsigned>& mu);
/// Excedances against the sorted top row.
unsigned multiset_exc(const Perm& bottom);
std::vector<Perm> smirnov(const std::vector<unsigned>& mu);
std::vector<Perm> parking_functions(unsigned n);
std::uint64_t noncrossing_partition_count(unsigned n);

/// Polynomials in q only (t exponent 0).
Poly q_integer(unsigned n);
Poly q_factorial(unsigned n);
Poly q_binomial(unsigned n, unsigned k);
Poly multiply(const Poly& a, const Poly& b);
Poly shift_t(const Poly& p, int by);

/// (1/(n+1)) sum_k C(n-1,k) sum over [n+1]^{n-k} of t^{des+k}.
Poly noncrossing_first_sum(unsigned n);
/// (-1)^n + (1/(n+1)) sum_r (-1)^r C(n+1,r) sum_k C(n-1-r,k) sum over [n+1]^{n-k-r} of t^{des+k}.
Poly noncrossing_second_sum(unsigned n);

/// An explicit finite poset: x <= y iff le[x][y].
struct Order {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le;
  std::size_t size() const { return names.size(); }
};
Order order_of(const reeskit::FinitePoset& p);
/// Rank as the longest chain below the element.
std::vector<unsigned> ranks(const Order& o);
/// Pairs (x, y) with rank x >= rank y; (x,y) <= (x',y') iff x <= x', y <= y'
/// and rank x' - rank x >= rank y' - rank y.
Order rees(const Order& p, const Order& q);
Order without(const Order& o, std::size_t element);
/// Möbius function by the defining recursion.
long long mobius(const Order& o, std::size_t x, std::size_t y);
/// All nonempty chains.
std::vector<std::vector<std::size_t>> chains(const Order& o);
/// Reduced Betti numbers of the order complex over F_p, dense elimination;
/// entry k + 1 holds dimension k.
std::vector<std::uint64_t> betti_mod_p(const Order& o, unsigned p);
long long reduced_euler(const Order& o);
/// Number of subspaces of F_2^n, by testing every subset of vectors.
std::uint64_t subspaces_of_f2(unsigned n);

/// The EL condition checked interval by interval from the definition.
/// `label(x, y)` labels covers of `o`; `leq` orders labels.
bool is_el(const Order& o, const std::function<std::vector<int>(std::size_t, std::size_t)>& label,
           const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& leq);

Poly from_library(const reeskit::StatPolynomial& p);

}  // namespace oracle
