#include "signedfam/constructions.hpp"

#include <algorithm>
#include <bit>

namespace signedfam {

namespace {

template <class Pred>
Family filter_universe(const Params& params, Pred keep) {
  std::vector<SignedSet> members;
  for_each_in_universe(params, [&](const SignedSet& f) {
    if (keep(f.mask())) members.push_back(f);
  });
  return Family(params, std::move(members));
}

int meet(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b); }

void check_h2_range(const Params& p, int c) {
  if (p.r() < p.t() + 2) throw RangeError("H2 needs r >= t+2");
  if (p.n() < p.r() + 2) throw RangeError("H2 needs n >= r+2");
  if (c < p.r() + 2 || c > std::min(2 * p.r() - p.t(), p.n()))
    throw RangeError("H2 needs r+2 <= c <= min(2r-t,n), got c = " + std::to_string(c));
}

} // namespace

Family build_h1(const Params& p, int ell) {
  const int t = p.t();
  if (p.r() < t + 1) throw RangeError("H1 needs r >= t+1");
  if (ell < t + 2 || ell > p.p())
    throw RangeError("H1 needs t+2 <= ell <= min(r+1,n), got ell = " + std::to_string(ell));
  const std::uint64_t mt = prefix_set(t, p).mask();
  const std::uint64_t ml = prefix_set(ell, p).mask();
  return filter_universe(p, [&](std::uint64_t f) {
    if ((f & mt) == mt) return meet(f, ml) >= t + 1;
    return meet(f, ml) == ell - 1;
  });
}

Family build_h2(const Params& p, int c) {
  check_h2_range(p, c);
  const int t = p.t(), r = p.r();
  const std::uint64_t mt = prefix_set(t, p).mask();
  const std::uint64_t mr = prefix_set(r, p).mask();
  const std::uint64_t tail = prefix_set(c, p).mask() & ~mr;
  return filter_universe(p, [&](std::uint64_t f) {
    const bool has_mt = (f & mt) == mt;
    if (has_mt && meet(f, mr) >= t + 1) return true;
    if ((f & mr) == mt && (f & tail) == tail) return true;
    return !has_mt && meet(f, mr) == r - 1 && meet(f, tail) == 1;
  });
}

Family build_h2_tail(const Params& p, int c) {
  check_h2_range(p, c);
  const std::uint64_t mt = prefix_set(p.t(), p).mask();
  const std::uint64_t mr = prefix_set(p.r(), p).mask();
  const std::uint64_t tail = prefix_set(c, p).mask() & ~mr;
  return filter_universe(p, [&](std::uint64_t f) { return (f & mr) == mt && (f & tail) == tail; });
}

Family build_star(const Params& p, const SignedSet& s) {
  if (s.size() != p.t())
    throw RangeError("a star is centred on a t-set; got " + std::to_string(s.size()) + " points");
  if (!s.valid_for(p.n(), p.k())) throw ValidityError("star centre " + s.to_string() + " is not valid for " + p.to_string());
  const std::uint64_t centre = s.mask();
  return filter_universe(p, [&](std::uint64_t f) { return (f & centre) == centre; });
}

} // namespace signedfam
