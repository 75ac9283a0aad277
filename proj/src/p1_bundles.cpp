#include "hilbdim/p1_bundles.hpp"

#include <algorithm>
#include <numeric>

namespace hilbdim {

SplitBundle::SplitBundle(std::vector<long long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw InvalidArgument("split bundle needs at least one summand");
  std::sort(degrees_.begin(), degrees_.end());
}

long long SplitBundle::degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::string SplitBundle::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  return s + "}";
}

namespace {

void multicombinations(const std::vector<long long>& degrees, std::size_t start, long long left,
                       long long partial, std::vector<long long>& out) {
  if (left == 0) {
    out.push_back(partial);
    return;
  }
  for (std::size_t i = start; i < degrees.size(); ++i)
    multicombinations(degrees, i, left - 1, partial + degrees[i], out);
}

}  // namespace

SplitBundle sym(const SplitBundle& E, long long k) {
  if (k < 0) throw InvalidArgument("symmetric power needs k >= 0");
  std::vector<long long> out;
  multicombinations(E.degrees(), 0, k, 0, out);
  return SplitBundle(std::move(out));
}

SplitBundle twist(const SplitBundle& E, long long t) {
  std::vector<long long> out = E.degrees();
  for (auto& x : out) x += t;
  return SplitBundle(std::move(out));
}

SplitBundle tensor(const SplitBundle& E, const SplitBundle& F) {
  std::vector<long long> out;
  out.reserve(E.rank() * F.rank());
  for (long long x : E.degrees())
    for (long long y : F.degrees()) out.push_back(x + y);
  return SplitBundle(std::move(out));
}

SplitBundle dual(const SplitBundle& E) {
  std::vector<long long> out = E.degrees();
  for (auto& x : out) x = -x;
  return SplitBundle(std::move(out));
}

Cohomology cohomology(const SplitBundle& E) {
  Cohomology c{0, 0};
  for (long long a : E.degrees()) {
    if (a >= 0) c.h0 += a + 1;
    if (a <= -2) c.h1 += -a - 1;
  }
  return c;
}

FibrationDegrees derive_eb(long long d, long long g, int alpha) {
  if (alpha != 2 && alpha != 3) throw InvalidArgument("alpha must be 2 or 3");
  const long long b_num = d - d * alpha + 2 * g - 2 + 2 * alpha;
  const long long b_den = alpha - 1;
  const long long e_num = -2 * (g - 1 + alpha - d * alpha + d);
  const long long e_den = alpha * (alpha - 1);
  if (b_num % b_den != 0 || e_num % e_den != 0) {
    throw NonIntegral("(d, g, alpha) = (" + std::to_string(d) + ", " + std::to_string(g) + ", " +
                      std::to_string(alpha) + ") gives e = " + std::to_string(e_num) + "/" +
                      std::to_string(e_den) + ", b = " + std::to_string(b_num) + "/" +
                      std::to_string(b_den));
  }
  return {e_num / e_den, b_num / b_den};
}

bool check_scroll_p2_splitting(long long e1, long long a) { return 2 * a >= e1 && 2 * a <= e1 + 2; }

bool check_scroll_q_splitting(long long e11, long long e12, long long a, long long b) {
  return a == ceil_div(e12, 2) && b == ceil_div(e11, 2);
}

bool check_fibration_bound(int alpha, long long b, long long a1_lower) {
  return -alpha * a1_lower - 1 <= b;
}

A1Bound infer_a1_lower(int alpha, long long b, A1Hint hint) {
  if (hint == A1Hint::cited_a1_equals_one) return {1, A1Rule::cited_value};
  if ((alpha == 2 && b <= 1) || (alpha == 3 && b <= 2)) return {0, A1Rule::small_twist};
  return {-1, A1Rule::h1_vanishing};
}

std::string to_string(A1Rule rule) {
  switch (rule) {
    case A1Rule::cited_value:
      return "cited-value";
    case A1Rule::small_twist:
      return "small-twist";
    case A1Rule::h1_vanishing:
      return "h1-vanishing";
  }
  return "unknown";
}

}  // namespace hilbdim
