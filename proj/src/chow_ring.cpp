#include "hilbdim/chow_ring.hpp"

#include <algorithm>
#include <numeric>

namespace hilbdim {

namespace {

int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

Monomial add(const Monomial& a, const Monomial& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// Graded total class truncated at the ring dimension; slot k holds degree k.
using TotalClass = std::vector<CycleClass>;

TotalClass one_plus(const RingHandle& ring, const CycleClass& x) {
  TotalClass t;
  for (int k = 0; k <= ring->dimension(); ++k) t.push_back(CycleClass::zero(ring, k));
  t[0] = CycleClass::unit(ring);
  t[x.degree()] += x;
  return t;
}

TotalClass times(const TotalClass& a, const TotalClass& b) {
  const RingHandle& ring = a.front().ring();
  const int dim = ring->dimension();
  TotalClass out;
  for (int k = 0; k <= dim; ++k) out.push_back(CycleClass::zero(ring, k));
  for (int i = 0; i <= dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= dim; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += mul(a[i], b[j]);
    }
  }
  return out;
}

}  // namespace

RingHandle make_ring(const AmbientPreset& preset) {
  std::shared_ptr<Ring> ring(new Ring());
  ring->preset_ = preset;
  if (const auto* p = std::get_if<ScrollP2Preset>(&preset)) {
    ring->kind_ = Ring::Kind::scroll_p2;
    ring->dimension_ = 3;
    ring->generator_count_ = 2;
    ring->names_ = {"xi", "h"};
    ring->point_ = {1, 2, 0};
    ring->nilpotency_ = {0, 3, 1};
    ring->rank_ = 2;
    ring->grothendieck_ = {{Integer(p->e1), {1, 1, 0}}, {Integer(-p->e2), {0, 2, 0}}};
  } else if (const auto* q = std::get_if<ScrollQPreset>(&preset)) {
    ring->kind_ = Ring::Kind::scroll_q;
    ring->dimension_ = 3;
    ring->generator_count_ = 3;
    ring->names_ = {"xi", "h1", "h2"};
    ring->point_ = {1, 1, 1};
    ring->nilpotency_ = {0, 2, 2};
    ring->rank_ = 2;
    ring->grothendieck_ = {{Integer(q->e11), {1, 1, 0}},
                           {Integer(q->e12), {1, 0, 1}},
                           {Integer(-q->e2), {0, 1, 1}}};
  } else {
    auto bundle = std::get<BundleP1Preset>(preset);
    if (bundle.alpha != 2 && bundle.alpha != 3) {
      throw InvalidArgument("fibre degree alpha must be 2 or 3, got " +
                            std::to_string(bundle.alpha));
    }
    if (bundle.a.size() != 4) {
      throw InvalidArgument("BundleP1 needs a rank-4 splitting, got " +
                            std::to_string(bundle.a.size()) + " degrees");
    }
    std::sort(bundle.a.begin(), bundle.a.end());
    ring->preset_ = bundle;
    ring->kind_ = Ring::Kind::bundle_p1;
    ring->dimension_ = 4;
    ring->generator_count_ = 2;
    ring->names_ = {"H", "f"};
    ring->point_ = {3, 1, 0};
    ring->nilpotency_ = {0, 2, 1};
    ring->rank_ = 4;
    ring->bundle_degree_ = std::accumulate(bundle.a.begin(), bundle.a.end(), 0LL);
    ring->grothendieck_ = {{Integer(ring->bundle_degree_), {3, 1, 0}}};
  }
  return ring;
}

std::map<Monomial, Integer> Ring::reduce(const Monomial& m) const {
  std::map<Monomial, Integer> done;
  std::vector<std::pair<Monomial, Integer>> work{{m, Integer(1)}};
  while (!work.empty()) {
    auto [mono, coeff] = work.back();
    work.pop_back();
    bool vanishes = false;
    for (int i = 1; i < 3; ++i) {
      if (nilpotency_[i] > 0 && mono[i] >= nilpotency_[i]) vanishes = true;
    }
    if (vanishes || coeff == 0) continue;
    if (mono[0] >= rank_) {
      Monomial rest = mono;
      rest[0] -= rank_;
      for (const auto& [c, r] : grothendieck_) {
        if (c != 0) work.emplace_back(add(rest, r), coeff * c);
      }
      continue;
    }
    auto& slot = done[mono];
    slot += coeff;
    if (slot == 0) done.erase(mono);
  }
  return done;
}

CycleClass CycleClass::zero(RingHandle ring, int degree) { return CycleClass(std::move(ring), degree); }

CycleClass CycleClass::unit(RingHandle ring) {
  CycleClass c(std::move(ring), 0);
  c.terms_[{0, 0, 0}] = 1;
  return c;
}

CycleClass CycleClass::generator(RingHandle ring, int index) {
  if (index < 0 || index >= ring->generator_count()) {
    throw InvalidArgument("generator index out of range");
  }
  Monomial m{};
  m[index] = 1;
  return from_terms(std::move(ring), 1, {{m, Integer(1)}});
}

CycleClass CycleClass::from_terms(RingHandle ring, int degree,
                                  const std::map<Monomial, Integer>& terms) {
  if (degree < 0 || degree > ring->dimension()) {
    throw RingError("degree " + std::to_string(degree) + " outside ring range");
  }
  CycleClass c(std::move(ring), degree);
  for (const auto& [m, coeff] : terms) {
    if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }) ||
        (m[2] != 0 && c.ring_->generator_count() < 3)) {
      throw InvalidArgument("monomial uses an absent generator");
    }
    if (total_degree(m) != degree) throw InvalidArgument("inhomogeneous term in cycle class");
    c.add_reduced(m, coeff);
  }
  return c;
}

void CycleClass::add_reduced(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  for (const auto& [nm, nc] : ring_->reduce(m)) {
    auto& slot = terms_[nm];
    slot += nc * c;
    if (slot == 0) terms_.erase(nm);
  }
}

Integer CycleClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

CycleClass& CycleClass::operator+=(const CycleClass& o) {
  if (ring_ != o.ring_) throw RingError("cannot add classes from different rings");
  if (degree_ != o.degree_) throw RingError("cannot add classes of different degree");
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& o) { return *this += o * Integer(-1); }

CycleClass& CycleClass::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CycleClass operator*(const CycleClass& a, const CycleClass& b) { return mul(a, b); }

bool operator==(const CycleClass& a, const CycleClass& b) {
  return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string CycleClass::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest fibre power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string body;
    for (int i = 0; i < ring_->generator_count(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += ring_->generator_names()[i];
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    if (body.empty()) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += body;
    }
  }
  return s;
}

CycleClass mul(const CycleClass& x, const CycleClass& y) {
  if (x.ring() != y.ring()) throw RingError("cannot multiply classes from different rings");
  const int degree = x.degree() + y.degree();
  if (degree > x.ring()->dimension()) {
    throw RingError("product degree " + std::to_string(degree) + " exceeds ring dimension " +
                    std::to_string(x.ring()->dimension()));
  }
  std::map<Monomial, Integer> raw;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) raw[add(mx, my)] += cx * cy;
  return CycleClass::from_terms(x.ring(), degree, raw);
}

Integer evaluate(const CycleClass& x) {
  if (x.degree() != x.ring()->dimension()) {
    throw RingError("evaluate needs a class of degree " + std::to_string(x.ring()->dimension()) +
                    ", got " + std::to_string(x.degree()));
  }
  return x.coefficient(x.ring()->evaluation_monomial());
}

CanonicalData canonical_class(const RingHandle& ring) {
  const CycleClass g0 = CycleClass::generator(ring, 0);
  const CycleClass g1 = CycleClass::generator(ring, 1);
  switch (ring->kind()) {
    case Ring::Kind::scroll_p2: {
      const auto& p = std::get<ScrollP2Preset>(ring->preset());
      return {Integer(-2) * g0 + Integer(p.e1 - 3) * g1, std::nullopt};
    }
    case Ring::Kind::scroll_q: {
      const auto& q = std::get<ScrollQPreset>(ring->preset());
      const CycleClass g2 = CycleClass::generator(ring, 2);
      return {Integer(-2) * g0 + Integer(q.e11 - 2) * g1 + Integer(q.e12 - 2) * g2, std::nullopt};
    }
    case Ring::Kind::bundle_p1: {
      const auto& b = std::get<BundleP1Preset>(ring->preset());
      const long long e = ring->bundle_degree();
      return {Integer(-4) * g0 + Integer(e - 2) * g1, Integer(b.alpha) * g0 + Integer(b.b) * g1};
    }
  }
  throw Error("unreachable ring kind");
}

ChernRecord tangent_chern(const RingHandle& ring) {
  const CycleClass g0 = CycleClass::generator(ring, 0);
  const CycleClass g1 = CycleClass::generator(ring, 1);
  TotalClass total;
  switch (ring->kind()) {
    case Ring::Kind::scroll_p2: {
      const auto& p = std::get<ScrollP2Preset>(ring->preset());
      TotalClass base = one_plus(ring, Integer(3) * g1);
      base[2] += Integer(3) * mul(g1, g1);
      total = times(base, one_plus(ring, Integer(2) * g0 - Integer(p.e1) * g1));
      break;
    }
    case Ring::Kind::scroll_q: {
      const auto& q = std::get<ScrollQPreset>(ring->preset());
      const CycleClass g2 = CycleClass::generator(ring, 2);
      total = times(times(one_plus(ring, Integer(2) * g1), one_plus(ring, Integer(2) * g2)),
                    one_plus(ring, Integer(2) * g0 - Integer(q.e11) * g1 - Integer(q.e12) * g2));
      break;
    }
    case Ring::Kind::bundle_p1: {
      const auto& b = std::get<BundleP1Preset>(ring->preset());
      total = one_plus(ring, Integer(2) * g1);
      for (long long ai : b.a) total = times(total, one_plus(ring, g0 - Integer(ai) * g1));
      // 1 / (1 + X) as a truncated geometric series.
      const CycleClass divisor = *canonical_class(ring).divisor;
      TotalClass inverse = one_plus(ring, CycleClass::zero(ring, 1));
      CycleClass power = CycleClass::unit(ring);
      for (int j = 1; j <= ring->dimension(); ++j) {
        power = mul(power, Integer(-1) * divisor);
        inverse[j] += power;
      }
      total = times(total, inverse);
      break;
    }
  }
  return {total[1], total[2], total[3]};
}

Integer degree_on_threefold(const CycleClass& x) {
  if (x.degree() != 3) throw RingError("degree_on_threefold needs a class of degree 3");
  if (x.ring()->kind() != Ring::Kind::bundle_p1) return evaluate(x);
  return evaluate(mul(x, *canonical_class(x.ring()).divisor));
}

InvariantSet invariants_from_ring(const AmbientPreset& preset) {
  const RingHandle ring = make_ring(preset);
  const CycleClass L = CycleClass::generator(ring, 0);
  const CycleClass K = canonical_class(ring).adjoint();
  const ChernRecord c = tangent_chern(ring);
  InvariantSet inv;
  inv.L3 = degree_on_threefold(L * L * L);
  inv.KL2 = degree_on_threefold(K * L * L);
  inv.K2L = degree_on_threefold(K * K * L);
  inv.K3 = degree_on_threefold(K * K * K);
  inv.c2L = degree_on_threefold(c.c2 * L);
  inv.Kc2 = degree_on_threefold(K * c.c2);
  inv.c3 = degree_on_threefold(c.c3);
  return inv;
}

}  // namespace hilbdim
