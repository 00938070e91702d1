#pragma once
// Exterior and curly-exterior squares of a finite group, realized as finite
// presentations and enumerated. The kernel of kappa: G^G -> G' is the Schur
// multiplier; the curly kind quotients by commuting pairs and its kernel is
// the B0-tilde invariant.

#include <chrono>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vb0/abelian.hpp"
#include "vb0/group.hpp"
#include "vb0/presentation.hpp"

namespace vb0 {

enum class WedgeKind { Exterior, Curly };

inline const char* kind_name(WedgeKind k) {
  return k == WedgeKind::Exterior ? "exterior" : "curly";
}

constexpr int kWedgeOrderCap = 64;
constexpr uint32_t kWedgeCosetCap = 100000;

struct WedgePresentation {
  Presentation pres;
  std::vector<int> gen_of;                   // x*n+y -> 1-based generator, 0 if x or y = 1
  std::vector<std::pair<Elt, Elt>> pair_of;  // 1-based generator -> (x, y)
};

// Generators w_{x,y} for ordered pairs of non-identity elements. Relations
// are the crossed-pairing expansions
//   w_{xy,z} = w_{x^y,z^y} w_{y,z}   and   w_{x,yz} = w_{x,z} w_{x^z,y^z}
// with w_{1,*} = w_{*,1} read as the empty word. Exterior adds w_{x,x} = 1;
// curly adds w_{x,y} = 1 for every commuting pair.
inline WedgePresentation wedge_presentation(const Group& g, WedgeKind kind,
                                            int order_cap = kWedgeOrderCap) {
  int n = g.order();
  if (n > order_cap)
    fail(ErrorKind::CapExceeded, "wedge cap exceeded: |G| = " + std::to_string(n));
  WedgePresentation wp;
  wp.gen_of.assign((size_t)n * n, 0);
  wp.pair_of.emplace_back(-1, -1);  // pad so generator v sits at index v
  Elt e = g.id();
  int v = 0;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      if (x == e || y == e) continue;
      wp.gen_of[(size_t)x * n + y] = ++v;
      wp.pair_of.emplace_back(x, y);
    }
  wp.pres.ngens = v;
  wp.pres.label = g.label() + " " + kind_name(kind) + " square";

  auto gen = [&](Elt x, Elt y) { return wp.gen_of[(size_t)x * n + y]; };
  auto relate = [&](int a, int b, int c) {
    // a * b * c^-1, skipping identity-pair slots
    Word w;
    if (a) w.push(a, 1);
    if (b) w.push(b, 1);
    if (c) w.push(c, -1);
    if (!w.empty()) wp.pres.relators.push_back(std::move(w));
  };

  for (Elt x = 0; x < n; ++x) {
    if (x == e) continue;
    for (Elt y = 0; y < n; ++y) {
      if (y == e) continue;
      for (Elt z = 0; z < n; ++z) {
        if (z == e) continue;
        relate(gen(g.conj(x, y), g.conj(z, y)), gen(y, z), gen(g.mul(x, y), z));
        relate(gen(x, z), gen(g.conj(x, z), g.conj(y, z)), gen(x, g.mul(y, z)));
      }
    }
  }
  if (kind == WedgeKind::Exterior) {
    for (Elt x = 0; x < n; ++x)
      if (x != e) wp.pres.relators.push_back(Word::gen(gen(x, x)));
  } else {
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        if (x != e && y != e && g.mul(x, y) == g.mul(y, x))
          wp.pres.relators.push_back(Word::gen(gen(x, y)));
  }
  return wp;
}

// A wedge square together with its bookkeeping. The carrier group lives in
// shared storage so copies of this struct stay internally consistent; the
// parent group must outlive it.
struct WedgeGroup {
  WedgeKind kind = WedgeKind::Exterior;
  const Group* parent = nullptr;
  std::shared_ptr<const CosetTable> table;
  std::shared_ptr<const PresentedImage> image;
  std::vector<int> gen_of;  // as in WedgePresentation
  std::vector<std::pair<Elt, Elt>> pair_of;
  Homomorphism kappa;  // carrier -> parent, image = derived subgroup
  Subgroup kernel;     // ker kappa, central in carrier
  double ms_enumerate = 0;

  const Group& carrier() const { return image->G; }
  // carrier element representing x wedge y; identity pairs give the identity
  Elt pair_gen(Elt x, Elt y) const {
    int v = gen_of[(size_t)x * parent->order() + y];
    return v ? image->gen_image[v] : carrier().id();
  }
};

inline WedgeGroup wedge_group(const Group& g, WedgeKind kind, TCOptions opt = {},
                              int order_cap = kWedgeOrderCap) {
  auto t0 = std::chrono::steady_clock::now();
  WedgePresentation wp = wedge_presentation(g, kind, order_cap);
  opt.what = wp.pres.label;
  if (opt.max_cosets == TCOptions{}.max_cosets) opt.max_cosets = kWedgeCosetCap;
  CosetTable tab = todd_coxeter(wp.pres, {}, opt);
  PresentedImage img = image_group(tab, wp.pres.label);

  WedgeGroup w;
  w.kind = kind;
  w.parent = &g;
  w.table = std::make_shared<const CosetTable>(std::move(tab));
  w.image = std::make_shared<const PresentedImage>(std::move(img));
  w.gen_of = std::move(wp.gen_of);
  w.pair_of = std::move(wp.pair_of);

  // kappa sends w_{x,y} to [x,y]; failure to extend is an engine bug
  std::vector<Elt> kimg(w.pair_of.size(), g.id());
  for (size_t v = 1; v < w.pair_of.size(); ++v)
    kimg[v] = g.comm(w.pair_of[v].first, w.pair_of[v].second);
  try {
    w.kappa = induced_hom(*w.table, *w.image, g, kimg);
  } catch (const Error& err) {
    if (err.kind == ErrorKind::NotHomomorphism)
      fail(ErrorKind::KappaInconsistent, std::string("kappa does not extend: ") + err.what());
    throw;
  }
  w.kernel = w.kappa.kernel();

  const Group& c = w.carrier();
  for (Elt k : w.kernel.elems)
    for (Elt a = 0; a < c.order(); ++a)
      if (c.mul(k, a) != c.mul(a, k))
        fail(ErrorKind::KappaInconsistent, "kernel of kappa is not central");
  Subgroup der = derived_subgroup(g);
  if (w.kappa.image().elems != der.elems)
    fail(ErrorKind::KappaInconsistent, "image of kappa is not the derived subgroup");
  if ((long long)c.order() != (long long)der.order() * w.kernel.order())
    fail(ErrorKind::KappaInconsistent, "carrier order mismatch");
  if (kind == WedgeKind::Curly) {
    for (Elt x = 0; x < g.order(); ++x)
      for (Elt y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x) && w.pair_gen(x, y) != c.id())
          fail(ErrorKind::KappaInconsistent, "commuting pair survives in curly carrier");
  }
  w.ms_enumerate =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return w;
}

// Span of the commuting-pair generators inside the exterior kernel.
inline Subgroup m_zero_span(const WedgeGroup& w) {
  if (w.kind != WedgeKind::Exterior)
    fail(ErrorKind::BadElement, "m_zero_span wants the exterior wedge");
  const Group& g = *w.parent;
  std::vector<Elt> gens;
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) {
        Elt p = w.pair_gen(x, y);
        if (!w.kernel.contains(p))
          fail(ErrorKind::InternalDisagreement, "commuting-pair generator outside ker kappa");
        if (p != w.carrier().id()) gens.push_back(p);
      }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(w.carrier(), gens);
}

struct MultiplierResult {
  AbelianStructure multiplier;  // M(G) = ker kappa, exterior
  AbelianStructure m_zero;      // M0(G), span of commuting pairs
  AbelianStructure b0;          // M(G)/M0(G) = ker kappa, curly
  long long carrier_exterior = 0;
  long long carrier_curly = 0;
  double ms_exterior = 0;
  double ms_curly = 0;
};

inline AbelianStructure schur_multiplier(const Group& g, TCOptions opt = {}) {
  WedgeGroup w = wedge_group(g, WedgeKind::Exterior, opt);
  return abelian_invariants(w.kernel);
}

// B0-tilde by two independent routes: the curly kernel, and the exterior
// kernel modulo the commuting-pair span. Disagreement is a hard failure.
inline MultiplierResult bogomolov_tilde(const Group& g, TCOptions opt = {}) {
  MultiplierResult r;
  WedgeGroup ext = wedge_group(g, WedgeKind::Exterior, opt);
  r.multiplier = abelian_invariants(ext.kernel);
  r.carrier_exterior = ext.carrier().order();
  r.ms_exterior = ext.ms_enumerate;

  Subgroup m0 = m_zero_span(ext);
  r.m_zero = abelian_invariants(m0);

  // route (b): quotient inside the exterior kernel
  SubgroupAsGroup K = subgroup_as_group(ext.kernel);
  std::vector<Elt> m0_in;
  for (Elt p : m0.elems) m0_in.push_back(K.from_parent[p]);
  std::sort(m0_in.begin(), m0_in.end());
  QuotientResult q = quotient(K.H, Subgroup::of(K.H, std::move(m0_in)));
  AbelianStructure via_quotient = abelian_invariants(full_subgroup(q.Q));

  // route (a): independent curly enumeration
  WedgeGroup cur = wedge_group(g, WedgeKind::Curly, opt);
  r.b0 = abelian_invariants(cur.kernel);
  r.carrier_curly = cur.carrier().order();
  r.ms_curly = cur.ms_enumerate;

  if (!(r.b0 == via_quotient))
    fail(ErrorKind::InternalDisagreement, "curly kernel " + r.b0.str() +
                                              " vs exterior quotient " + via_quotient.str() +
                                              " for " + g.label());
  // the natural surjection kills exactly the M0 span
  if (r.carrier_exterior != r.carrier_curly * m0.order())
    fail(ErrorKind::InternalDisagreement, "carrier orders do not match the M0 span");
  if (r.multiplier.order() != r.m_zero.order() * r.b0.order())
    fail(ErrorKind::InternalDisagreement, "|M| != |M0| * |B0-tilde|");
  return r;
}

// Map on carriers induced by f: pair_gen(x,y) -> pair_gen(f x, f y).
inline Homomorphism induced_map(const WedgeGroup& a, const WedgeGroup& b, const Homomorphism& f) {
  if (a.kind != b.kind) fail(ErrorKind::BadElement, "induced_map across wedge kinds");
  if (f.src != a.parent || f.dst != b.parent)
    fail(ErrorKind::BadElement, "induced_map endpoint mismatch");
  std::vector<Elt> gi(a.pair_of.size(), b.carrier().id());
  for (size_t v = 1; v < a.pair_of.size(); ++v)
    gi[v] = b.pair_gen(f(a.pair_of[v].first), f(a.pair_of[v].second));
  Homomorphism h;
  try {
    h = induced_hom(*a.table, *a.image, b.carrier(), gi);
  } catch (const Error& err) {
    if (err.kind == ErrorKind::NotHomomorphism)
      fail(ErrorKind::InternalDisagreement,
           std::string("induced map does not extend: ") + err.what());
    throw;
  }
  return h;
}

// Image of ker kappa under an induced map; lands inside the target kernel.
inline Subgroup induced_kernel_image(const WedgeGroup& a, const WedgeGroup& b,
                                     const Homomorphism& alpha) {
  std::vector<Elt> img;
  for (Elt k : a.kernel.elems) {
    Elt t = alpha(k);
    if (!b.kernel.contains(t))
      fail(ErrorKind::InternalDisagreement, "induced map leaks outside the kernel");
    img.push_back(t);
  }
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Subgroup::of(b.carrier(), std::move(img));
}

}  // namespace vb0
