// fraisse.cpp — tower growth by saturation: every request (e, g) is
// discharged by amalgamating e∘(bond from the top) against g, which appends
// one level and yields an exact certificate.
#include "knaster/fraisse.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>

#include "knaster/amalgam.hpp"
#include "knaster/enumerate.hpp"
#include "knaster/error.hpp"

namespace knaster {

namespace {

// Hard per-level size cap; growth beyond it raises BudgetExhausted.
constexpr long long kLevelSizeCap = 2'000'000;

Morphism revalidate(const Morphism& f) { return validate(f.dom, f.cod, f.values); }

void check_level(const GenericSequence& seq, int level) {
  if (level < 1 || level > seq.levels()) {
    fail("InvalidParams", "level index outside the tower");
  }
}

bool weight_in_budget(const Rational& w, int budget) {
  return numerator(w) <= budget && denominator(w) <= budget;
}

}  // namespace

AnnotatedMorphism validate_star(const Morphism& f, const Rational& dom_w,
                                const Rational& cod_w) {
  Morphism fv = revalidate(f);
  if (dom_w <= 0 || cod_w <= 0) fail("InvalidParams", "weights must be positive");
  Rational ratio = dom_w / cod_w;
  if (denominator(ratio) != 1) {
    fail("NonIntegerRatio", "weight ratio " + rational_str(ratio) +
                                " is not a positive integer");
  }
  if (ratio != degree(fv)) {
    fail("DegreeMismatch", "degree " + std::to_string(degree(fv)) +
                               " does not equal weight ratio " + rational_str(ratio));
  }
  return AnnotatedMorphism{std::move(fv), dom_w, cod_w};
}

StarAmalgamResult star_amalgamate(const AnnotatedMorphism& f,
                                  const AnnotatedMorphism& g) {
  AnnotatedMorphism fv = validate_star(f.base, f.dom_w, f.cod_w);
  AnnotatedMorphism gv = validate_star(g.base, g.dom_w, g.cod_w);
  if (fv.base.cod != gv.base.cod || fv.cod_w != gv.cod_w) {
    fail("CodomainMismatch", "annotated codomains differ");
  }
  AmalgamResult am = amalgamate(fv.base, gv.base);
  Rational weight = fv.dom_w * gv.dom_w / fv.cod_w;
  StarAmalgamResult out;
  out.object = AnnotatedObject{LinearGraph{am.plan.total}, weight};
  out.f_prime = validate_star(am.f_prime, weight, fv.dom_w);
  out.g_prime = validate_star(am.g_prime, weight, gv.dom_w);
  return out;
}

Morphism bond_composite(const GenericSequence& seq, int level, int top) {
  check_level(seq, level);
  check_level(seq, top);
  if (level > top) fail("InvalidParams", "bond runs from a higher level down");
  if (level == top) return identity(seq.objects[level - 1].graph.n);
  Morphism r = seq.bonds[level - 1];
  for (int k = level + 1; k < top; ++k) {
    r = compose(r, seq.bonds[k - 1]);
  }
  return r;
}

SaturationCertificate saturate(GenericSequence& seq, int level,
                               const Morphism& e, const Morphism& g) {
  check_level(seq, level);
  Morphism ev = revalidate(e);
  Morphism gv = revalidate(g);
  if (ev.dom != seq.objects[level - 1].graph.n) {
    fail("DomainMismatch", "e must map the requested level");
  }
  if (gv.cod != ev.cod) fail("CodomainMismatch", "request maps disagree on A");

  int top = seq.levels();
  Morphism down = bond_composite(seq, level, top);
  Morphism big = compose(ev, down);
  // The glued domain is at most deg(g)*|dom big~| + deg(big)*|dom g~|, where
  // the stretched domains add one vertex per interior turn.
  long long db = degree(big);
  long long dg = degree(gv);
  long long bound = dg * (big.dom + db) + db * (gv.dom + dg);
  if (bound > kLevelSizeCap) {
    fail("BudgetExhausted", "saturation would exceed the level size cap");
  }

  AmalgamResult am = amalgamate(big, gv);
  Rational weight = seq.category == Category::Kstar
                        ? seq.objects[top - 1].weight * degree(am.f_prime)
                        : Rational(1);
  seq.objects.push_back(AnnotatedObject{LinearGraph{am.plan.total}, weight});
  seq.bonds.push_back(am.f_prime);
  SaturationCertificate cert{level, std::move(ev), std::move(gv), top + 1,
                             am.g_prime};
  seq.certificates.push_back(cert);
  return cert;
}

GenericSequence build_generic(Category category, int budget, std::uint64_t seed) {
  if (budget < 1) fail("InvalidParams", "budget must be at least 1");
  GenericSequence seq;
  seq.category = category;
  seq.objects.push_back(AnnotatedObject{LinearGraph{2}, 1});
  std::mt19937_64 rng(seed);
  std::deque<SaturationRequest> queue;
  const int size_bound = budget + 2;
  const std::size_t cap = static_cast<std::size_t>(budget);

  // All requests aimed at one level, in lexicographic order over a
  // size-bounded pool of targets, truncated to the budget and shuffled.
  auto enqueue_level = [&](int level) {
    std::vector<SaturationRequest> batch;
    const AnnotatedObject& obj = seq.objects[level - 1];
    for (int a = 2; a <= std::min(obj.graph.n, size_bound); ++a) {
      if (batch.size() >= cap) break;
      for (const Morphism& e :
           enumerate_epi_prefix(obj.graph, LinearGraph{a}, cap)) {
        if (batch.size() >= cap) break;
        Rational wa = obj.weight / degree(e);
        if (category == Category::Kstar && !weight_in_budget(wa, budget)) continue;
        for (int b = 2; b <= size_bound; ++b) {
          if (batch.size() >= cap) break;
          for (const Morphism& g :
               enumerate_epi_prefix(LinearGraph{b}, LinearGraph{a}, cap)) {
            if (batch.size() >= cap) break;
            if (category == Category::Kstar &&
                !weight_in_budget(wa * degree(g), budget)) {
              continue;
            }
            batch.push_back(SaturationRequest{level, e, g});
          }
        }
      }
    }
    deterministic_shuffle(batch, rng);
    for (auto& r : batch) queue.push_back(std::move(r));
  };

  enqueue_level(1);
  while (seq.levels() < budget && !queue.empty()) {
    SaturationRequest req = std::move(queue.front());
    queue.pop_front();
    try {
      saturate(seq, req.level, req.e, req.g);
    } catch (const DomainError& err) {
      if (err.name() == "BudgetExhausted") {
        seq.unfulfilled.push_back(std::move(req));
        break;
      }
      throw;
    }
    enqueue_level(seq.levels());
  }
  for (auto& r : queue) seq.unfulfilled.push_back(std::move(r));
  return seq;
}

GenericSequence forget(const GenericSequence& seq) {
  GenericSequence out = seq;
  out.category = Category::K;
  for (AnnotatedObject& obj : out.objects) obj.weight = 1;
  return out;
}

int fiber_distance(const GenericSequence& seq, int level, int top, int x, int y) {
  Morphism down = bond_composite(seq, level, top);
  int s = seq.objects[level - 1].graph.n;
  if (x < 0 || x >= s || y < 0 || y >= s) {
    fail("VertexOutOfRange", "fiber vertices must lie in the lower level");
  }
  std::vector<int> fx;
  std::vector<int> fy;
  for (int i = 0; i < down.dom; ++i) {
    if (down.values[i] == x) fx.push_back(i);
    if (down.values[i] == y) fy.push_back(i);
  }
  int best = std::numeric_limits<int>::max();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fx.size() && j < fy.size()) {
    best = std::min(best, std::abs(fx[i] - fy[j]));
    if (fx[i] < fy[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return best;
}

SeparationRecord separation_extension(GenericSequence& seq, int level, int x,
                                      int y) {
  check_level(seq, level);
  int s = seq.objects[level - 1].graph.n;
  if (graph_distance(LinearGraph{s}, x, y) <= 1) {
    fail("NotSeparated", "vertices are equal or adjacent");
  }
  int between = std::min(x, y) + 1;
  Morphism g = pad(identity(s), between, 1);
  SaturationCertificate cert = saturate(seq, level, identity(s), g);
  SeparationRecord rec{level, x, y, between, cert.answer_level};
  seq.separations.push_back(rec);
  if (fiber_distance(seq, level, rec.answer_level, x, y) <= 2) {
    fail("InternalError", "separation extension failed to push fibers apart");
  }
  return rec;
}

AutomorphismApprox realize_degree(GenericSequence& seq, int p, int q) {
  if (p < 1 || q < 1) fail("InvalidParams", "target degrees must be positive");
  if (seq.levels() < 1) fail("InvalidParams", "sequence has no levels");
  int s = seq.objects[0].graph.n;
  int cover = std::max(p, q) * (s - 1) + 1;
  auto canonical = [&](int d) {
    std::vector<int> changes(static_cast<std::size_t>(d) * (s - 1));
    for (std::size_t i = 0; i < changes.size(); ++i) changes[i] = static_cast<int>(i) + 1;
    return epi_from_changes(cover, s, changes);
  };
  SaturationCertificate cert = saturate(seq, 1, identity(s), canonical(q));
  AutomorphismApprox out;
  out.i1 = cert.answer_level;
  out.g1 = compose(canonical(p), cert.h);
  return out;
}

Rational approx_degree(const AutomorphismApprox& a, const GenericSequence& seq) {
  check_level(seq, a.i1);
  Morphism g1 = revalidate(a.g1);
  if (g1.dom != seq.objects[a.i1 - 1].graph.n || g1.cod != seq.objects[0].graph.n) {
    fail("InvalidParams", "stage map endpoints disagree with the sequence");
  }
  return Rational(degree(g1)) / Rational(degree(bond_composite(seq, 1, a.i1)));
}

VerificationReport verify_sequence(const GenericSequence& seq) {
  VerificationReport rep;
  auto problem = [&rep](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  if (seq.objects.empty()) {
    problem("sequence has no objects");
    return rep;
  }
  for (std::size_t i = 0; i < seq.objects.size(); ++i) {
    if (seq.objects[i].graph.n < 2) {
      problem("object " + std::to_string(i + 1) + " has fewer than two vertices");
    }
    if (seq.objects[i].weight <= 0) {
      problem("object " + std::to_string(i + 1) + " has non-positive weight");
    }
  }
  if (seq.bonds.size() + 1 != seq.objects.size()) {
    problem("bond count does not match object count");
    return rep;
  }
  for (std::size_t i = 0; i < seq.bonds.size(); ++i) {
    try {
      Morphism b = revalidate(seq.bonds[i]);
      if (b.dom != seq.objects[i + 1].graph.n || b.cod != seq.objects[i].graph.n) {
        problem("bond " + std::to_string(i + 1) + " endpoints mismatch");
      } else if (seq.category == Category::Kstar) {
        validate_star(b, seq.objects[i + 1].weight, seq.objects[i].weight);
      }
    } catch (const DomainError& e) {
      problem("bond " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < seq.certificates.size(); ++i) {
    const SaturationCertificate& c = seq.certificates[i];
    try {
      if (c.level < 1 || c.answer_level < c.level || c.answer_level > seq.levels()) {
        problem("certificate " + std::to_string(i + 1) + " levels out of range");
        continue;
      }
      Morphism lhs = compose(c.g, c.h);
      Morphism rhs = compose(c.e, bond_composite(seq, c.level, c.answer_level));
      if (lhs != rhs) {
        problem("certificate " + std::to_string(i + 1) + " does not replay exactly");
      }
    } catch (const DomainError& e) {
      problem("certificate " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < seq.separations.size(); ++i) {
    const SeparationRecord& r = seq.separations[i];
    try {
      if (fiber_distance(seq, r.level, r.answer_level, r.x, r.y) <= 2) {
        problem("separation " + std::to_string(i + 1) + " not achieved at its answer level");
      }
      if (fiber_distance(seq, r.level, seq.levels(), r.x, r.y) <= 2) {
        problem("separation " + std::to_string(i + 1) + " lost at the current top");
      }
    } catch (const DomainError& e) {
      problem("separation " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace knaster
