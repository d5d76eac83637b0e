#include "hurwitz/group_order.hpp"

#include <optional>

namespace hurwitz {

namespace {

// One level of a stabilizer chain: the orbit of the base point with coset
// representatives, and every chain element known to fix all earlier bases.
struct ChainLevel {
  int base = -1;  // 0-based
  std::vector<Permutation> gens;
  std::vector<std::optional<Permutation>> transversal;  // indexed by 0-based point

  void rebuild_orbit(int degree) {
    transversal.assign(degree, std::nullopt);
    transversal[base] = Permutation(degree);
    std::vector<int> queue{base};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (const auto& g : gens) {
        int y = g.apply(x + 1) - 1;
        if (!transversal[y]) {
          transversal[y] = compose(g, *transversal[x]);
          queue.push_back(y);
        }
      }
    }
  }

  long orbit_size() const {
    long s = 0;
    for (const auto& t : transversal)
      if (t) ++s;
    return s;
  }
};

// Deterministic Schreier-Sims. Level k keeps every known element fixing the
// first k bases, so the chain is valid as soon as each level's Schreier
// generators sift to the identity; fix_level enforces that bottom-up.
struct StabilizerChain {
  int degree;
  std::vector<ChainLevel> levels;

  explicit StabilizerChain(int deg) : degree(deg) {}

  // residue after sifting through the chain and the level where it stopped
  std::pair<Permutation, size_t> sift(Permutation g) const {
    for (size_t l = 0; l < levels.size(); ++l) {
      int x = g.apply(levels[l].base + 1) - 1;
      if (!levels[l].transversal[x]) return {std::move(g), l};
      g = compose(levels[l].transversal[x]->inverse(), g);
    }
    return {std::move(g), levels.size()};
  }

  // w is not the identity and fixes the bases of all levels before stop
  void insert(const Permutation& w, size_t stop) {
    if (stop == levels.size()) {
      int b = -1;
      for (int i = 0; i < degree; ++i)
        if (w.apply(i + 1) != i + 1) { b = i; break; }
      levels.push_back(ChainLevel{});
      levels.back().base = b;
    }
    for (size_t k = 0; k <= stop; ++k) levels[k].gens.push_back(w);
    for (size_t k = 0; k <= stop; ++k) levels[k].rebuild_orbit(degree);
  }

  // verifies every Schreier generator of this level sifts to the identity,
  // extending the chain below when one does not
  void fix_level(size_t l) {
    bool done = false;
    while (!done) {
      done = true;
      auto& lv = levels[l];
      for (int x = 0; x < degree && done; ++x) {
        if (!lv.transversal[x]) continue;
        for (const auto& g : lv.gens) {
          int y = g.apply(x + 1) - 1;
          Permutation schreier =
              compose(lv.transversal[y]->inverse(), compose(g, *lv.transversal[x]));
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift(std::move(schreier));
          if (residue.is_identity()) continue;
          // stop >= l + 1 because the Schreier generator fixes bases 0..l
          insert(residue, stop);
          for (size_t k = stop; k > l; --k)
            if (k < levels.size()) fix_level(k);
          done = false;
          break;
        }
      }
    }
  }

  void build(const std::vector<Permutation>& generators) {
    for (const auto& g : generators) {
      auto [residue, stop] = sift(g);
      if (!residue.is_identity()) insert(residue, stop);
    }
    for (size_t l = levels.size(); l-- > 0;) fix_level(l);
  }

  mpz_class order() const {
    mpz_class o = 1;
    for (const auto& lv : levels) o *= lv.orbit_size();
    return o;
  }
};

}  // namespace

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

bool is_transitive(const std::vector<Permutation>& gens) {
  if (gens.empty()) return false;
  int n = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw degree_mismatch();
  if (n == 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> queue{0};
  seen[0] = true;
  size_t reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : gens) {
      int y = g.apply(queue[qi] + 1) - 1;
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == static_cast<size_t>(n);
}

GroupOrderReport group_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw invalid_parameter("group order of an empty generating set");
  int n = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw degree_mismatch();
  if (n > kMaxStabilizerChainDegree)
    throw degree_too_large("stabilizer chain capped at degree " +
                           std::to_string(kMaxStabilizerChainDegree) + ", got " +
                           std::to_string(n));

  StabilizerChain chain(n);
  chain.build(gens);

  GroupOrderReport rep;
  rep.order = chain.order();
  rep.transitive = is_transitive(gens);
  mpz_class full = factorial(n);
  rep.symmetric = rep.order == full;
  if (rep.order * 2 == full) {
    bool all_even = true;
    for (const auto& g : gens)
      if (g.parity() < 0) all_even = false;
    rep.alternating = all_even;
  }
  return rep;
}

}  // namespace hurwitz
