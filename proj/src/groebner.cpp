#include "cutkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>

#include "cutkit/linalg.hpp"

namespace cutkit {

namespace {

struct Element {
  Monomial lead;
  Monomial tail;
};

struct Pair {
  int i, j;
  Monomial lcm;
};

// Buchberger on marked binomials. S-pairs are processed in batches of equal
// lcm degree; a batch is reduced against a frozen snapshot (possibly in
// parallel) and then inserted one by one, so the outcome does not depend on
// the number of workers.
class Engine {
 public:
  Engine(const TermOrder& order, const GroebnerOptions& opts, std::vector<bool> saturated)
      : order_(order), opts_(opts), sat_(std::move(saturated)) {}

  void add(const Binomial& b) {
    if (auto e = make_element(b.plus, b.minus)) insert(std::move(*e));
  }

  void run() {
    while (!pairs_.empty()) {
      if (opts_.max_pairs && processed_ >= opts_.max_pairs) {
        complete_ = false;
        return;
      }
      int d = pairs_.front().lcm.degree();
      for (const auto& p : pairs_) d = std::min(d, p.lcm.degree());
      std::vector<Pair> batch, rest;
      for (auto& p : pairs_) (p.lcm.degree() == d ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      if (opts_.max_pairs && processed_ + batch.size() > opts_.max_pairs) {
        const std::size_t keep = opts_.max_pairs - processed_;
        for (std::size_t k = keep; k < batch.size(); ++k) pairs_.push_back(std::move(batch[k]));
        batch.resize(keep);
      }
      processed_ += batch.size();

      std::vector<std::optional<Element>> reduced(batch.size());
      auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t k = begin; k < batch.size(); k += step) reduced[k] = s_pair(batch[k]);
      };
      const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opts_.threads, batch.size() / 8 + 1));
      if (workers > 1) {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& t : pool) t.join();
      } else {
        work(0, 1);
      }
      for (auto& r : reduced) {
        if (!r) continue;
        // Re-reduce against elements inserted earlier in this batch.
        if (auto e = make_element(r->lead, r->tail)) insert(std::move(*e));
      }
    }
  }

  GroebnerBasis finish() const {
    GroebnerBasis gb;
    gb.order = order_;
    gb.complete = complete_;
    gb.reduced = true;
    gb.pairs_processed = processed_;
    for (int idx : active_) {
      Monomial tail = reduce(elements_[idx].tail);
      gb.elements.emplace_back(elements_[idx].lead, std::move(tail));
    }
    std::sort(gb.elements.begin(), gb.elements.end(),
              [&](const Binomial& a, const Binomial& b) { return order_.compare(a.plus, b.plus) < 0; });
    return gb;
  }

 private:
  Monomial reduce(Monomial m) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int idx : active_) {
        const Element& g = elements_[idx];
        if (g.lead.divides(m)) {
          m = (m / g.lead) * g.tail;
          changed = true;
          break;
        }
      }
    }
    return m;
  }

  std::optional<Element> make_element(Monomial a, Monomial b) const {
    while (true) {
      a = reduce(std::move(a));
      b = reduce(std::move(b));
      if (a == b) return std::nullopt;
      if (sat_.empty()) break;
      Monomial g = a.gcd(b);
      bool any = false;
      std::vector<int> e = g.exponents();
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (!sat_[v]) e[v] = 0;
        any = any || e[v] > 0;
      }
      if (!any) break;
      Monomial c(e);
      a = a / c;
      b = b / c;
    }
    if (order_.compare(a, b) < 0) std::swap(a, b);
    return Element{std::move(a), std::move(b)};
  }

  std::optional<Element> s_pair(const Pair& p) const {
    const Element& gi = elements_[p.i];
    const Element& gj = elements_[p.j];
    return make_element((p.lcm / gi.lead) * gi.tail, (p.lcm / gj.lead) * gj.tail);
  }

  // Gebauer–Möller update.
  void insert(Element h) {
    const int hi = static_cast<int>(elements_.size());
    const Monomial& lh = h.lead;

    std::vector<Pair> fresh;
    for (int g : active_) fresh.push_back({g, hi, elements_[g].lead.lcm(lh)});
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (elements_[fresh[a].i].lead.coprime(lh)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    std::vector<Pair> e;
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a] && !elements_[fresh[a].i].lead.coprime(lh)) e.push_back(std::move(fresh[a]));

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && elements_[p.i].lead.lcm(lh) != p.lcm && elements_[p.j].lead.lcm(lh) != p.lcm) continue;
      kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    std::vector<int> act;
    for (int g : active_)
      if (!lh.divides(elements_[g].lead)) act.push_back(g);
    act.push_back(hi);
    active_ = std::move(act);
    elements_.push_back(std::move(h));
  }

  TermOrder order_;
  GroebnerOptions opts_;
  std::vector<bool> sat_;
  std::vector<Element> elements_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
  bool complete_ = true;
};

Binomial divide_out(const Binomial& b, std::size_t var) {
  const int k = std::min(b.plus[var], b.minus[var]);
  if (k == 0) return b;
  Monomial x(b.nvars());
  x.set(var, k);
  return {b.plus / x, b.minus / x};
}

// Differences of column pairs with equal image: every quadratic move.
std::vector<Binomial> quadratic_moves(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::map<std::vector<std::int64_t>, std::vector<std::pair<int, int>>> groups;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      IntVector s = a.col(i) + a.col(j);
      groups[std::vector<std::int64_t>(s.data(), s.data() + s.size())].emplace_back(i, j);
    }
  std::vector<Binomial> out;
  for (const auto& [key, list] : groups) {
    for (std::size_t k = 1; k < list.size(); ++k) {
      std::vector<int> p(n, 0), m(n, 0);
      ++p[list[0].first];
      ++p[list[0].second];
      ++m[list[k].first];
      ++m[list[k].second];
      out.emplace_back(Monomial(p), Monomial(m));
    }
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order, const GroebnerOptions& opts,
                         const std::vector<bool>& saturated) {
  Engine engine(order, opts, saturated);
  for (const auto& b : gens) engine.add(b);
  engine.run();
  return engine.finish();
}

std::vector<std::vector<std::int64_t>> lattice_kernel(const IntMatrix& a) {
  const IntMatrix k = to_int(integer_kernel(to_big(a)));
  std::vector<std::vector<std::int64_t>> out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.emplace_back(k.col(c).data(), k.col(c).data() + k.rows());
  return out;
}

GroebnerBasis toric_groebner(const IntMatrix& a, const TermOrder& order, const GroebnerOptions& opts) {
  const std::size_t n = a.cols();
  if ((a.array() < 0).any()) throw InvalidInput("toric_groebner needs a nonnegative matrix");
  std::vector<std::int64_t> weight(n);
  for (std::size_t j = 0; j < n; ++j) {
    weight[j] = a.col(j).sum();
    if (weight[j] == 0) throw InvalidInput("toric_groebner: zero column");
  }
  const bool standard = std::all_of(weight.begin(), weight.end(), [&](auto w) { return w == weight[0]; });

  std::vector<Binomial> current;
  for (const auto& v : lattice_kernel(a)) current.push_back(Binomial::from_vector(v));
  if (current.empty()) {
    GroebnerBasis gb;
    gb.order = order;
    gb.reduced = true;
    return gb;
  }
  for (auto& b : quadratic_moves(a)) current.push_back(std::move(b));

  // Saturate at one variable at a time: with that variable cheapest in a
  // graded reverse lexicographic order, dividing each basis element by its
  // largest power of the variable gives a basis of the saturation.
  std::vector<bool> sat(n, false);
  std::size_t pairs = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> varorder;
    for (std::size_t u = 0; u < n; ++u)
      if (u != v) varorder.push_back(static_cast<int>(u));
    varorder.push_back(static_cast<int>(v));
    const TermOrder step = standard ? TermOrder::degrevlex(varorder)
                                    : TermOrder::weighted(weight, TermOrder::Kind::RevLex, varorder);
    GroebnerBasis gb = buchberger(current, step, opts, sat);
    pairs += gb.pairs_processed;
    if (!gb.complete) {
      GroebnerBasis partial;
      partial.order = order;
      partial.complete = false;
      partial.pairs_processed = pairs;
      for (const auto& b : gb.elements) partial.elements.push_back(order.orient(b));
      return partial;
    }
    current.clear();
    for (const auto& b : gb.elements) current.push_back(divide_out(b, v));
    sat[v] = true;
  }
  GroebnerBasis gb = buchberger(current, order, opts, sat);
  gb.pairs_processed += pairs;
  return gb;
}

Monomial normal_form(const Monomial& m, const GroebnerBasis& gb) {
  Monomial r = m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gb.elements) {
      if (g.plus.divides(r)) {
        r = (r / g.plus) * g.minus;
        changed = true;
        break;
      }
    }
  }
  return r;
}

Binomial normal_form(const Binomial& b, const GroebnerBasis& gb) {
  return {normal_form(b.plus, gb), normal_form(b.minus, gb)};
}

bool reduces_to_zero(const Binomial& b, const GroebnerBasis& gb) { return normal_form(b, gb).is_zero(); }

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  for (const auto& g : a.elements)
    if (!reduces_to_zero(g, b)) return false;
  for (const auto& g : b.elements)
    if (!reduces_to_zero(g, a)) return false;
  return true;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.elements) leads.push_back(g.plus);
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < leads.size() && minimal; ++j)
      if (i != j && leads[j].divides(leads[i])) minimal = false;
    if (minimal) out.push_back(leads[i]);
  }
  return out;
}

bool is_squarefree(const std::vector<Monomial>& monomials) {
  return std::all_of(monomials.begin(), monomials.end(), [](const Monomial& m) { return m.squarefree(); });
}

bool is_groebner(const std::vector<Binomial>& marked, const TermOrder& order) {
  GroebnerBasis gb;
  gb.order = order;
  gb.elements = marked;
  for (const auto& g : marked)
    if (order.compare(g.plus, g.minus) <= 0) return false;
  for (std::size_t i = 0; i < marked.size(); ++i)
    for (std::size_t j = i + 1; j < marked.size(); ++j) {
      if (marked[i].plus.coprime(marked[j].plus)) continue;
      const Monomial l = marked[i].plus.lcm(marked[j].plus);
      const Binomial s{(l / marked[i].plus) * marked[i].minus, (l / marked[j].plus) * marked[j].minus};
      if (!reduces_to_zero(s, gb)) return false;
    }
  return true;
}

}  // namespace cutkit
