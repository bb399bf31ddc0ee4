#include "icat/homs.hpp"

#include <map>

namespace icat {
namespace {

struct SearchState {
  std::vector<int> map;
  std::vector<char> used;
  std::vector<int> known;
};

class TabledSearch {
 public:
  TabledSearch(const Structure& x, const Structure& y, const HomSearch& opts,
               const std::function<bool(const std::vector<int>&)>& visit)
      : x_(x), y_(y), opts_(opts), visit_(visit), gens_(generating_set(x)) {}

  size_t run() {
    SearchState s;
    s.map.assign(x_.order(), -1);
    s.used.assign(y_.order(), 0);
    std::vector<int> queue;
    if (!assign(s, 0, 0, queue) || !propagate(s, queue)) return 0;
    if (!opts_.fixed.empty()) {
      for (int a = 0; a < x_.order(); ++a)
        if (opts_.fixed[a] >= 0 && !assign(s, a, opts_.fixed[a], queue)) return 0;
      if (!propagate(s, queue)) return 0;
    }
    recurse(s);
    return count_;
  }

 private:
  bool assign(SearchState& s, int a, int v, std::vector<int>& queue) {
    if (s.map[a] >= 0) return s.map[a] == v;
    if (opts_.allow && !opts_.allow(a, v)) return false;
    if (!opts_.fixed.empty() && opts_.fixed[a] >= 0 && opts_.fixed[a] != v) return false;
    if (opts_.injective) {
      if (s.used[v]) return false;
      s.used[v] = 1;
    }
    s.map[a] = v;
    s.known.push_back(a);
    queue.push_back(a);
    return true;
  }

  bool propagate(SearchState& s, std::vector<int>& queue) {
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      // `known` may grow while iterating; index-based loop picks up new entries.
      for (size_t i = 0; i < s.known.size(); ++i) {
        int b = s.known[i];
        if (!assign(s, x_.op(a, b), y_.op(s.map[a], s.map[b]), queue)) return false;
        if (!assign(s, x_.op(b, a), y_.op(s.map[b], s.map[a]), queue)) return false;
      }
    }
    return true;
  }

  void recurse(const SearchState& s) {
    if (stop_) return;
    int next = -1;
    for (int g : gens_)
      if (s.map[g] < 0) {
        next = g;
        break;
      }
    if (next < 0) {
      ++count_;
      if (!visit_(s.map)) stop_ = true;
      return;
    }
    for (int v = 0; v < y_.order() && !stop_; ++v) {
      SearchState t = s;
      std::vector<int> queue;
      if (assign(t, next, v, queue) && propagate(t, queue)) recurse(t);
    }
  }

  const Structure& x_;
  const Structure& y_;
  const HomSearch& opts_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> gens_;
  size_t count_ = 0;
  bool stop_ = false;
};

size_t pointed_search(const Structure& x, const Structure& y, const HomSearch& opts,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> map(x.order(), 0);
  std::vector<char> used(y.order(), 0);
  if (opts.allow && !opts.allow(0, 0)) return 0;
  if (!opts.fixed.empty() && opts.fixed[0] > 0) return 0;
  used[0] = 1;
  size_t count = 0;
  bool stop = false;
  std::function<void(int)> rec = [&](int a) {
    if (stop) return;
    if (a == x.order()) {
      ++count;
      if (!visit(map)) stop = true;
      return;
    }
    for (int v = 0; v < y.order() && !stop; ++v) {
      if (!opts.fixed.empty() && opts.fixed[a] >= 0 && opts.fixed[a] != v) continue;
      if (opts.injective && used[v]) continue;
      if (opts.allow && !opts.allow(a, v)) continue;
      map[a] = v;
      if (opts.injective) used[v] = 1;
      rec(a + 1);
      if (opts.injective) used[v] = 0;
    }
  };
  rec(1);
  return count;
}

}  // namespace

size_t for_each_morphism(const StructRef& x, const StructRef& y, const HomSearch& opts,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  if (!same_family(x->kind(), y->kind()))
    throw Error(ErrorCode::kKindMismatch, "morphism search across incompatible kinds");
  if (!opts.fixed.empty() && opts.fixed.size() != static_cast<size_t>(x->order()))
    throw Error(ErrorCode::kBadInput, "partial map has wrong length");
  if (!x->tabled()) return pointed_search(*x, *y, opts, visit);
  TabledSearch search(*x, *y, opts, visit);
  return search.run();
}

std::vector<Morphism> all_morphisms(const StructRef& x, const StructRef& y, const HomSearch& opts) {
  std::vector<Morphism> out;
  for_each_morphism(x, y, opts, [&](const std::vector<int>& m) {
    out.emplace_back(Morphism::Trusted{}, x, y, m);
    return true;
  });
  return out;
}

size_t count_morphisms(const StructRef& x, const StructRef& y, const HomSearch& opts) {
  return for_each_morphism(x, y, opts, [](const std::vector<int>&) { return true; });
}

std::vector<char> generated(const Structure& s, const std::vector<int>& seeds) {
  std::vector<char> in(s.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (int g : seeds)
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  if (!s.tabled()) return in;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      int a = members[i], b = members[j];
      for (int p : {s.op(a, b), s.op(b, a)})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
    }
  return in;
}

std::vector<int> generating_set(const Structure& s) {
  std::vector<int> gens;
  if (!s.tabled()) {
    for (int a = 1; a < s.order(); ++a) gens.push_back(a);
    return gens;
  }
  std::vector<char> in = generated(s, {});
  for (int a = 1; a < s.order(); ++a)
    if (!in[a]) {
      gens.push_back(a);
      in = generated(s, gens);
    }
  return gens;
}

std::vector<int> element_signatures(const Structure& s) {
  std::vector<int> sig(s.order(), 0);
  if (!s.tabled()) return sig;
  for (int a = 0; a < s.order(); ++a) {
    std::vector<char> seen(s.order(), 0);
    int cur = a, steps = 0;
    bool zero = false;
    while (!seen[cur]) {
      seen[cur] = 1;
      zero = zero || cur == 0;
      cur = s.op(cur, a);
      ++steps;
    }
    sig[a] = steps * 2 + (zero ? 1 : 0);
  }
  return sig;
}

std::optional<Morphism> find_isomorphism(const StructRef& x, const StructRef& y) {
  if (!same_family(x->kind(), y->kind()) || x->order() != y->order()) return std::nullopt;
  if (*x == *y) return identity(x);
  if (!x->tabled()) {
    std::vector<int> m(x->order());
    for (int i = 0; i < x->order(); ++i) m[i] = i;
    return Morphism(Morphism::Trusted{}, x, y, std::move(m));
  }
  auto sx = element_signatures(*x);
  auto sy = element_signatures(*y);
  HomSearch opts;
  opts.injective = true;
  opts.allow = [&](int a, int b) { return sx[a] == sy[b]; };
  std::optional<Morphism> found;
  for_each_morphism(x, y, opts, [&](const std::vector<int>& m) {
    found.emplace(Morphism::Trusted{}, x, y, m);
    return false;
  });
  return found;
}

std::vector<Morphism> automorphisms(const StructRef& x) {
  HomSearch opts;
  opts.injective = true;
  auto sig = element_signatures(*x);
  if (x->tabled()) opts.allow = [&](int a, int b) { return sig[a] == sig[b]; };
  return all_morphisms(x, x, opts);
}

}  // namespace icat
