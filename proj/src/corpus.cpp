#include "icat/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "icat/homs.hpp"

namespace icat {
namespace {

std::vector<int> table_from(int n, auto&& op) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = op(a, b);
  return t;
}

void factor_lists(int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = 2; d <= remaining; ++d) {
    if (remaining % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    factor_lists(remaining / d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> permutations_fixing_zero(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

StructRef from_canonical(Kind kind, int n, const std::vector<int>& t, int index) {
  return make_structure(kind, n, t, "M" + std::to_string(n) + "_" + std::to_string(index));
}

}  // namespace

std::vector<std::vector<int>> invariant_factor_lists(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  factor_lists(n, cur, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

StructRef abelian_from_factors(const std::vector<int>& factors, Kind kind) {
  int n = 1;
  for (int d : factors) n *= d;
  auto digits = [&](int idx) {
    std::vector<int> ds(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
      ds[i] = idx % factors[i];
      idx /= factors[i];
    }
    return ds;
  };
  auto t = table_from(n, [&](int a, int b) {
    auto da = digits(a), db = digits(b);
    int idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + (da[i] + db[i]) % factors[i];
    return idx;
  });
  std::string name;
  for (int d : factors) name += (name.empty() ? "Z" : "xZ") + std::to_string(d);
  if (name.empty()) name = "Z1";
  return make_trusted(kind, n, std::move(t), name);
}

StructRef dihedral(int n) {
  // r^i s^j at index i + n j.
  auto t = table_from(2 * n, [n](int a, int b) {
    int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
    int i = ((j1 ? i1 - i2 : i1 + i2) % n + n) % n;
    return i + n * ((j1 + j2) % 2);
  });
  return make_trusted(Kind::kGroup, 2 * n, std::move(t), n == 3 ? "S3" : "D" + std::to_string(n));
}

StructRef symmetric3() { return dihedral(3); }

StructRef quaternion8() {
  // Index 2u + s encodes sign s on unit u in {1, i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  auto t = table_from(8, [](int a, int b) {
    int ua = a / 2, ub = b / 2;
    int s = (a % 2 + b % 2 + sign[ua][ub]) % 2;
    return 2 * unit[ua][ub] + s;
  });
  return make_structure(Kind::kGroup, 8, std::move(t), "Q8");
}

std::vector<std::vector<int>> sorted_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

StructRef symmetric_group(int n) {
  auto perms = sorted_permutations(n);
  const int m = static_cast<int>(perms.size());
  auto t = table_from(m, [&](int a, int b) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
  });
  return make_structure(Kind::kGroup, m, std::move(t), "S" + std::to_string(n));
}

StructRef alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto t = table_from(12, [&](int a, int b) {
    std::array<int, 4> c{};
    for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
    return static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
  });
  return make_structure(Kind::kGroup, 12, std::move(t), "A4");
}

StructRef dicyclic12() {
  // Z3 x| Z4 with the generator of Z4 acting by inversion; (a, b) at a + 3b.
  auto t = table_from(12, [](int x, int y) {
    int a1 = x % 3, b1 = x / 3, a2 = y % 3, b2 = y / 3;
    int a = ((b1 % 2 ? a1 - a2 : a1 + a2) % 3 + 3) % 3;
    return a + 3 * ((b1 + b2) % 4);
  });
  return make_structure(Kind::kGroup, 12, std::move(t), "Dic3");
}

std::vector<StructRef> builtin_groups(int max_order) {
  std::vector<StructRef> out;
  for (int n = 1; n <= std::min(max_order, kGroupCap); ++n) {
    for (const auto& f : invariant_factor_lists(n)) out.push_back(abelian_from_factors(f, Kind::kGroup));
    switch (n) {
      case 6: out.push_back(symmetric3()); break;
      case 8:
        out.push_back(dihedral(4));
        out.push_back(quaternion8());
        break;
      case 10: out.push_back(dihedral(5)); break;
      case 12:
        out.push_back(dihedral(6));
        out.push_back(alternating4());
        out.push_back(dicyclic12());
        break;
      default: break;
    }
  }
  return out;
}

std::vector<int> canonical_table(int n, const std::vector<int>& t) {
  std::vector<int> best = t, cur(t.size());
  for (const auto& p : permutations_fixing_zero(n)) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) cur[static_cast<size_t>(p[a]) * n + p[b]] = p[t[static_cast<size_t>(a) * n + b]];
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<StructRef> search_groups(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n, -1);
  auto at = [&](int a, int b) -> int& { return t[static_cast<size_t>(a) * n + b]; };
  std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0)), col_used = row_used;
  for (int x = 0; x < n; ++x) {
    at(0, x) = x;
    at(x, 0) = x;
    row_used[0][x] = row_used[x][x] = 1;
    col_used[x][x] = col_used[0][x] = 1;
  }
  std::set<std::vector<int>> found;
  auto consistent = [&](int a, int b) {
    int v = at(a, b);
    for (int x = 0; x < n; ++x) {
      // (ab)x = a(bx)
      int l = at(v, x), bx = at(b, x);
      if (l >= 0 && bx >= 0 && at(a, bx) >= 0 && at(a, bx) != l) return false;
      // (xa)b = x(ab)
      int xa = at(x, a), r = at(x, v);
      if (xa >= 0 && r >= 0 && at(xa, b) >= 0 && at(xa, b) != r) return false;
    }
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        // a = pq: (pq)b = p(qb)
        if (at(p, q) == a) {
          int qb = at(q, b);
          if (qb >= 0 && at(p, qb) >= 0 && at(p, qb) != v) return false;
        }
        // b = pq: a(pq) = (ap)q
        if (at(p, q) == b) {
          int ap = at(a, p);
          if (ap >= 0 && at(ap, q) >= 0 && at(ap, q) != v) return false;
        }
      }
    return true;
  };
  std::function<void(int)> rec = [&](int cell) {
    if (n <= 1 || cell == (n - 1) * (n - 1)) {
      found.insert(canonical_table(n, t));
      return;
    }
    int a = 1 + cell / (n - 1), b = 1 + cell % (n - 1);
    for (int v = 0; v < n; ++v) {
      if (row_used[a][v] || col_used[b][v]) continue;
      at(a, b) = v;
      row_used[a][v] = col_used[b][v] = 1;
      if (consistent(a, b)) rec(cell + 1);
      row_used[a][v] = col_used[b][v] = 0;
      at(a, b) = -1;
    }
  };
  rec(0);
  std::vector<StructRef> out;
  for (const auto& tab : found) out.push_back(make_structure(Kind::kGroup, n, tab));
  return out;
}

std::vector<StructRef> unital_magmas(int n, bool right_cancellative) {
  std::set<std::vector<int>> found;
  std::vector<int> t(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    t[x] = x;
    t[static_cast<size_t>(x) * n] = x;
  }
  if (n == 1) {
    found.insert(t);
  } else if (right_cancellative) {
    // Column j is a permutation sending row 0 to j.
    std::vector<std::vector<std::vector<int>>> by_head(n);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do by_head[p[0]].push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<size_t> choice(n, 0);
    while (true) {
      for (int j = 1; j < n; ++j)
        for (int x = 0; x < n; ++x) t[static_cast<size_t>(x) * n + j] = by_head[j][choice[j]][x];
      found.insert(canonical_table(n, t));
      int j = 1;
      while (j < n && ++choice[j] == by_head[j].size()) choice[j++] = 0;
      if (j == n) break;
    }
  } else {
    const int free = (n - 1) * (n - 1);
    std::vector<int> digits(free, 0);
    while (true) {
      for (int c = 0; c < free; ++c) t[static_cast<size_t>(1 + c / (n - 1)) * n + 1 + c % (n - 1)] = digits[c];
      found.insert(canonical_table(n, t));
      int c = 0;
      while (c < free && ++digits[c] == n) digits[c++] = 0;
      if (c == free) break;
    }
  }
  std::vector<StructRef> out;
  int index = 0;
  for (const auto& tab : found) {
    if (right_cancellative) {
      out.push_back(from_canonical(Kind::kUnitalMagma, n, tab, index++));
    } else {
      // Unital magmas without right cancellation are outside the ambient
      // kind's laws; they are kept as trusted tables for search only.
      out.push_back(make_trusted(Kind::kUnitalMagma, n, tab, "U" + std::to_string(n) + "_" + std::to_string(index++)));
    }
  }
  return out;
}

Corpus enumerate(Kind kind, int max_size) {
  if (max_size < 1) throw Error(ErrorCode::kBadInput, "max_size must be positive");
  Corpus c{kind, max_size, {}, {}};
  auto cap = [&](int limit) {
    if (max_size > limit)
      throw Error(ErrorCode::kBoundTooLarge, std::string(kind_name(kind)) + " corpus is capped at " +
                                                 std::to_string(limit));
  };
  switch (kind) {
    case Kind::kPointedSet:
      cap(kPointedSetCap);
      for (int n = 1; n <= max_size; ++n) c.items.push_back(pointed_set(n));
      c.provenance = "pointed-sets(one per size)";
      break;
    case Kind::kAbelianGroup:
      cap(kAbelianCap);
      for (int n = 1; n <= max_size; ++n)
        for (const auto& f : invariant_factor_lists(n)) c.items.push_back(abelian_from_factors(f));
      c.provenance = "invariant-factors";
      break;
    case Kind::kGroup:
      cap(kGroupCap);
      c.items = builtin_groups(max_size);
      c.provenance = "builtin-groups";
      break;
    case Kind::kUnitalMagma:
      cap(kMagmaCap);
      for (int n = 1; n <= max_size; ++n)
        for (auto& m : unital_magmas(n, true)) c.items.push_back(std::move(m));
      c.provenance = "latin-squares-with-identity";
      break;
  }
  return c;
}

}  // namespace icat
