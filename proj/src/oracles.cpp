#include "hlwhit/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlwhit {
namespace oracles {

namespace {

unsigned mod_inverse(unsigned a, unsigned q) {
  // q prime; Fermat
  unsigned result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

using Vec = std::vector<unsigned>;
using Rows = std::vector<Vec>;

// In-place row reduction; returns pivot columns.
std::vector<int> rref(Rows& rows, unsigned q) {
  std::vector<int> pivots;
  size_t row = 0;
  int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int col = 0; col < width && row < rows.size(); ++col) {
    size_t sel = row;
    while (sel < rows.size() && rows[sel][static_cast<size_t>(col)] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[row], rows[sel]);
    unsigned inv = mod_inverse(rows[row][static_cast<size_t>(col)], q);
    for (auto& v : rows[row]) v = v * inv % q;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row) continue;
      unsigned f = rows[r][static_cast<size_t>(col)];
      if (!f) continue;
      for (int j = 0; j < width; ++j)
        rows[r][static_cast<size_t>(j)] =
            (rows[r][static_cast<size_t>(j)] + (q - f) * rows[row][static_cast<size_t>(j)]) % q;
    }
    pivots.push_back(col);
    ++row;
  }
  rows.resize(pivots.size());
  return pivots;
}

// Visit every d-dimensional subspace of F_q^r once, as an RREF basis plus
// its pivot columns.
void for_each_subspace(int r, int d, unsigned q,
                       const std::function<void(const Rows&, const std::vector<int>&)>& visit) {
  if (d == 0) {
    Rows empty;
    visit(empty, {});
    return;
  }
  std::vector<int> pivots(static_cast<size_t>(d));
  std::function<void(int, int)> choose = [&](int next, int idx) {
    if (idx == d) {
      std::vector<std::pair<int, int>> free_pos;  // (row, col) free entries
      std::vector<bool> is_pivot(static_cast<size_t>(r), false);
      for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
      for (int i = 0; i < d; ++i)
        for (int c = pivots[static_cast<size_t>(i)] + 1; c < r; ++c)
          if (!is_pivot[static_cast<size_t>(c)]) free_pos.emplace_back(i, c);

      Rows basis(static_cast<size_t>(d), Vec(static_cast<size_t>(r), 0));
      for (int i = 0; i < d; ++i)
        basis[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = 1;
      std::vector<unsigned> vals(free_pos.size(), 0);  // odometer
      while (true) {
        for (size_t i = 0; i < free_pos.size(); ++i)
          basis[static_cast<size_t>(free_pos[i].first)][static_cast<size_t>(free_pos[i].second)] =
              vals[i];
        visit(basis, pivots);
        size_t k = 0;
        while (k < vals.size() && ++vals[k] == q) vals[k++] = 0;
        if (k == vals.size()) break;
      }
      return;
    }
    for (int c = next; c <= r - (d - idx); ++c) {
      pivots[static_cast<size_t>(idx)] = c;
      choose(c + 1, idx + 1);
    }
  };
  choose(0, 0);
}

// Reduce v against an RREF basis: zero out the pivot coordinates.
Vec reduce_mod(const Rows& basis, const std::vector<int>& pivots, Vec v, unsigned q) {
  for (size_t i = 0; i < basis.size(); ++i) {
    unsigned f = v[static_cast<size_t>(pivots[i])];
    if (!f) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (q - f) * basis[i][j]) % q;
  }
  return v;
}

struct Level {
  int r = 0;
  Rows act;   // act[c] = image of e_c under the induced action (length r)
  Rows lift;  // ambient representative of each quotient coordinate
};

struct FlagSearch {
  unsigned q = 2;
  int m = 0;
  std::vector<int> type;
  const std::function<void(const Flag&)>* collect = nullptr;
  Rows chain_rows;  // ambient spanning rows of the chain so far
  std::vector<Rows> steps;
  long count = 0;

  bool collecting() const { return collect && *collect; }

  void recurse(const Level& lvl, size_t part_idx) {
    if (part_idx == type.size()) {
      ++count;
      if (collecting()) {
        Flag f;
        f.q = q;
        f.m = m;
        f.type = type;
        f.steps = steps;
        (*collect)(f);
      }
      return;
    }
    int d = type[part_idx];
    for_each_subspace(lvl.r, d, q, [&](const Rows& basis, const std::vector<int>& pivots) {
      // invariance: the action must keep every basis row inside the span
      for (const auto& b : basis) {
        Vec img(static_cast<size_t>(lvl.r), 0);
        for (int c = 0; c < lvl.r; ++c) {
          unsigned bc = b[static_cast<size_t>(c)];
          if (!bc) continue;
          for (int rr = 0; rr < lvl.r; ++rr)
            img[static_cast<size_t>(rr)] =
                (img[static_cast<size_t>(rr)] +
                 bc * lvl.act[static_cast<size_t>(c)][static_cast<size_t>(rr)]) %
                q;
        }
        Vec rem = reduce_mod(basis, pivots, std::move(img), q);
        for (unsigned v : rem)
          if (v) return;  // not invariant: prune this branch entirely
      }

      // quotient coordinates = non-pivot columns
      std::vector<int> rest;
      std::vector<bool> is_pivot(static_cast<size_t>(lvl.r), false);
      for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
      for (int c = 0; c < lvl.r; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) rest.push_back(c);

      Level next;
      next.r = static_cast<int>(rest.size());
      next.act.assign(static_cast<size_t>(next.r), Vec(static_cast<size_t>(next.r), 0));
      for (int cc = 0; cc < next.r; ++cc) {
        Vec rem = reduce_mod(basis, pivots, lvl.act[static_cast<size_t>(rest[static_cast<size_t>(cc)])], q);
        for (int rr = 0; rr < next.r; ++rr)
          next.act[static_cast<size_t>(cc)][static_cast<size_t>(rr)] =
              rem[static_cast<size_t>(rest[static_cast<size_t>(rr)])];
      }
      for (int c : rest) next.lift.push_back(lvl.lift[static_cast<size_t>(c)]);

      size_t saved = chain_rows.size();
      if (collecting()) {
        for (const auto& b : basis) {
          Vec ambient(static_cast<size_t>(m), 0);
          for (int c = 0; c < lvl.r; ++c) {
            unsigned bc = b[static_cast<size_t>(c)];
            if (!bc) continue;
            for (int j = 0; j < m; ++j)
              ambient[static_cast<size_t>(j)] =
                  (ambient[static_cast<size_t>(j)] +
                   bc * lvl.lift[static_cast<size_t>(c)][static_cast<size_t>(j)]) %
                  q;
          }
          chain_rows.push_back(std::move(ambient));
        }
        Rows reduced = chain_rows;
        rref(reduced, q);
        steps.push_back(std::move(reduced));
      }

      recurse(next, part_idx + 1);

      if (collecting()) {
        chain_rows.resize(saved);
        steps.pop_back();
      }
    });
  }
};

long power(long base, int exp) {
  long out = 1;
  while (exp--) out *= base;
  return out;
}

}  // namespace

FqMatrix jordan_matrix(const Partition& mu, unsigned q) {
  FqMatrix j;
  j.q = q;
  j.m = mu.size();
  j.a.assign(static_cast<size_t>(j.m) * j.m, 0);
  int offset = 0;
  for (int i = 0; i < mu.length(); ++i) {
    int size = mu.part(i);
    for (int r = 0; r < size; ++r) {
      j.at(offset + r, offset + r) = 1;
      if (r + 1 < size) j.at(offset + r, offset + r + 1) = 1;
    }
    offset += size;
  }
  return j;
}

long flag_count(const Partition& mu, const Partition& lambda, unsigned q, long budget,
                const std::function<void(const Flag&)>& collect) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("flag_count: |mu| and |lambda| differ");
  int m = mu.size();
  if (m > 5) throw std::invalid_argument("flag_count: m exceeds the desk-scale bound of 5");
  if (q != 2 && q != 3 && q != 5)
    throw std::invalid_argument("flag_count: q must be one of 2, 3, 5");
  if (power(q, m) > budget)
    throw std::invalid_argument("flag_count: q^m exceeds the enumeration budget");

  FqMatrix j = jordan_matrix(mu, q);
  Level top;
  top.r = m;
  top.act.assign(static_cast<size_t>(m), Vec(static_cast<size_t>(m), 0));
  top.lift.assign(static_cast<size_t>(m), Vec(static_cast<size_t>(m), 0));
  for (int c = 0; c < m; ++c) {
    for (int r = 0; r < m; ++r)
      top.act[static_cast<size_t>(c)][static_cast<size_t>(r)] = j.at(r, c);
    top.lift[static_cast<size_t>(c)][static_cast<size_t>(c)] = 1;
  }

  FlagSearch search;
  search.q = q;
  search.m = m;
  search.type = lambda.parts();
  search.collect = &collect;
  search.recurse(top, 0);
  return search.count;
}

SymFunc modified_h_via_flags(const Partition& mu, unsigned q, int num_vars, long budget) {
  SymFunc out(mu.size(), num_vars, Basis::Monomial);
  for (const auto& lambda : enumerate_partitions(mu.size())) {
    if (lambda.length() > num_vars) continue;  // m_lambda = 0 in num_vars variables
    long count = flag_count(mu, lambda, q, budget);
    if (count) out.set_coeff(lambda, RatFunc(Rational(count)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Charge statistic

namespace {

// Semistandard tableaux of the given shape/content, filled cell by cell.
void enumerate_ssyt(const Partition& shape, std::vector<int>& remaining,
                    std::vector<std::vector<int>>& rows, int r, int c,
                    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (r == shape.length()) {
    visit(rows);
    return;
  }
  int next_r = r, next_c = c + 1;
  if (next_c == shape.part(r)) {
    ++next_r;
    next_c = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
  if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (!remaining[static_cast<size_t>(v) - 1]) continue;
    --remaining[static_cast<size_t>(v) - 1];
    rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    enumerate_ssyt(shape, remaining, rows, next_r, next_c, visit);
    ++remaining[static_cast<size_t>(v) - 1];
  }
}

// Charge of a word with partition content: repeatedly extract a standard
// subword (the rightmost 1, then the first 2 after it in cyclic left-to-right
// order, then the first 3 after that 2, and so on), sum its index statistic
// (the index of 1 is 0; the index of v is that of v-1, plus one exactly when
// v sits to the left of v-1 in the word), remove it, and continue with the
// rest. The convention is pinned by the flag-count checks and by
// K_{lambda,mu} being monic of degree n(mu) - n(lambda).
long charge_of_word(std::vector<int> w) {
  long total = 0;
  while (!w.empty()) {
    int maxval = *std::max_element(w.begin(), w.end());
    std::vector<int> pos(static_cast<size_t>(maxval), -1);
    int cur = -1;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
      if (w[static_cast<size_t>(i)] == 1) {
        cur = i;
        break;
      }
    pos[0] = cur;
    for (int v = 2; v <= maxval; ++v) {
      int i = cur;
      while (true) {
        i = (i + 1 == static_cast<int>(w.size())) ? 0 : i + 1;
        if (w[static_cast<size_t>(i)] == v) break;
      }
      pos[static_cast<size_t>(v) - 1] = i;
      cur = i;
    }
    long index = 0;
    for (int v = 2; v <= maxval; ++v) {
      if (pos[static_cast<size_t>(v) - 1] < pos[static_cast<size_t>(v) - 2]) ++index;
      total += index;
    }
    std::vector<bool> remove(w.size(), false);
    for (int p : pos) remove[static_cast<size_t>(p)] = true;
    std::vector<int> rest;
    for (size_t i = 0; i < w.size(); ++i)
      if (!remove[i]) rest.push_back(w[i]);
    w = std::move(rest);
  }
  return total;
}

}  // namespace

Poly charge_kostka_oracle(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("charge_kostka_oracle: size mismatch");
  if (lambda.size() > 6)
    throw std::invalid_argument("charge_kostka_oracle: bounded at |lambda| <= 6");

  std::vector<long> counts;  // counts[c] = number of tableaux of charge c
  std::vector<int> remaining = mu.parts();
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < lambda.length(); ++i)
    rows.emplace_back(static_cast<size_t>(lambda.part(i)), 0);

  enumerate_ssyt(lambda, remaining, rows, 0, 0, [&](const std::vector<std::vector<int>>& tab) {
    // reading word: right to left along rows, top row first
    std::vector<int> word;
    for (const auto& row : tab) word.insert(word.end(), row.rbegin(), row.rend());
    long c = charge_of_word(std::move(word));
    if (static_cast<size_t>(c) >= counts.size()) counts.resize(static_cast<size_t>(c) + 1, 0);
    ++counts[static_cast<size_t>(c)];
  });

  std::vector<Rational> coeffs;
  coeffs.reserve(counts.size());
  for (long v : counts) coeffs.emplace_back(Rational(v));
  return Poly(std::move(coeffs));
}

std::vector<Rational> cauchy_truncated(const std::vector<Rational>& x,
                                       const std::vector<Rational>& y, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("cauchy_truncated: negative truncation");
  std::vector<Rational> series(static_cast<size_t>(max_degree) + 1, Rational(0));
  series[0] = 1;
  for (const Rational& xi : x) {
    for (const Rational& yj : y) {
      Rational ratio = xi * yj;
      // multiply by 1/(1 - ratio T): new[d] = old[d] + ratio * new[d-1]
      for (int d = 1; d <= max_degree; ++d)
        series[static_cast<size_t>(d)] += ratio * series[static_cast<size_t>(d) - 1];
    }
  }
  return series;
}

}  // namespace oracles
}  // namespace hlwhit
