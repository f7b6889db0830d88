#include "exel/word_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace exel::sg {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (ElementId x : w) h = h * 1000003u + x + 0x9e3779b9u;
    return h;
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

OracleResult congruence_classes(const FiniteGroupoid& g, std::size_t max_len,
                                const OracleOptions& options) {
  if (max_len == 0) throw BudgetExceeded("oracle needs max_len >= 1");
  const std::size_t internal_len = max_len + options.slack;

  // Enumerate all composable words up to the internal length, shortest
  // first, each length block in lexicographic order.
  std::vector<Word> words;
  std::unordered_map<Word, std::uint32_t, WordHash> index;
  std::size_t prev_begin = 0;
  for (ElementId x = 0; x < g.size(); ++x) {
    index.emplace(Word{x}, words.size());
    words.push_back({x});
  }
  std::size_t reported_end = 0;
  for (std::size_t len = 2; len <= internal_len; ++len) {
    if (len == max_len + 1) reported_end = words.size();
    std::size_t begin = prev_begin, end = words.size();
    prev_begin = end;
    for (std::size_t i = begin; i < end; ++i) {
      ElementId last = words[i].back();
      for (ElementId t = 0; t < g.size(); ++t) {
        if (g.source(last) != g.range(t)) continue;
        Word w = words[i];
        w.push_back(t);
        if (words.size() >= options.max_internal_words)
          throw BudgetExceeded("congruence oracle exceeded " +
                               std::to_string(options.max_internal_words) +
                               " internal words");
        index.emplace(w, words.size());
        words.push_back(std::move(w));
      }
    }
  }
  if (internal_len == max_len) reported_end = words.size();
  if (reported_end == 0) reported_end = words.size();

  auto lookup = [&](const Word& w) -> std::uint32_t {
    auto it = index.find(w);
    if (it == index.end())
      throw Error("internal: rewrite left the enumerated word pool");
    return it->second;
  };

  UnionFind uf(words.size());

  // One-step rewrites in context, both directions. Every produced word is
  // composable and within the internal length, hence already enumerated.
  for (std::uint32_t wi = 0; wi < words.size(); ++wi) {
    const Word& w = words[wi];
    const std::size_t n = w.size();

    for (std::size_t i = 0; i < n; ++i) {
      // (iii) forward: delete an identity letter next to a neighbour it
      // annihilates with. Adjacency makes the side conditions automatic.
      if (g.is_identity(w[i]) && n > 1) {
        Word shorter;
        shorter.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) shorter.push_back(w[j]);
        if (i + 1 < n || i > 0) uf.unite(wi, lookup(shorter));
      }
      // (iii) backward: insert r before position i, or d after it.
      if (n + 1 <= internal_len) {
        Word ins;
        ins.reserve(n + 1);
        ins.assign(w.begin(), w.begin() + i);
        ins.push_back(g.range(w[i]));
        ins.insert(ins.end(), w.begin() + i, w.end());
        uf.unite(wi, lookup(ins));

        ins.assign(w.begin(), w.begin() + i + 1);
        ins.push_back(g.source(w[i]));
        ins.insert(ins.end(), w.begin() + i + 1, w.end());
        uf.unite(wi, lookup(ins));
      }
    }

    for (std::size_t i = 0; i + 2 < n; ++i) {
      // (i) forward: [s^{-1}][s][t] -> [s^{-1}][st].
      if (w[i] == g.inverse(w[i + 1])) {
        ElementId st = g.compose(w[i + 1], w[i + 2]).value();
        Word shorter(w.begin(), w.begin() + i + 1);
        shorter.push_back(st);
        shorter.insert(shorter.end(), w.begin() + i + 3, w.end());
        uf.unite(wi, lookup(shorter));
      }
      // (ii) forward: [s][t][t^{-1}] -> [st][t^{-1}].
      if (w[i + 2] == g.inverse(w[i + 1])) {
        ElementId st = g.compose(w[i], w[i + 1]).value();
        Word shorter(w.begin(), w.begin() + i);
        shorter.push_back(st);
        shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
        uf.unite(wi, lookup(shorter));
      }
    }

    if (n + 1 <= internal_len) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        // (i) backward: [a][m] -> [a][a^{-1}][am].
        {
          ElementId am = g.compose(w[i], w[i + 1]).value();
          Word longer(w.begin(), w.begin() + i + 1);
          longer.push_back(g.inverse(w[i]));
          longer.push_back(am);
          longer.insert(longer.end(), w.begin() + i + 2, w.end());
          uf.unite(wi, lookup(longer));
        }
        // (ii) backward: [m][b] -> [mb][b^{-1}][b].
        {
          ElementId mb = g.compose(w[i], w[i + 1]).value();
          Word longer(w.begin(), w.begin() + i);
          longer.push_back(mb);
          longer.push_back(g.inverse(w[i + 1]));
          longer.insert(longer.end(), w.begin() + i + 1, w.end());
          uf.unite(wi, lookup(longer));
        }
      }
    }
  }

  OracleResult result;
  result.words.assign(words.begin(), words.begin() + reported_end);
  result.class_of.resize(reported_end);
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  std::set<std::uint32_t> roots_seen;
  result.class_count_at_len.assign(max_len, 0);
  std::size_t len_cursor = 1;
  for (std::uint32_t i = 0; i < reported_end; ++i) {
    while (words[i].size() > len_cursor) {
      result.class_count_at_len[len_cursor - 1] =
          static_cast<std::uint32_t>(roots_seen.size());
      ++len_cursor;
    }
    std::uint32_t root = uf.find(i);
    roots_seen.insert(root);
    auto [it, fresh] =
        renumber.emplace(root, static_cast<std::uint32_t>(renumber.size()));
    (void)fresh;
    result.class_of[i] = it->second;
  }
  for (; len_cursor <= max_len; ++len_cursor)
    result.class_count_at_len[len_cursor - 1] =
        static_cast<std::uint32_t>(roots_seen.size());
  result.class_count = static_cast<std::uint32_t>(renumber.size());
  result.stable =
      max_len >= 2 && result.class_count_at_len[max_len - 1] ==
                          result.class_count_at_len[max_len - 2];
  return result;
}

}  // namespace exel::sg
