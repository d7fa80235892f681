#include "convext/jet.hpp"

#include <map>
#include <mutex>

namespace convext {

namespace {

void compositions(int n, int deg, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[static_cast<size_t>(pos)] = deg;
    out.push_back(cur);
    return;
  }
  for (int v = deg; v >= 0; --v) {
    cur[static_cast<size_t>(pos)] = v;
    compositions(n, deg - v, pos + 1, cur, out);
  }
}

void enumerate(int n, int K, std::vector<std::vector<int>>& out) {
  // graded order: by total degree, lexicographic within a degree
  std::vector<int> cur(static_cast<size_t>(n), 0);
  for (int deg = 0; deg <= K; ++deg) compositions(n, deg, 0, cur, out);
}

}  // namespace

const JetN::Layout& JetN::Layout::get(int n, int K) {
  static std::map<std::pair<int, int>, Layout> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, K});
  if (it != cache.end()) return it->second;

  Layout lay;
  lay.n = n;
  lay.K = K;
  enumerate(n, K, lay.exps);

  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < lay.exps.size(); ++i) index_of[lay.exps[i]] = static_cast<int>(i);

  lay.prod_table.assign(lay.exps.size(), std::vector<int>(lay.exps.size(), -1));
  for (size_t i = 0; i < lay.exps.size(); ++i)
    for (size_t j = 0; j < lay.exps.size(); ++j) {
      std::vector<int> sum(static_cast<size_t>(n));
      int deg = 0;
      for (int v = 0; v < n; ++v) {
        sum[static_cast<size_t>(v)] = lay.exps[i][static_cast<size_t>(v)] + lay.exps[j][static_cast<size_t>(v)];
        deg += sum[static_cast<size_t>(v)];
      }
      if (deg <= K) lay.prod_table[i][j] = index_of.at(sum);
    }

  auto [pos, ok] = cache.emplace(std::make_pair(n, K), std::move(lay));
  (void)ok;
  return pos->second;
}

}  // namespace convext
