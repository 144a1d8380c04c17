#include "mixt/lr.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "mixt/diagram.hpp"
#include "mixt/errors.hpp"

namespace mixt {

namespace {

struct LRFill {
  // cells of lambda/mu in reverse reading order: rows top to bottom, each
  // row right to left
  std::vector<std::pair<int, int>> cells;  // (row, col), 1-based
  std::vector<std::vector<int>> entry;     // entry[row][col], 0 = outside/unset
  const Partition *lam, *mu, *nu;
  std::vector<int> used;  // count of each letter placed so far
  long long count = 0;

  void run(size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int row_bound = (c < lam->part(r)) ? entry[r][c + 1] : nu->length();
    int col_lower = (r >= 2 && c > mu->part(r - 1)) ? entry[r - 1][c] : 0;
    for (int t = col_lower + 1; t <= row_bound; ++t) {
      if (used[t] >= nu->part(t)) continue;
      if (t >= 2 && used[t] + 1 > used[t - 1]) continue;  // lattice word
      ++used[t];
      entry[r][c] = t;
      run(idx + 1);
      entry[r][c] = 0;
      --used[t];
    }
  }
};

long long lr_count(const Partition& lam, const Partition& mu,
                   const Partition& nu) {
  LRFill f;
  f.lam = &lam;
  f.mu = &mu;
  f.nu = &nu;
  f.used.assign(nu.length() + 1, 0);
  f.entry.assign(lam.length() + 1, {});
  for (int r = 1; r <= lam.length(); ++r) {
    f.entry[r].assign(lam.part(r) + 2, 0);
    for (int c = lam.part(r); c > mu.part(r); --c) f.cells.push_back({r, c});
  }
  f.run(0);
  return f.count;
}

std::mutex lr_mutex;
std::map<std::tuple<Partition, Partition, Partition>, Integer> lr_cache;

}  // namespace

Integer lr_coeff(const Partition& lambda, const Partition& mu,
                 const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (mu.length() + nu.length() < lambda.length()) return 0;
  if (mu.part(1) + nu.part(1) < lambda.part(1)) return 0;
  // symmetric in the lower arguments; canonicalize the cache key
  const Partition& a = std::min(mu, nu);
  const Partition& b = std::max(mu, nu);
  auto key = std::make_tuple(lambda, a, b);
  {
    std::lock_guard<std::mutex> lock(lr_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  Integer value = lr_count(lambda, a, b);
  std::lock_guard<std::mutex> lock(lr_mutex);
  lr_cache.emplace(std::move(key), value);
  return value;
}

std::map<Partition, Integer> lr_expand_skew(const Partition& lambda,
                                            const Partition& mu) {
  std::map<Partition, Integer> out;
  if (!lambda.contains(mu)) return out;
  int rest = static_cast<int>(lambda.size() - mu.size());
  for (const Partition& nu : partitions_of(rest, lambda.part(1))) {
    Integer c = lr_coeff(lambda, mu, nu);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

std::map<Partition, Integer> lr_product(const Partition& alpha,
                                        const Partition& beta) {
  std::map<Partition, Integer> out;
  int total = static_cast<int>(alpha.size() + beta.size());
  for (const Partition& nu : partitions_of(total, alpha.part(1) + beta.part(1))) {
    if (nu.length() > alpha.length() + beta.length()) continue;
    if (!nu.contains(alpha)) continue;
    Integer c = lr_coeff(nu, alpha, beta);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

Integer weyl_dim(const std::vector<int>& wt) {
  int d = static_cast<int>(wt.size());
  Integer num = 1, den = 1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      num *= wt[i] - wt[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

Integer schur_dim(const Partition& mu, int d) {
  if (mu.length() > d) return 0;
  std::vector<int> wt(d, 0);
  for (int i = 0; i < mu.length(); ++i) wt[i] = mu.part(i + 1);
  return weyl_dim(wt);
}

std::map<std::vector<int>, Integer> schur_polynomial(const Partition& mu,
                                                     int nvars) {
  std::map<std::vector<int>, Integer> out;
  if (mu.length() > nvars) return out;
  if (mu.empty()) {
    out[std::vector<int>(nvars, 0)] = 1;
    return out;
  }
  // enumerate semistandard tableaux of shape mu with entries 1..nvars
  std::vector<std::vector<int>> entry(mu.length() + 1);
  for (int r = 1; r <= mu.length(); ++r) entry[r].assign(mu.part(r) + 1, 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu.part(r); ++c) cells.push_back({r, c});
  std::vector<int> expo(nvars, 0);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      out[expo] += 1;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 1) lo = std::max(lo, entry[r][c - 1]);
    if (r > 1) lo = std::max(lo, entry[r - 1][c] + 1);
    for (int t = lo; t <= nvars; ++t) {
      entry[r][c] = t;
      ++expo[t - 1];
      self(self, idx + 1);
      --expo[t - 1];
      entry[r][c] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

HighestWeight covariant_weight(const Partition& lambda, int m, int n) {
  if (!is_hook(lambda, m, n)) throw NotHook();
  Partition conj = lambda.conjugate();
  HighestWeight w;
  for (int i = 1; i <= m; ++i) w.left.push_back(lambda.part(i));
  for (int j = 1; j <= n; ++j) w.right.push_back(std::max(0, conj.part(j) - m));
  return w;
}

namespace {
std::mutex cov_mutex;
std::map<std::tuple<Partition, int, int>, Integer> cov_cache;
}  // namespace

Integer covariant_dim(const Partition& lambda, int m, int n) {
  auto key = std::make_tuple(lambda, m, n);
  {
    std::lock_guard<std::mutex> lock(cov_mutex);
    auto it = cov_cache.find(key);
    if (it != cov_cache.end()) return it->second;
  }
  // hook Schur function: hs_lambda(x;y) = sum_{mu,nu} c^lambda_{mu,nu}
  // s_mu(x) s_{nu'}(y); evaluate at all ones
  Integer total = 0;
  std::vector<int> head;
  for (int i = 1; i <= std::min(m, lambda.length()); ++i)
    head.push_back(lambda.part(i));
  for (const Partition& mu : subpartitions_of(Partition(head))) {
    Integer dm = schur_dim(mu, m);
    if (dm == 0) continue;
    for (const auto& [nu, c] : lr_expand_skew(lambda, mu)) {
      Integer dn = schur_dim(nu.conjugate(), n);
      if (dn != 0) total += c * dm * dn;
    }
  }
  std::lock_guard<std::mutex> lock(cov_mutex);
  cov_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace mixt
