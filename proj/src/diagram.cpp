#include "mixt/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "mixt/errors.hpp"

namespace mixt {

bool HighestWeight::dominant() const {
  for (size_t i = 1; i < left.size(); ++i)
    if (left[i - 1] < left[i]) return false;
  for (size_t i = 1; i < right.size(); ++i)
    if (right[i - 1] < right[i]) return false;
  return true;
}

WeightDiagram::WeightDiagram(int lo, std::vector<Label> labels, Label left_tail,
                             Label right_tail)
    : lo_(lo),
      hi_(lo + static_cast<int>(labels.size()) - 1),
      labels_(std::move(labels)),
      left_tail_(left_tail),
      right_tail_(right_tail) {
  normalize();
}

void WeightDiagram::normalize() {
  // canonical window: [A-1, B+1] with A the least vertex differing from the
  // left tail and B the greatest differing from the right tail
  bool haveA = false, haveB = false;
  int A = 0, B = 0;
  for (int v = lo_; v <= hi_; ++v)
    if (at(v) != left_tail_) {
      A = v;
      haveA = true;
      break;
    }
  for (int v = hi_; v >= lo_; --v)
    if (at(v) != right_tail_) {
      B = v;
      haveB = true;
      break;
    }
  if (left_tail_ != right_tail_) {
    // a split diagram always has a transition; pin it even when the window
    // content is all one tail
    if (!haveA) A = hi_ + 1, haveA = true;
    if (!haveB) B = lo_ - 1, haveB = true;
  }
  if (!haveA && !haveB) {
    lo_ = 0;
    hi_ = -1;
    labels_.clear();
    return;
  }
  int nlo = A - 1, nhi = B + 1;
  std::vector<Label> nl;
  nl.reserve(nhi - nlo + 1);
  for (int v = nlo; v <= nhi; ++v) nl.push_back(at(v));
  lo_ = nlo;
  hi_ = nhi;
  labels_ = std::move(nl);
}

WeightDiagram WeightDiagram::with(int v, Label l) const {
  int nlo = std::min(lo_, v), nhi = std::max(hi_, v);
  std::vector<Label> nl;
  nl.reserve(nhi - nlo + 1);
  for (int u = nlo; u <= nhi; ++u) nl.push_back(u == v ? l : at(u));
  return WeightDiagram(nlo, std::move(nl), left_tail_, right_tail_);
}

WeightDiagram WeightDiagram::with_pair_swapped(int i, int j) const {
  Label a = at(i), b = at(j);
  return with(i, b).with(j, a);
}

std::vector<int> WeightDiagram::positions(Label l) const {
  std::vector<int> out;
  for (int v = lo_; v <= hi_; ++v)
    if (at(v) == l) out.push_back(v);
  return out;
}

WeightDiagram diagram_of_weight(const HighestWeight& w, int m, int n) {
  if (w.m() != m || w.n() != n)
    throw std::invalid_argument("weight shape does not match (m|n)");
  if (!w.dominant()) throw NotDominant();
  std::set<int> ix, io;
  for (int i = 1; i <= m; ++i) ix.insert(w.left[i - 1] - i + 1);
  for (int j = 1; j <= n; ++j) io.insert(j - m - w.right[j - 1]);
  int lo = 0, hi = 0;
  if (!ix.empty() || !io.empty()) {
    lo = std::min(ix.empty() ? *io.begin() : *ix.begin(),
                  io.empty() ? *ix.begin() : *io.begin());
    hi = std::max(ix.empty() ? *io.rbegin() : *ix.rbegin(),
                  io.empty() ? *ix.rbegin() : *io.rbegin());
  }
  std::vector<Label> labels;
  for (int v = lo - 1; v <= hi + 1; ++v) {
    bool x = ix.count(v), o = io.count(v);
    labels.push_back(x && o   ? Label::Down
                     : x      ? Label::Cross
                     : o      ? Label::Circle
                              : Label::Up);
  }
  return WeightDiagram(lo - 1, std::move(labels), Label::Up, Label::Up);
}

HighestWeight weight_of_diagram(const WeightDiagram& d, int m, int n) {
  if (d.left_tail() != Label::Up || d.right_tail() != Label::Up)
    throw MalformedDiagram("highest-weight diagram must have Up tails");
  std::vector<int> xv, ov;
  for (int v = d.lo(); v <= d.hi(); ++v) {
    Label l = d.at(v);
    if (l == Label::Cross || l == Label::Down) xv.push_back(v);
    if (l == Label::Circle || l == Label::Down) ov.push_back(v);
  }
  if (static_cast<int>(xv.size()) != m || static_cast<int>(ov.size()) != n)
    throw MalformedDiagram("wrong number of crosses/circles/downs");
  HighestWeight w;
  std::sort(xv.rbegin(), xv.rend());
  for (int i = 1; i <= m; ++i) w.left.push_back(xv[i - 1] + i - 1);
  for (int j = 1; j <= n; ++j) w.right.push_back(j - m - ov[j - 1]);
  if (!w.dominant()) throw MalformedDiagram("recovered weight not dominant");
  return w;
}

WeightDiagram diagram_of_bipartition(const Bipartition& lambda, int delta) {
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  const Partition& L = lambda.left;
  const Partition& R = lambda.right;
  std::set<int> fa, fo;  // finite exceptional members of I_and / I_or
  for (int i = 1; i <= L.length(); ++i) fa.insert(L.part(i) - i + 1);
  for (int i = 1; i <= R.length(); ++i) fo.insert(i - delta - R.part(i));
  int andTail = -L.length();          // every v <= andTail lies in I_and
  int orTail = R.length() + 1 - delta;  // every v >= orTail lies in I_or
  auto inAnd = [&](int v) { return v <= andTail || fa.count(v) > 0; };
  auto inOr = [&](int v) { return v >= orTail || fo.count(v) > 0; };
  int lo = std::min({andTail, orTail, 0});
  int hi = std::max({andTail, orTail, 0});
  for (int v : fa) lo = std::min(lo, v), hi = std::max(hi, v);
  for (int v : fo) lo = std::min(lo, v), hi = std::max(hi, v);
  lo -= 2;
  hi += 2;
  std::vector<Label> labels;
  for (int v = lo; v <= hi; ++v) {
    bool a = inAnd(v), o = inOr(v);
    labels.push_back(a && o   ? Label::Cross
                     : a      ? Label::Up
                     : o      ? Label::Down
                              : Label::Circle);
  }
  return WeightDiagram(lo, std::move(labels), Label::Up, Label::Down);
}

Bipartition bipartition_of_diagram(const WeightDiagram& d, int delta) {
  if (d.left_tail() != Label::Up || d.right_tail() != Label::Down)
    throw MalformedDiagram("bipartition diagram must have Up/Down tails");
  int crosses = 0, circles = 0;
  std::vector<int> av, bv;
  for (int v = d.lo(); v <= d.hi(); ++v) {
    Label l = d.at(v);
    if (l == Label::Cross) ++crosses;
    if (l == Label::Circle) ++circles;
    if (l == Label::Up || l == Label::Cross) av.push_back(v);
    if (l == Label::Down || l == Label::Cross) bv.push_back(v);
  }
  if (crosses - circles != delta)
    throw MalformedDiagram("#crosses - #circles != delta");
  std::sort(av.rbegin(), av.rend());
  std::vector<int> lparts, rparts;
  for (size_t i = 0; i < av.size(); ++i)
    lparts.push_back(av[i] + static_cast<int>(i));
  // continuation below the window must contribute zero parts
  if (d.lo() + static_cast<int>(av.size()) - 1 != 0)
    throw MalformedDiagram("left sequence is not a partition");
  for (size_t i = 0; i < bv.size(); ++i)
    rparts.push_back(static_cast<int>(i) + 1 - delta - bv[i]);
  if (static_cast<int>(bv.size()) - delta - d.hi() != 0)
    throw MalformedDiagram("right sequence is not a partition");
  for (int p : lparts)
    if (p < 0) throw MalformedDiagram("negative left part");
  for (int p : rparts)
    if (p < 0) throw MalformedDiagram("negative right part");
  try {
    return Bipartition{Partition(std::move(lparts)), Partition(std::move(rparts))};
  } catch (const std::invalid_argument& e) {
    throw MalformedDiagram(e.what());
  }
}

namespace {

CapSet pair_down_up(const WeightDiagram& d, bool drain_right) {
  CapSet pairs;
  std::vector<int> stack;
  for (int v = d.lo(); v <= d.hi(); ++v) {
    Label l = d.at(v);
    if (l == Label::Down) stack.push_back(v);
    else if (l == Label::Up && !stack.empty()) {
      pairs.push_back({stack.back(), v});
      stack.pop_back();
    }
  }
  if (drain_right) {
    int v = d.hi() + 1;
    while (!stack.empty()) {
      pairs.push_back({stack.back(), v});
      stack.pop_back();
      ++v;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

CapSet caps_of(const WeightDiagram& d) {
  if (d.left_tail() != Label::Up || d.right_tail() != Label::Down)
    throw MalformedDiagram("caps need a bipartition-tailed diagram");
  return pair_down_up(d, /*drain_right=*/false);
}

CapSet cups_of(const WeightDiagram& d) {
  if (d.left_tail() != Label::Up || d.right_tail() != Label::Up)
    throw MalformedDiagram("cups need a highest-weight diagram");
  return pair_down_up(d, /*drain_right=*/true);
}

CapSet up_down_pairs_of(const WeightDiagram& d) {
  if (d.left_tail() != Label::Up || d.right_tail() != Label::Up)
    throw MalformedDiagram("expected a highest-weight diagram");
  int downs = static_cast<int>(d.down_positions().size());
  CapSet pairs;
  std::vector<int> stack;
  for (int v = d.lo() - downs - 1; v <= d.hi(); ++v) {
    Label l = d.at(v);
    if (l == Label::Up) stack.push_back(v);
    else if (l == Label::Down && !stack.empty()) {
      pairs.push_back({stack.back(), v});
      stack.pop_back();
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

BlockKey block_key(const WeightDiagram& d) {
  BlockKey key;
  for (int v = d.lo(); v <= d.hi(); ++v) {
    if (d.at(v) == Label::Cross) key.crosses.insert(v);
    if (d.at(v) == Label::Circle) key.circles.insert(v);
  }
  return key;
}

DiagramInvariants invariants_of(const Bipartition& lambda, int delta, int m,
                                int n) {
  if (m < n) throw std::invalid_argument("m < n is rejected");
  if (delta != m - n) throw std::invalid_argument("delta != m - n");
  WeightDiagram d = diagram_of_bipartition(lambda, delta);
  DiagramInvariants inv;
  inv.d = static_cast<int>(caps_of(d).size());
  inv.rk = static_cast<int>(d.positions(Label::Circle).size());
  inv.k = inv.d + inv.rk;
  inv.atyp = n - inv.rk;
  inv.is_cross = is_cross(lambda, m, n);
  inv.is_zero = !inv.is_cross;
  return inv;
}

int atypicality(const HighestWeight& w, int m, int n) {
  return static_cast<int>(
      diagram_of_weight(w, m, n).down_positions().size());
}

bool is_kostant(const HighestWeight& w, int m, int n) {
  WeightDiagram d = diagram_of_weight(w, m, n);
  std::vector<int> downs = d.down_positions();
  if (downs.size() <= 1) return true;
  for (int v = downs.front() + 1; v < downs.back(); ++v)
    if (d.at(v) == Label::Up) return false;
  return true;
}

HighestWeight berezin_shift(const HighestWeight& w, int r) {
  HighestWeight out = w;
  for (int& x : out.left) x += r;
  for (int& x : out.right) x -= r;
  return out;
}

bool bruhat_leq(const WeightDiagram& a, const WeightDiagram& b) {
  if (block_key(a) != block_key(b) ||
      a.down_positions().size() != b.down_positions().size())
    throw DifferentBlock();
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  int ca = 0, cb = 0;
  for (int v = lo; v <= hi; ++v) {
    ca += a.at(v) == Label::Down;
    cb += b.at(v) == Label::Down;
    if (ca < cb) return false;
  }
  return true;
}

bool oriented_subset(const HighestWeight& rho, const HighestWeight& mu, int m,
                     int n) {
  WeightDiagram dr = diagram_of_weight(rho, m, n);
  WeightDiagram dm = diagram_of_weight(mu, m, n);
  if (block_key(dr) != block_key(dm)) throw DifferentBlock();
  CapSet cups = cups_of(dr);
  int downs_in_cups = 0;
  for (auto [i, j] : cups) {
    Label a = dm.at(i), b = dm.at(j);
    bool ok = (a == Label::Down && b == Label::Up) ||
              (a == Label::Up && b == Label::Down);
    if (!ok) return false;
    ++downs_in_cups;
  }
  // every Down of mu must be bound in a cup, otherwise a Down ray sits left
  // of the Up tail rays
  return downs_in_cups == static_cast<int>(dm.down_positions().size());
}

HighestWeight trivial_weight(int m, int n) {
  return HighestWeight{std::vector<int>(m, 0), std::vector<int>(n, 0)};
}

HighestWeight max_atypical_weight(const std::vector<int>& left) {
  int n = static_cast<int>(left.size());
  HighestWeight w;
  w.left = left;
  std::vector<int> o;
  for (int i = 1; i <= n; ++i) o.push_back(left[i - 1] - i + 1);
  std::sort(o.begin(), o.end());
  for (int j = 1; j <= n; ++j) w.right.push_back(j - n - o[j - 1]);
  if (!w.dominant()) throw NotDominant("not a dominant maximal atypical weight");
  return w;
}

}  // namespace mixt
