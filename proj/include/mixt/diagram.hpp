#pragma once

#include <compare>
#include <set>
#include <vector>

#include "mixt/partition.hpp"

namespace mixt {

enum class Label : unsigned char { Up, Down, Cross, Circle };  // ^ v x o

// Dominant integral highest weight (l₁,…,l_m | l_{m+1},…,l_{m+n}).
struct HighestWeight {
  std::vector<int> left, right;

  int m() const { return static_cast<int>(left.size()); }
  int n() const { return static_cast<int>(right.size()); }
  bool dominant() const;

  auto operator<=>(const HighestWeight&) const = default;
};

// Labeling of the integer line with cofinite Up/Down tails. The window is
// canonical: it covers every vertex whose label differs from the tail on its
// side, plus one margin vertex per side.
class WeightDiagram {
 public:
  WeightDiagram() = default;
  WeightDiagram(int lo, std::vector<Label> labels, Label left_tail,
                Label right_tail);

  Label at(int v) const {
    if (v < lo_) return left_tail_;
    if (v > hi_) return right_tail_;
    return labels_[v - lo_];
  }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  Label left_tail() const { return left_tail_; }
  Label right_tail() const { return right_tail_; }

  // Copy with one vertex relabeled (window grows if needed), renormalized.
  WeightDiagram with(int v, Label l) const;
  // Copy with a Down/Up pair's labels exchanged.
  WeightDiagram with_pair_swapped(int i, int j) const;

  std::vector<int> positions(Label l) const;  // within the window
  std::vector<int> down_positions() const { return positions(Label::Down); }

  bool operator==(const WeightDiagram& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && labels_ == o.labels_ &&
           left_tail_ == o.left_tail_ && right_tail_ == o.right_tail_;
  }
  auto operator<=>(const WeightDiagram&) const = default;

 private:
  void normalize();

  int lo_ = 0, hi_ = -1;  // empty window when lo_ > hi_
  std::vector<Label> labels_;
  Label left_tail_ = Label::Up, right_tail_ = Label::Up;
};

// Ordered, pairwise non-crossing (i,j) pairs with i < j.
using CapSet = std::vector<std::pair<int, int>>;

struct BlockKey {
  std::set<int> crosses, circles;
  auto operator<=>(const BlockKey&) const = default;
};

struct DiagramInvariants {
  int d = 0;       // caps
  int rk = 0;      // circles (delta >= 0)
  int k = 0;       // d + rk
  int atyp = 0;    // n - rk
  bool is_cross = false;
  bool is_zero = false;
};

WeightDiagram diagram_of_weight(const HighestWeight& w, int m, int n);
HighestWeight weight_of_diagram(const WeightDiagram& d, int m, int n);

WeightDiagram diagram_of_bipartition(const Bipartition& lambda, int delta);
Bipartition bipartition_of_diagram(const WeightDiagram& d, int delta);

// Greedy left-to-right pairing of Down..Up with only crosses, circles or
// already paired vertices in between. Caps for bipartition diagrams, cups for
// highest-weight diagrams; the pairing rule is the same.
CapSet caps_of(const WeightDiagram& d);
CapSet cups_of(const WeightDiagram& d);
// Mirror pairing Up..Down (Up on the left); used to invert a_weight.
CapSet up_down_pairs_of(const WeightDiagram& d);

BlockKey block_key(const WeightDiagram& d);

DiagramInvariants invariants_of(const Bipartition& lambda, int delta, int m,
                                int n);

bool is_kostant(const HighestWeight& w, int m, int n);
int atypicality(const HighestWeight& w, int m, int n);

HighestWeight berezin_shift(const HighestWeight& w, int r);

bool bruhat_leq(const WeightDiagram& a, const WeightDiagram& b);

// Labels the cup diagram of rho with mu's symbols; true iff every cup gets
// exactly one Down and one Up and no ray carries a Down.
bool oriented_subset(const HighestWeight& rho, const HighestWeight& mu, int m,
                     int n);

// All-zero weight of Gl(m|n).
HighestWeight trivial_weight(int m, int n);
// Maximal atypical weight of Gl(n|n) from its left half.
HighestWeight max_atypical_weight(const std::vector<int>& left);

}  // namespace mixt
