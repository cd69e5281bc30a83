#pragma once

#include <string>
#include <utility>
#include <vector>

namespace packkit {

// Returns the type of a size under the boundary vector t, where
// t = (t_1, ..., t_{k+1}) is strictly decreasing with t_1 = 1.
// Type i (1-based, i <= k) means x in (t_{i+1}, t_i]; sizes <= t_{k+1}
// get type k+1. Throws for x <= 0 or x > t_1.
int interval_type(const std::vector<double>& t, double x);

// Parameter set of the Super Harmonic family. Wide items are split into k
// types by the boundaries t; a fraction alpha_i of type-i items is colored
// red and parked in reserved gaps of sizes Delta_1 < ... < Delta_K, the rest
// are blue and fill bins beta_i at a time.
//
// Storage is 0-based: t[i-1] = t_i (size k+1, t[k] = epsilon),
// alpha[i-1] = alpha_i, and so on. gamma and varphi are derived from Delta.
struct SuperHarmonicParams {
  int k = 0;
  std::vector<double> t;       // k+1 boundaries, t[0] = 1 > ... > t[k] = eps > 0
  std::vector<double> alpha;   // red fractions in [0,1]
  std::vector<int> beta;       // blue items per bin, >= 1
  std::vector<double> Delta;   // reserved gap sizes, increasing, < 1/2
  std::vector<int> phi;        // gap class used by blue type-i bins, 0 = none
  std::vector<int> varphi;     // smallest gap class holding a red type-i item, 0 = undefined
  std::vector<int> gamma;      // red items per gap, 0 = type never red

  int K() const { return static_cast<int>(Delta.size()); }
  double eps() const { return t.back(); }
  double t_of(int i) const { return t[i - 1]; }          // i in 1..k+1
  double delta_of(int i) const { return 1.0 - t_of(i) * beta[i - 1]; }
  double Delta_of(int j) const { return j == 0 ? 0.0 : Delta[j - 1]; }  // j in 0..K
  int type_of(double x) const { return interval_type(t, x); }

  // Fills beta (floor(1/t_i)) / gamma / varphi where absent, then validate().
  void finalize();
  // Throws std::invalid_argument when any structural invariant fails
  // (ordering of t and Delta, alpha range, delta_i >= 0, Delta_{phi(i)} <=
  // delta_i, gamma/varphi consistency, alpha_i > 0 requiring gamma_i > 0).
  void validate() const;

  // Classic Harmonic with t_i = 1/i, all items blue.
  static SuperHarmonicParams harmonic(int k);
  // Small k=3 set with one reserved gap (Delta_1 = 0.4) and alpha_3 = 1/2.
  static SuperHarmonicParams toy3();
};

struct BinItem {
  int index = 0;  // arrival index of the item
  double size = 0.0;
};

struct PackSlot {
  int bin = 0;         // index of the receiving bin, in creation order
  double offset = 0.0; // left edge of the item inside the bin
  bool new_bin = false;
};

// Common base for the online 1-D packers. Bins are kept in creation order;
// loads_ mirrors the per-bin size totals.
class OnlinePacker {
 public:
  virtual ~OnlinePacker() = default;
  PackSlot insert(double size) { return insert(size, next_index_); }
  virtual PackSlot insert(double size, int index) = 0;
  const std::vector<std::vector<BinItem>>& bins() const { return bins_; }
  const std::vector<double>& loads() const { return loads_; }
  int bin_count() const { return static_cast<int>(bins_.size()); }

 protected:
  static void check_size(double size);
  int open_bin();
  PackSlot place(int bin, double size, int index, bool new_bin);
  std::vector<std::vector<BinItem>> bins_;
  std::vector<double> loads_;
  int next_index_ = 0;
};

class NextFitPacker : public OnlinePacker {
 public:
  using OnlinePacker::insert;
  PackSlot insert(double size, int index) override;

 private:
  int open_ = -1;
};

class FirstFitPacker : public OnlinePacker {
 public:
  using OnlinePacker::insert;
  PackSlot insert(double size, int index) override;
};

// Classic Harmonic_k: type-i items (size in (1/(i+1), 1/i]) fill a dedicated
// open bin i at a time; sizes <= 1/(k+1) go to a private Next Fit bin.
class HarmonicPacker : public OnlinePacker {
 public:
  explicit HarmonicPacker(int k);
  using OnlinePacker::insert;
  PackSlot insert(double size, int index) override;
  int k() const { return k_; }

 private:
  int k_ = 0;
  std::vector<double> t_;
  std::vector<int> open_;  // open bin per type, -1 when closed; [k] = NF bin
};

// The Super Harmonic state machine. Bins are named after what they hold:
//   BlueOnly    (i)    blue type-i only, phi(i) = 0
//   BluePending (i,?)  blue type-i, reserved gap still empty
//   RedPending  (?,j)  red type-j only
//   Mixed       (i,j)  blue type-i plus red type-j in the gap
//   NarrowNF           Next Fit bin for type-(k+1) items
// Blue items sit from the left edge at multiples of t_i; red items fill the
// reserved gap right-to-left starting at 1 - t_j.
class SuperHarmonicPacker : public OnlinePacker {
 public:
  enum class Group { BlueOnly, BluePending, RedPending, Mixed, NarrowNF };
  struct BinState {
    Group group = Group::NarrowNF;
    int blue_type = 0;  // 0 = none
    int red_type = 0;
    int blue_count = 0;
    int red_count = 0;
  };

  explicit SuperHarmonicPacker(SuperHarmonicParams params);
  using OnlinePacker::insert;
  PackSlot insert(double size, int index) override;

  const SuperHarmonicParams& params() const { return params_; }
  const std::vector<BinState>& states() const { return states_; }
  // Counters: s[i] = type-i items seen, e[i] = red among them (1-based, index 0 unused).
  const std::vector<long long>& s() const { return s_; }
  const std::vector<long long>& e() const { return e_; }
  bool last_was_red() const { return last_red_; }

 private:
  PackSlot place_blue(int type, double size, int index);
  PackSlot place_red(int type, double size, int index);
  int new_state_bin(Group g, int blue_type, int red_type);

  SuperHarmonicParams params_;
  std::vector<BinState> states_;
  std::vector<long long> s_, e_;
  std::vector<int> open_blue_;              // per type: the one bin with blue room, or -1
  std::vector<int> open_red_;               // per type: the one bin with red room, or -1
  std::vector<std::vector<int>> pending_blue_;  // (i,?) bins per type, creation order
  std::vector<std::vector<int>> pending_red_;   // (?,j) bins per type, creation order
  int nf_open_ = -1;
  bool last_red_ = false;
};

}  // namespace packkit
