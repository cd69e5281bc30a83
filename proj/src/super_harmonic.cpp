#include "packkit/super_harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "packkit/core.hpp"

namespace packkit {

int interval_type(const std::vector<double>& t, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("size must be positive");
  if (x > t.front()) throw std::invalid_argument("size " + std::to_string(x) + " exceeds t_1");
  // First index with t[idx] < x; t is strictly decreasing.
  auto it = std::partition_point(t.begin(), t.end(), [x](double v) { return v >= x; });
  // 1-based type; falling past the end means x <= t_{k+1}, i.e. type k+1.
  return static_cast<int>(it - t.begin());
}

void SuperHarmonicParams::finalize() {
  if (k < 1) throw std::invalid_argument("params: k must be >= 1");
  if (static_cast<int>(t.size()) != k + 1) throw std::invalid_argument("params: t needs k+1 entries");
  if (beta.empty()) {
    beta.resize(k);
    for (int i = 0; i < k; ++i) beta[i] = static_cast<int>(std::floor(1.0 / t[i] + kTol));
  }
  if (alpha.empty()) alpha.assign(k, 0.0);
  if (phi.empty()) phi.assign(k, 0);
  const int bigK = K();
  gamma.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    if (bigK > 0 && t[i] <= Delta[bigK - 1]) {
      gamma[i] = std::max(1, static_cast<int>(std::floor(Delta[0] / t[i] + kTol)));
    }
  }
  std::vector<int> derived(k, 0);
  for (int i = 0; i < k; ++i) {
    if (gamma[i] == 0) continue;
    for (int j = 1; j <= bigK; ++j) {
      if (t[i] <= Delta[j - 1]) {
        derived[i] = j;
        break;
      }
    }
  }
  if (varphi.empty()) {
    varphi = derived;
  } else if (varphi != derived) {
    throw std::invalid_argument("params: varphi does not match min{j : t_i <= Delta_j}");
  }
  validate();
}

void SuperHarmonicParams::validate() const {
  const int bigK = K();
  if (k < 1) throw std::invalid_argument("params: k must be >= 1");
  if (static_cast<int>(t.size()) != k + 1 || static_cast<int>(alpha.size()) != k ||
      static_cast<int>(beta.size()) != k || static_cast<int>(phi.size()) != k ||
      static_cast<int>(varphi.size()) != k || static_cast<int>(gamma.size()) != k) {
    throw std::invalid_argument("params: inconsistent array sizes");
  }
  if (t[0] != 1.0) throw std::invalid_argument("params: t_1 must be 1");
  for (int i = 0; i < k; ++i) {
    if (!(t[i] > t[i + 1])) throw std::invalid_argument("params: t must be strictly decreasing");
  }
  if (!(t[k] > 0.0)) throw std::invalid_argument("params: eps must be positive");
  double prev = 0.0;
  for (int j = 0; j < bigK; ++j) {
    if (!(Delta[j] > prev) || !(Delta[j] < 0.5)) {
      throw std::invalid_argument("params: Delta must satisfy 0 < Delta_1 < ... < Delta_K < 1/2");
    }
    prev = Delta[j];
  }
  for (int i = 0; i < k; ++i) {
    if (alpha[i] < 0.0 || alpha[i] > 1.0) throw std::invalid_argument("params: alpha outside [0,1]");
    if (beta[i] < 1) throw std::invalid_argument("params: beta must be >= 1");
    if (delta_of(i + 1) < -kTol) {
      throw std::invalid_argument("params: beta_" + std::to_string(i + 1) +
                                  " overfills the bin (1 - t_i*beta_i < 0)");
    }
    if (phi[i] < 0 || phi[i] > bigK) throw std::invalid_argument("params: phi out of range");
    if (phi[i] != 0 && Delta_of(phi[i]) > delta_of(i + 1) + kTol) {
      throw std::invalid_argument("params: Delta_phi(i) must fit the blue leftover space");
    }
    if (alpha[i] > 0.0 && gamma[i] == 0) {
      throw std::invalid_argument("params: alpha_" + std::to_string(i + 1) +
                                  " > 0 but type cannot be red (gamma = 0)");
    }
    if (gamma[i] > 0 && (varphi[i] < 1 || varphi[i] > bigK || t[i] > Delta_of(varphi[i]))) {
      throw std::invalid_argument("params: varphi inconsistent with gamma");
    }
  }
}

SuperHarmonicParams SuperHarmonicParams::harmonic(int k) {
  if (k < 1) throw std::invalid_argument("harmonic: k must be >= 1");
  SuperHarmonicParams p;
  p.k = k;
  p.t.resize(k + 1);
  for (int i = 0; i <= k; ++i) p.t[i] = 1.0 / (i + 1);
  p.alpha.assign(k, 0.0);
  p.beta.resize(k);
  for (int i = 0; i < k; ++i) p.beta[i] = i + 1;
  p.phi.assign(k, 0);
  p.finalize();
  return p;
}

SuperHarmonicParams SuperHarmonicParams::toy3() {
  SuperHarmonicParams p;
  p.k = 3;
  p.t = {1.0, 0.6, 1.0 / 3.0, 0.25};
  p.alpha = {0.0, 0.0, 0.5};
  p.beta = {1, 1, 3};
  p.Delta = {0.4};
  p.phi = {0, 1, 0};
  p.finalize();
  return p;
}

void OnlinePacker::check_size(double size) {
  if (!(size > 0.0) || size > 1.0) {
    throw std::invalid_argument("item size " + std::to_string(size) + " outside (0,1]");
  }
}

int OnlinePacker::open_bin() {
  bins_.emplace_back();
  loads_.push_back(0.0);
  return static_cast<int>(bins_.size()) - 1;
}

PackSlot OnlinePacker::place(int bin, double size, int index, bool new_bin) {
  PackSlot slot{bin, loads_[bin], new_bin};
  bins_[bin].push_back({index, size});
  loads_[bin] += size;
  next_index_ = std::max(next_index_, index + 1);
  return slot;
}

PackSlot NextFitPacker::insert(double size, int index) {
  check_size(size);
  if (open_ < 0 || loads_[open_] + size > 1.0 + kTol) {
    open_ = open_bin();
    return place(open_, size, index, true);
  }
  return place(open_, size, index, false);
}

PackSlot FirstFitPacker::insert(double size, int index) {
  check_size(size);
  for (int b = 0; b < static_cast<int>(bins_.size()); ++b) {
    if (loads_[b] + size <= 1.0 + kTol) return place(b, size, index, false);
  }
  return place(open_bin(), size, index, true);
}

HarmonicPacker::HarmonicPacker(int k) : k_(k), open_(k + 1, -1) {
  if (k < 1) throw std::invalid_argument("harmonic: k must be >= 1");
  t_.resize(k + 1);
  for (int i = 0; i <= k; ++i) t_[i] = 1.0 / (i + 1);
}

PackSlot HarmonicPacker::insert(double size, int index) {
  check_size(size);
  int type = interval_type(t_, size);
  if (type <= k_) {
    int& open = open_[type - 1];
    if (open < 0) {
      open = open_bin();
      PackSlot slot = place(open, size, index, true);
      if (static_cast<int>(bins_[open].size()) >= type) open = -1;  // beta_i = i
      return slot;
    }
    PackSlot slot = place(open, size, index, false);
    if (static_cast<int>(bins_[open].size()) >= type) open = -1;
    return slot;
  }
  int& nf = open_[k_];
  if (nf < 0 || loads_[nf] + size > 1.0 + kTol) {
    nf = open_bin();
    return place(nf, size, index, true);
  }
  return place(nf, size, index, false);
}

SuperHarmonicPacker::SuperHarmonicPacker(SuperHarmonicParams params) : params_(std::move(params)) {
  params_.validate();
  s_.assign(params_.k + 1, 0);
  e_.assign(params_.k + 1, 0);
  open_blue_.assign(params_.k + 1, -1);
  open_red_.assign(params_.k + 1, -1);
  pending_blue_.assign(params_.k + 1, {});
  pending_red_.assign(params_.k + 1, {});
}

int SuperHarmonicPacker::new_state_bin(Group g, int blue_type, int red_type) {
  int b = open_bin();
  BinState st;
  st.group = g;
  st.blue_type = blue_type;
  st.red_type = red_type;
  states_.push_back(st);
  return b;
}

PackSlot SuperHarmonicPacker::insert(double size, int index) {
  check_size(size);
  if (size > params_.t[0]) throw std::invalid_argument("item larger than t_1");
  int type = params_.type_of(size);
  if (type == params_.k + 1) {
    last_red_ = false;
    if (nf_open_ < 0 || loads_[nf_open_] + size > 1.0 + kTol) {
      nf_open_ = new_state_bin(Group::NarrowNF, 0, 0);
      return place(nf_open_, size, index, true);
    }
    return place(nf_open_, size, index, false);
  }

  s_[type] += 1;
  double quota = std::floor(params_.alpha[type - 1] * static_cast<double>(s_[type]));
  if (static_cast<double>(e_[type]) < quota) {
    e_[type] += 1;
    last_red_ = true;
    return place_red(type, size, index);
  }
  last_red_ = false;
  return place_blue(type, size, index);
}

PackSlot SuperHarmonicPacker::place_red(int type, double size, int index) {
  const int gamma = params_.gamma[type - 1];
  const double t_i = params_.t_of(type);
  int b = open_red_[type];
  bool new_bin = false;
  if (b < 0) {
    // Convert the oldest (j,?) bin whose reserved gap takes gamma_i red
    // type-i items, scanning blue types in ascending order.
    for (int j = 1; j <= params_.k && b < 0; ++j) {
      if (pending_blue_[j].empty()) continue;
      if (params_.Delta_of(params_.phi[j - 1]) >= gamma * t_i - kTol) {
        b = pending_blue_[j].front();
        pending_blue_[j].erase(pending_blue_[j].begin());
        states_[b].group = Group::Mixed;
        states_[b].red_type = type;
      }
    }
    if (b < 0) {
      b = new_state_bin(Group::RedPending, 0, type);
      pending_red_[type].push_back(b);
      new_bin = true;
    }
  }
  double offset = 1.0 - (states_[b].red_count + 1) * t_i;
  states_[b].red_count += 1;
  open_red_[type] = states_[b].red_count < gamma ? b : -1;
  PackSlot slot = place(b, size, index, new_bin);
  slot.offset = offset;
  return slot;
}

PackSlot SuperHarmonicPacker::place_blue(int type, double size, int index) {
  const int beta = params_.beta[type - 1];
  const int phi = params_.phi[type - 1];
  const double t_i = params_.t_of(type);
  int b = open_blue_[type];
  bool new_bin = false;
  if (b < 0) {
    if (phi == 0) {
      b = new_state_bin(Group::BlueOnly, type, 0);
      new_bin = true;
    } else {
      // Convert the oldest (?,j) bin whose red content fits this type's
      // reserved gap, scanning red types in ascending order.
      for (int j = 1; j <= params_.k && b < 0; ++j) {
        if (pending_red_[j].empty()) continue;
        if (params_.Delta_of(phi) >= params_.gamma[j - 1] * params_.t_of(j) - kTol) {
          b = pending_red_[j].front();
          pending_red_[j].erase(pending_red_[j].begin());
          states_[b].group = Group::Mixed;
          states_[b].blue_type = type;
        }
      }
      if (b < 0) {
        b = new_state_bin(Group::BluePending, type, 0);
        pending_blue_[type].push_back(b);
        new_bin = true;
      }
    }
  }
  double offset = states_[b].blue_count * t_i;
  states_[b].blue_count += 1;
  open_blue_[type] = states_[b].blue_count < beta ? b : -1;
  PackSlot slot = place(b, size, index, new_bin);
  slot.offset = offset;
  return slot;
}

}  // namespace packkit
