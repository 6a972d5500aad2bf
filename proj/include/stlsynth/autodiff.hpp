#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "stlsynth/smooth.hpp"

namespace stlsynth::ad {

// Append-only record of elementary operations (inputs and local partials)
// built during a forward evaluation; a single backward sweep over it yields
// the exact gradient of one scalar output. Tapes are single-use and
// single-threaded; records are topologically ordered by construction.
class Tape {
 public:
  int leaf(double value) { return push(value, {}, {}); }

  int node1(double value, int a, double da) {
    int args[] = {a};
    double parts[] = {da};
    return push(value, args, parts);
  }

  int node2(double value, int a, double da, int b, double db) {
    int args[] = {a, b};
    double parts[] = {da, db};
    return push(value, args, parts);
  }

  int node_n(double value, std::span<const int> args, std::span<const double> partials) {
    return push(value, args, partials);
  }

  double value(int index) const { return recs_[static_cast<std::size_t>(index)].value; }
  std::size_t size() const { return recs_.size(); }

  // d(output)/d(node) for every node on the tape.
  std::vector<double> gradient(int output) const {
    std::vector<double> adj(recs_.size(), 0.0);
    adj[static_cast<std::size_t>(output)] = 1.0;
    for (std::size_t i = recs_.size(); i-- > 0;) {
      double g = adj[i];
      if (g == 0.0) continue;
      const Rec& r = recs_[i];
      for (std::uint32_t j = 0; j < r.arg_count; ++j) {
        adj[arg_index_[r.arg_begin + j]] += g * arg_partial_[r.arg_begin + j];
      }
    }
    return adj;
  }

 private:
  struct Rec {
    double value;
    std::uint32_t arg_begin;
    std::uint32_t arg_count;
  };

  int push(double value, std::span<const int> args, std::span<const double> partials) {
    Rec r{value, static_cast<std::uint32_t>(arg_index_.size()),
          static_cast<std::uint32_t>(args.size())};
    for (std::size_t j = 0; j < args.size(); ++j) {
      arg_index_.push_back(static_cast<std::uint32_t>(args[j]));
      arg_partial_.push_back(partials[j]);
    }
    recs_.push_back(r);
    return static_cast<int>(recs_.size()) - 1;
  }

  std::vector<Rec> recs_;
  std::vector<std::uint32_t> arg_index_;
  std::vector<double> arg_partial_;
};

// Value flowing through a taped computation. idx < 0 marks a constant that
// does not participate in the gradient.
struct Rev {
  Tape* tape = nullptr;
  int idx = -1;
  double val = 0.0;

  Rev() = default;
  Rev(double v) : val(v) {}  // NOLINT: implicit constant lift is intended
  Rev(Tape* t, int i, double v) : tape(t), idx(i), val(v) {}

  bool is_const() const { return idx < 0; }
};

inline Rev make_leaf(Tape& tape, double v) { return Rev(&tape, tape.leaf(v), v); }

namespace detail_ad {
inline Tape* tape_of(const Rev& a, const Rev& b) { return a.tape ? a.tape : b.tape; }
}  // namespace detail_ad

inline Rev operator+(const Rev& a, const Rev& b) {
  double v = a.val + b.val;
  if (a.is_const() && b.is_const()) return Rev(v);
  Tape* t = detail_ad::tape_of(a, b);
  if (a.is_const()) return Rev(t, t->node1(v, b.idx, 1.0), v);
  if (b.is_const()) return Rev(t, t->node1(v, a.idx, 1.0), v);
  return Rev(t, t->node2(v, a.idx, 1.0, b.idx, 1.0), v);
}

inline Rev operator-(const Rev& a) {
  if (a.is_const()) return Rev(-a.val);
  return Rev(a.tape, a.tape->node1(-a.val, a.idx, -1.0), -a.val);
}

inline Rev operator-(const Rev& a, const Rev& b) {
  double v = a.val - b.val;
  if (a.is_const() && b.is_const()) return Rev(v);
  Tape* t = detail_ad::tape_of(a, b);
  if (a.is_const()) return Rev(t, t->node1(v, b.idx, -1.0), v);
  if (b.is_const()) return Rev(t, t->node1(v, a.idx, 1.0), v);
  return Rev(t, t->node2(v, a.idx, 1.0, b.idx, -1.0), v);
}

inline Rev operator*(const Rev& a, const Rev& b) {
  double v = a.val * b.val;
  if (a.is_const() && b.is_const()) return Rev(v);
  Tape* t = detail_ad::tape_of(a, b);
  if (a.is_const()) return Rev(t, t->node1(v, b.idx, a.val), v);
  if (b.is_const()) return Rev(t, t->node1(v, a.idx, b.val), v);
  return Rev(t, t->node2(v, a.idx, b.val, b.idx, a.val), v);
}

inline Rev smooth_max2(const Rev& a, const Rev& b, double beta) {
  double v = stlsynth::smooth_max2(a.val, b.val, beta);
  if (a.is_const() && b.is_const()) return Rev(v);
  // softmax weights, computed from the shifted exponentials
  double hi = a.val > b.val ? a.val : b.val;
  double ea = std::exp(beta * (a.val - hi));
  double eb = std::exp(beta * (b.val - hi));
  double wa = ea / (ea + eb);
  double wb = eb / (ea + eb);
  Tape* t = detail_ad::tape_of(a, b);
  if (a.is_const()) return Rev(t, t->node1(v, b.idx, wb), v);
  if (b.is_const()) return Rev(t, t->node1(v, a.idx, wa), v);
  return Rev(t, t->node2(v, a.idx, wa, b.idx, wb), v);
}

inline Rev smooth_min2(const Rev& a, const Rev& b, double beta) { return -smooth_max2(-a, -b, beta); }

inline Rev rect_pos_smooth(const Rev& a, double beta) {
  double v = stlsynth::rect_pos_smooth(a.val, beta);
  if (a.is_const()) return Rev(v);
  double w = 1.0 / (1.0 + std::exp(-beta * a.val));  // logistic
  return Rev(a.tape, a.tape->node1(v, a.idx, w), v);
}

inline Rev rect_neg_smooth(const Rev& a, double beta) {
  double v = stlsynth::rect_neg_smooth(a.val, beta);
  if (a.is_const()) return Rev(v);
  double w = 1.0 / (1.0 + std::exp(beta * a.val));
  return Rev(a.tape, a.tape->node1(v, a.idx, w), v);
}

// n-ary smooth max as a single tape record with softmax partials.
inline Rev smooth_max(std::span<const Rev> values, double beta) {
  if (values.empty()) throw std::invalid_argument("smooth_max: empty argument list");
  Rev acc = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) acc = smooth_max2(acc, values[i], beta);
  return acc;
}

inline Rev smooth_min(std::span<const Rev> values, double beta) {
  if (values.empty()) throw std::invalid_argument("smooth_min: empty argument list");
  Rev acc = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) acc = smooth_min2(acc, values[i], beta);
  return acc;
}

}  // namespace stlsynth::ad
