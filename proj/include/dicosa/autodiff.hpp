#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dicosa/numkit.hpp"

namespace dicosa::numkit {

// Describes how per-pair video factors are mixed from per-frame factors:
// output row p = q * num_candidates + c is the weighted sum of candidate c's
// frame rows, with weights specific to the (query, candidate) pair.
struct FrameMixPlan {
  int num_queries = 0;
  int num_candidates = 0;
  std::vector<int> frame_offset;   // per candidate, first frame row
  std::vector<int> frame_count;    // per candidate, number of frames
  std::vector<double> weights;     // per pair, frame_count(cand(p)) entries
  std::vector<std::size_t> weight_offset;  // per pair, start into weights

  int total_frames() const {
    return frame_offset.empty() ? 0 : frame_offset.back() + frame_count.back();
  }
};

// Compact reverse-mode tape over matrix-valued nodes. Nodes are created in
// topological order; backward() walks them in reverse. The op set is exactly
// what the training losses need; every backward rule is covered by finite
// difference tests.
class Tape {
public:
  struct Var {
    int id = -1;
    bool valid() const { return id >= 0; }
  };

  Var input(Matrix value, bool requires_grad = false);
  Var constant(Matrix value) { return input(std::move(value), false); }

  Var matmul(Var a, Var b, bool trans_a = false, bool trans_b = false);
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var hadamard(Var a, Var b);
  Var affine(Var a, double scale, double shift);  // elementwise scale*x + shift
  Var square(Var a);
  Var sum(Var a);  // 1x1
  Var lincomb(std::span<const std::pair<double, Var>> terms);  // 1x1 inputs
  Var reshape(Var a, int rows, int cols);
  Var vstack(std::span<const Var> parts);
  Var slice_cols(Var a, int first, int last);  // [first, last)
  Var gather_rows(Var a, std::vector<int> rows);
  Var standardize_cols(Var a, double epsilon);
  Var normalize_rows(Var a);  // rows with norm < 1e-12 become zero

  // out(q, c) = dot(a.row(q), b.row(q * C + c)) for grouped pair layouts.
  Var dot_rows_grouped(Var a, Var b, int num_candidates);

  // Shared two-layer confidence head evaluated on every (query, candidate)
  // pair: sigmoid(w2 . relu(ht[q] + hv[q*C+c] + b1) + b2), clamped to the
  // open unit interval.
  Var confidence_grid(Var ht, Var hv, Var b1, Var w2, Var b2, int num_candidates);

  Var frame_mix(Var frame_factors, const FrameMixPlan& plan);

  // Symmetric InfoNCE over a square similarity matrix, diagonal positives.
  Var infonce(Var s, double tau_prime);

  const Matrix& value(Var v) const { return nodes_[v.id].value; }
  const Matrix& grad(Var v) const;

  // Runs reverse accumulation from a 1x1 root.
  void backward(Var root);

  std::size_t node_count() const { return nodes_.size(); }

private:
  struct Node {
    Matrix value;
    Matrix grad;
    bool needs_grad = false;
    bool grad_ready = false;
    std::function<void(Tape&)> back;  // accumulates into parents
  };

  Var push(Matrix value, bool needs_grad, std::function<void(Tape&)> back);
  Matrix& grad_buffer(int id);
  bool wants(Var v) const { return nodes_[v.id].needs_grad; }

  std::vector<Node> nodes_;
};

// Clamp bound shared by all sigmoid confidence paths so that confidences stay
// in the open interval (0, 1) even under saturation.
inline constexpr double kConfidenceClamp = 1e-12;

double sigmoid_clamped(double x);

}  // namespace dicosa::numkit
