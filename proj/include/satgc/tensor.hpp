#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "satgc/matrix.hpp"

namespace satgc::ad {

// Additive-mask sentinel standing in for -inf; keeps intermediate arithmetic
// finite. Softmax zeroes masked positions exactly afterwards.
inline constexpr double kMaskedOut = -1e30;

struct Node;

// Handle to one node of a define-by-run computation graph. Graphs are built
// fresh per training sample and freed when the last handle drops.
class Tensor {
  public:
    Tensor() = default;

    static Tensor constant(Matrix value);
    static Tensor parameter(Matrix value, std::string name);

    bool defined() const { return node_ != nullptr; }
    int rows() const;
    int cols() const;

    const Matrix& value() const;
    Matrix& mutable_value();

    const Matrix& grad() const;
    void zero_grad();

    bool requires_grad() const;
    const std::string& name() const;

    double scalar() const;  // value of a 1x1 tensor

    std::shared_ptr<Node> node() const { return node_; }

  private:
    explicit Tensor(std::shared_ptr<Node> n) : node_(std::move(n)) {}
    std::shared_ptr<Node> node_;

    friend Tensor make_op(const char* tag, Matrix value,
                          std::vector<Tensor> inputs,
                          std::function<void(Node&)> backprop);
};

struct Node {
    Matrix value;
    Matrix grad;  // same shape as value, accumulated during backward
    bool requires_grad = false;
    const char* op = "leaf";
    std::string name;  // parameters only
    std::vector<std::shared_ptr<Node>> parents;
    std::function<void(Node&)> backprop;  // adds this node's grad into parents
};

// --- operations -----------------------------------------------------------

// Standard matrix product; backward gives dA = g B^T and dB = A^T g.
Tensor matmul(const Tensor& a, const Tensor& b);

Tensor transpose(const Tensor& x);

// Elementwise multiplication by a compile-time-known scalar (1/sqrt(d_k)).
Tensor scale(const Tensor& x, double factor);

// Row-wise softmax of x + mask with max-subtraction. The mask holds 0 for
// visible entries and kMaskedOut for hidden ones; masked outputs are exactly
// zero. A row with every entry masked throws ConfigError.
Tensor masked_row_softmax(const Tensor& x);
Tensor masked_row_softmax(const Tensor& x, const Matrix& mask);

// Column sums as a 1 x cols tensor.
Tensor column_sums(const Tensor& x);

// Rows of x at the given indices, in the given order.
Tensor gather_rows(const Tensor& x, std::vector<int> rows);

// Straight-through row selection: forward equals gather_rows(x, rows), but
// backward also routes d(loss)/d(scores[j]) = <g_i, x_row> / scores[j] into
// the score vector, as if each selected row had been scaled by
// scores[j]/stop_gradient(scores[j]).
Tensor gather_rows_straight_through(const Tensor& x, const Tensor& scores,
                                    std::vector<int> rows);

// Mean squared error over all entries, as a 1x1 tensor.
Tensor mse_loss(const Tensor& prediction, const Tensor& target);

// Reverse-mode sweep from a scalar loss. Each reachable node is visited
// exactly once; parameter gradients accumulate until explicitly zeroed.
void backward(const Tensor& loss);

// --- optimizer -------------------------------------------------------------

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState {
    Matrix first_moment;
    Matrix second_moment;
    std::int64_t step = 0;
};

// Bias-corrected Adam update in place; zeroes the parameter gradient after
// applying it. Throws NumericError when the gradient is not finite.
void adam_step(Tensor& param, AdamState& state, const AdamConfig& cfg);

bool all_finite(const Matrix& m);

}  // namespace satgc::ad
