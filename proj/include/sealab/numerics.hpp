// Dense 64-bit linear algebra core: Matrix, named parameter bundles, and
// helpers shared by the policy, trainer, and diagnostics modules.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sealab::numerics {

// Row-major matrix of doubles. Vectors are 1xN or Nx1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(check_dims(rows, cols), 0.0) {}
  Matrix(int rows, int cols, std::vector<double> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != check_dims(rows, cols)) throw std::invalid_argument("Matrix: data length != rows*cols");
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Matrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_; }
  bool all_finite() const;

 private:
  static std::size_t check_dims(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Ordered collection of named matrix segments. Holds model parameters theta,
// gradients, and update directions. Segment order is insertion order and is
// part of the flatten/unflatten layout.
class ParamVector {
 public:
  struct Segment {
    std::string name;
    Matrix value;
  };

  void add(const std::string& name, Matrix value);
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  Matrix& at(const std::string& name);
  const Matrix& at(const std::string& name) const;

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t num_segments() const { return segments_.size(); }
  std::size_t dim() const;
  bool empty() const { return segments_.empty(); }

  bool same_layout(const ParamVector& other) const;
  bool all_finite() const;

  // Flatten concatenates segment data in insertion order; unflatten_like

  // rebuilds a ParamVector with this layout from a flat buffer. Round trip is
  // bit-exact.
  std::vector<double> flatten() const;
  ParamVector unflatten_like(std::span<const double> flat) const;

  ParamVector zeros_like() const;
  // Segment subsets, preserving order.
  ParamVector without(const std::string& name) const;

  // this += c * other (matching layout required)
  void axpy(double c, const ParamVector& other);
  void scale(double c);
  double norm() const;

 private:
  std::vector<Segment> segments_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Sum over all segments of elementwise products. Accumulated per segment,
// then across segments, so block splits reproduce the same partial sums.
double inner(const ParamVector& a, const ParamVector& b);
double inner(const Matrix& a, const Matrix& b);

// Numerically stable softmax (max-subtraction). Rejects non-finite input.
std::vector<double> softmax(std::span<const double> logits);

// Entropy in nats of a probability vector.
double entropy(std::span<const double> probs);

// |a-b| / max(|a|,|b|,floor). The floor keeps near-zero coordinates from
// turning rounding noise into large relative errors.
inline double rel_err(double a, double b, double floor = 1e-3) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

struct FdReport {
  double max_rel_err = 0.0;
  std::string worst_segment;
  int worst_index = -1;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  std::vector<std::string> non_finite;  // coordinates where f failed to evaluate
};

// Central finite differences of f per coordinate of `point`, compared against
// the supplied analytic gradient (normally a Tape::backward result).
FdReport finite_difference_check(const std::function<double(const ParamVector&)>& f, const ParamVector& point,
                                 double step, const ParamVector& analytic_grad, double floor = 1e-3);

}  // namespace sealab::numerics
