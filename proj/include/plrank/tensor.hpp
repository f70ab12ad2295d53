#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "plrank/rng.hpp"

namespace plrank {

// Dense row-major matrix of doubles. Everything in the model is 2-D; vectors
// are 1xC or Kx1 tensors.
struct Tensor {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}
  Tensor(int r, int c, std::vector<double> data) : rows(r), cols(c), v(std::move(data)) {
    if (v.size() != static_cast<std::size_t>(r) * c)
      throw std::invalid_argument("Tensor: data size does not match shape");
  }

  double& operator()(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }

  double* row(int r) { return v.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return v.data() + static_cast<std::size_t>(r) * cols; }

  std::size_t size() const { return v.size(); }
  bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }

  void fill(double x) { std::fill(v.begin(), v.end(), x); }

  static Tensor zeros(int r, int c) { return Tensor(r, c); }

  static Tensor uniform(int r, int c, double lo, double hi, Rng& rng) {
    Tensor t(r, c);
    for (auto& x : t.v) x = rng.uniform(lo, hi);
    return t;
  }

  static Tensor gaussian(int r, int c, double sigma, Rng& rng) {
    Tensor t(r, c);
    for (auto& x : t.v) x = sigma * rng.normal();
    return t;
  }
};

// out = a * b
Tensor matmul(const Tensor& a, const Tensor& b);
// out = a * b^T
Tensor matmul_nt(const Tensor& a, const Tensor& b);
// out = a^T * b
Tensor matmul_tn(const Tensor& a, const Tensor& b);

void add_inplace(Tensor& a, const Tensor& b);
void axpy_inplace(Tensor& a, double c, const Tensor& b);  // a += c*b

bool all_finite(const Tensor& t);

double dot(const double* a, const double* b, int n);
double l2_norm(const double* a, int n);

}  // namespace plrank
