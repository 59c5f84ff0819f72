#include "bellopt/kernels.hpp"

#include <cmath>

namespace bellopt::kernels {
namespace {

void exp_batch_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void single_vacuum_scalar(const double* a_re, const double* a_im, double* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double na = a_re[i] * a_re[i] + a_im[i] * a_im[i];
    out[i] = 0.5 * std::exp(-na) * (1.0 + na);
  }
}

void joint_vacuum_scalar(const double* p, const double* a_re,
                         const double* a_im, const double* b_re,
                         const double* b_im, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double na = a_re[i] * a_re[i] + a_im[i] * a_im[i];
    const double nb = b_re[i] * b_re[i] + b_im[i] * b_im[i];
    const double dre = a_re[i] - b_re[i];
    const double dim = a_im[i] - b_im[i];
    const double d2 = dre * dre + dim * dim;
    const double damping = std::exp(-(na + nb));
    out[i] = 0.5 * p[i] * damping * d2 +
             0.25 * (1.0 - p[i]) * damping * (1.0 + na) * (1.0 + nb);
  }
}

double quadratic_form_scalar(const double* m_re, const double* m_im,
                             const double* v_re, const double* v_im,
                             std::size_t dim) {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double* row_re = m_re + i * dim;
    const double* row_im = m_im + i * dim;
    double y_re = 0.0;
    double y_im = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      y_re += row_re[j] * v_re[j] - row_im[j] * v_im[j];
      y_im += row_re[j] * v_im[j] + row_im[j] * v_re[j];
    }
    acc += v_re[i] * y_re + v_im[i] * y_im;
  }
  return acc;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", exp_batch_scalar,
                               single_vacuum_scalar, joint_vacuum_scalar,
                               quadratic_form_scalar};
  return backend;
}

}  // namespace bellopt::kernels
