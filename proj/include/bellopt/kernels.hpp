#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace bellopt::kernels {

/// A set of data-parallel arithmetic kernels. `scalar` is the reference
/// implementation; SIMD variants must agree with it within the tolerances
/// asserted by the equivalence tests (they may differ in summation order
/// and hence in the last few ulp).
///
/// All kernels assume finite inputs; argument validation happens in the
/// layers above.
struct Backend {
  const char* name;

  /// out[i] = exp(x[i]). Handles overflow/underflow like std::exp.
  void (*exp_batch)(const double* x, double* out, std::size_t n);

  /// Vacuum probability of one on-off detector behind a displacement:
  /// out[i] = (1/2) exp(-|a_i|^2) (1 + |a_i|^2).
  void (*single_vacuum_batch)(const double* a_re, const double* a_im,
                              double* out, std::size_t n);

  /// Joint vacuum probability for the mixed two-mode state:
  /// out[i] = (p_i/2) e^{-|a|^2-|b|^2} |a-b|^2
  ///        + ((1-p_i)/4) e^{-|a|^2-|b|^2} (1+|a|^2)(1+|b|^2).
  void (*joint_vacuum_batch)(const double* p, const double* a_re,
                             const double* a_im, const double* b_re,
                             const double* b_im, double* out, std::size_t n);

  /// Re(v^H M v) for a Hermitian matrix M in row-major split storage.
  double (*quadratic_form)(const double* m_re, const double* m_im,
                           const double* v_re, const double* v_im,
                           std::size_t dim);
};

const Backend& scalar_backend();

/// Backend by name ("scalar", "avx2"), or nullptr if unknown or not
/// supported by the running CPU.
const Backend* find_backend(std::string_view name);

/// All backends usable on this machine, scalar first.
std::vector<const Backend*> available_backends();

/// The backend used by the library. Chosen once: the BELLOPT_KERNEL
/// environment variable forces a backend by name (falling back to scalar
/// with a warning on stderr if unavailable); otherwise the widest
/// supported variant wins.
const Backend& active_backend();

}  // namespace bellopt::kernels
