#include "bellopt/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

#define BELLOPT_AVX2 __attribute__((target("avx2,fma")))

namespace bellopt::kernels {
namespace {

// exp for 4 doubles: Cephes-style range reduction x = n*ln2 + r followed by
// a rational approximation of exp(r) on |r| <= ln2/2. Accurate to ~1 ulp for
// finite inputs; overflow saturates to +inf, deep underflow flushes to 0,
// and the two-step 2^n scaling keeps gradual underflow through the
// subnormal range.
BELLOPT_AVX2 inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d max_arg = _mm256_set1_pd(709.782712893383996843);
  const __m256d min_arg = _mm256_set1_pd(-745.133219101941108420);

  const __m256d overflow = _mm256_cmp_pd(x, max_arg, _CMP_GT_OQ);
  const __m256d underflow = _mm256_cmp_pd(x, min_arg, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, min_arg), max_arg);

  // n = round(x / ln2); cvtpd_epi32 rounds to nearest even.
  const __m128i n32 = _mm256_cvtpd_epi32(_mm256_mul_pd(x, log2e));
  const __m256d n = _mm256_cvtepi32_pd(n32);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d pn = _mm256_fmadd_pd(p0, rr, p1);
  pn = _mm256_fmadd_pd(pn, rr, p2);
  pn = _mm256_mul_pd(pn, r);
  __m256d qn = _mm256_fmadd_pd(q0, rr, q1);
  qn = _mm256_fmadd_pd(qn, rr, q2);
  qn = _mm256_fmadd_pd(qn, rr, q3);
  const __m256d expr = _mm256_fmadd_pd(
      two, _mm256_div_pd(pn, _mm256_sub_pd(qn, pn)), one);

  // Scale by 2^n in two halves so n down to -1074 stays representable.
  const __m128i n_half = _mm_srai_epi32(n32, 1);
  const __m128i n_rest = _mm_sub_epi32(n32, n_half);
  const __m128i bias = _mm_set1_epi32(1023);
  const __m256i e1 = _mm256_slli_epi64(
      _mm256_cvtepi32_epi64(_mm_add_epi32(n_half, bias)), 52);
  const __m256i e2 = _mm256_slli_epi64(
      _mm256_cvtepi32_epi64(_mm_add_epi32(n_rest, bias)), 52);
  __m256d result = _mm256_mul_pd(
      _mm256_mul_pd(expr, _mm256_castsi256_pd(e1)), _mm256_castsi256_pd(e2));

  result = _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
  result = _mm256_blendv_pd(result, _mm256_set1_pd(HUGE_VAL), overflow);
  return result;
}

BELLOPT_AVX2 void exp_batch_avx2(const double* x, double* out,
                                 std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, exp_pd(_mm256_loadu_pd(x + i)));
  if (i < n) scalar_backend().exp_batch(x + i, out + i, n - i);
}

BELLOPT_AVX2 void single_vacuum_avx2(const double* a_re, const double* a_im,
                                     double* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d re = _mm256_loadu_pd(a_re + i);
    const __m256d im = _mm256_loadu_pd(a_im + i);
    const __m256d na = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
    const __m256d damping = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), na));
    _mm256_storeu_pd(out + i,
                     _mm256_mul_pd(_mm256_mul_pd(half, damping),
                                   _mm256_add_pd(one, na)));
  }
  if (i < n)
    scalar_backend().single_vacuum_batch(a_re + i, a_im + i, out + i, n - i);
}

BELLOPT_AVX2 void joint_vacuum_avx2(const double* p, const double* a_re,
                                    const double* a_im, const double* b_re,
                                    const double* b_im, double* out,
                                    std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d are = _mm256_loadu_pd(a_re + i);
    const __m256d aim = _mm256_loadu_pd(a_im + i);
    const __m256d bre = _mm256_loadu_pd(b_re + i);
    const __m256d bim = _mm256_loadu_pd(b_im + i);
    const __m256d pv = _mm256_loadu_pd(p + i);
    const __m256d na = _mm256_fmadd_pd(are, are, _mm256_mul_pd(aim, aim));
    const __m256d nb = _mm256_fmadd_pd(bre, bre, _mm256_mul_pd(bim, bim));
    const __m256d dre = _mm256_sub_pd(are, bre);
    const __m256d dim = _mm256_sub_pd(aim, bim);
    const __m256d d2 = _mm256_fmadd_pd(dre, dre, _mm256_mul_pd(dim, dim));
    const __m256d damping =
        exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), _mm256_add_pd(na, nb)));
    const __m256d pure_term =
        _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(half, pv), damping), d2);
    const __m256d noise_weight =
        _mm256_mul_pd(quarter, _mm256_sub_pd(one, pv));
    const __m256d poly =
        _mm256_mul_pd(_mm256_add_pd(one, na), _mm256_add_pd(one, nb));
    const __m256d noise_term =
        _mm256_mul_pd(_mm256_mul_pd(noise_weight, damping), poly);
    _mm256_storeu_pd(out + i, _mm256_add_pd(pure_term, noise_term));
  }
  if (i < n)
    scalar_backend().joint_vacuum_batch(p + i, a_re + i, a_im + i, b_re + i,
                                        b_im + i, out + i, n - i);
}

BELLOPT_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d sum2 = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
}

BELLOPT_AVX2 double quadratic_form_avx2(const double* m_re,
                                        const double* m_im,
                                        const double* v_re,
                                        const double* v_im,
                                        std::size_t dim) {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double* row_re = m_re + i * dim;
    const double* row_im = m_im + i * dim;
    __m256d yre = _mm256_setzero_pd();
    __m256d yim = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= dim; j += 4) {
      const __m256d mr = _mm256_loadu_pd(row_re + j);
      const __m256d mi = _mm256_loadu_pd(row_im + j);
      const __m256d vr = _mm256_loadu_pd(v_re + j);
      const __m256d vi = _mm256_loadu_pd(v_im + j);
      yre = _mm256_fmadd_pd(mr, vr, yre);
      yre = _mm256_fnmadd_pd(mi, vi, yre);
      yim = _mm256_fmadd_pd(mr, vi, yim);
      yim = _mm256_fmadd_pd(mi, vr, yim);
    }
    double y_re = hsum(yre);
    double y_im = hsum(yim);
    for (; j < dim; ++j) {
      y_re += row_re[j] * v_re[j] - row_im[j] * v_im[j];
      y_im += row_re[j] * v_im[j] + row_im[j] * v_re[j];
    }
    acc += v_re[i] * y_re + v_im[i] * y_im;
  }
  return acc;
}

}  // namespace

const Backend* avx2_backend() {
  static const Backend backend{"avx2", exp_batch_avx2, single_vacuum_avx2,
                               joint_vacuum_avx2, quadratic_form_avx2};
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &backend;
  return nullptr;
}

}  // namespace bellopt::kernels

#else

namespace bellopt::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace bellopt::kernels

#endif
