#include <algorithm>
#include <cstddef>
#include <vector>

#include "orpose/kernels/ops.hpp"
#include "orpose/util/error.hpp"

// OpenMP implementations. Convolutions go through im2col + GEMM; every output
// element is accumulated sequentially by a single thread, so results are
// independent of OMP_NUM_THREADS.

namespace orpose::kernels {
namespace parallel {

namespace {

std::vector<double>& scratch_col() {
  thread_local std::vector<double> buf;
  return buf;
}

std::vector<double>& scratch_aux() {
  thread_local std::vector<double> buf;
  return buf;
}

// col is (cin*kh*kw) x (ho*wo), row r = (ci*kh + ky)*kw + kx.
void im2col(const Tensor& x, int kh, int kw, int stride, int pad, int ho, int wo,
            double* col) {
  const int cin = x.dim(0), h = x.dim(1), w = x.dim(2);
  const int rows = cin * kh * kw;
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    const int kx = r % kw;
    const int ky = (r / kw) % kh;
    const int ci = r / (kw * kh);
    double* dst = col + static_cast<std::size_t>(r) * ho * wo;
    for (int oy = 0; oy < ho; ++oy) {
      const int iy = oy * stride + ky - pad;
      if (iy < 0 || iy >= h) {
        std::fill(dst, dst + wo, 0.0);
        dst += wo;
        continue;
      }
      for (int ox = 0; ox < wo; ++ox) {
        const int ix = ox * stride + kx - pad;
        dst[ox] = (ix >= 0 && ix < w) ? x(ci, iy, ix) : 0.0;
      }
      dst += wo;
    }
  }
}

}  // namespace

void gemm(int m, int n, int k, const double* a, const double* b, double* c, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    double* crow = c + static_cast<std::size_t>(i) * n;
    if (!accumulate) std::fill(crow, crow + n, 0.0);
    for (int kk = 0; kk < k; ++kk) {
      const double av = a[static_cast<std::size_t>(i) * k + kk];
      const double* brow = b + static_cast<std::size_t>(kk) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& bias, Tensor& y,
                    int stride, int pad) {
  const int cin = x.dim(0), h = x.dim(1), wd = x.dim(2);
  const int cout = w.dim(0), kh = w.dim(2), kw = w.dim(3);
  if (w.dim(1) != cin) throw InvalidInput("conv2d: weight/input channel mismatch");
  const int ho = conv_out_dim(h, kh, stride, pad);
  const int wo = conv_out_dim(wd, kw, stride, pad);
  if (y.dim(0) != cout || y.dim(1) != ho || y.dim(2) != wo)
    throw InvalidInput("conv2d: bad output shape");

  const int kdim = cin * kh * kw;
  const std::size_t n = static_cast<std::size_t>(ho) * wo;
  auto& col = scratch_col();
  col.resize(static_cast<std::size_t>(kdim) * n);
  im2col(x, kh, kw, stride, pad, ho, wo, col.data());
  gemm(cout, static_cast<int>(n), kdim, w.data(), col.data(), y.data(), false);
#pragma omp parallel for schedule(static)
  for (int co = 0; co < cout; ++co) {
    double* row = y.data() + static_cast<std::size_t>(co) * n;
    const double bv = bias(co);
    for (std::size_t j = 0; j < n; ++j) row[j] += bv;
  }
}

void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& gy, Tensor* gx,
                     Tensor* gw, Tensor* gbias, int stride, int pad) {
  const int cin = x.dim(0), h = x.dim(1), wd = x.dim(2);
  const int cout = w.dim(0), kh = w.dim(2), kw = w.dim(3);
  const int ho = gy.dim(1), wo = gy.dim(2);
  const int kdim = cin * kh * kw;
  const std::size_t n = static_cast<std::size_t>(ho) * wo;

  if (gbias) {
#pragma omp parallel for schedule(static)
    for (int co = 0; co < cout; ++co) {
      const double* row = gy.data() + static_cast<std::size_t>(co) * n;
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += row[j];
      (*gbias)(co) += acc;
    }
  }

  if (gw) {
    auto& col = scratch_col();
    col.resize(static_cast<std::size_t>(kdim) * n);
    im2col(x, kh, kw, stride, pad, ho, wo, col.data());
    // gw[co, r] += dot(gy row co, col row r)
#pragma omp parallel for schedule(static)
    for (int co = 0; co < cout; ++co) {
      const double* gyrow = gy.data() + static_cast<std::size_t>(co) * n;
      double* gwrow = gw->data() + static_cast<std::size_t>(co) * kdim;
      for (int r = 0; r < kdim; ++r) {
        const double* crow = col.data() + static_cast<std::size_t>(r) * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += gyrow[j] * crow[j];
        gwrow[r] += acc;
      }
    }
  }

  if (gx) {
    auto& colg = scratch_aux();
    colg.resize(static_cast<std::size_t>(kdim) * n);
    // colg = w^T * gy, row r accumulated over cout sequentially.
#pragma omp parallel for schedule(static)
    for (int r = 0; r < kdim; ++r) {
      double* dst = colg.data() + static_cast<std::size_t>(r) * n;
      std::fill(dst, dst + n, 0.0);
      for (int co = 0; co < cout; ++co) {
        const double wv = w.data()[static_cast<std::size_t>(co) * kdim + r];
        const double* gyrow = gy.data() + static_cast<std::size_t>(co) * n;
        for (std::size_t j = 0; j < n; ++j) dst[j] += wv * gyrow[j];
      }
    }
    gx->fill(0.0);
    // col2im scatter; rows of colg with the same ci write disjoint channels.
#pragma omp parallel for schedule(static)
    for (int ci = 0; ci < cin; ++ci) {
      for (int ky = 0; ky < kh; ++ky) {
        for (int kx = 0; kx < kw; ++kx) {
          const int r = (ci * kh + ky) * kw + kx;
          const double* src = colg.data() + static_cast<std::size_t>(r) * n;
          for (int oy = 0; oy < ho; ++oy) {
            const int iy = oy * stride + ky - pad;
            if (iy < 0 || iy >= h) continue;
            for (int ox = 0; ox < wo; ++ox) {
              const int ix = ox * stride + kx - pad;
              if (ix < 0 || ix >= wd) continue;
              (*gx)(ci, iy, ix) += src[static_cast<std::size_t>(oy) * wo + ox];
            }
          }
        }
      }
    }
  }
}

void relu_forward(const Tensor& x, Tensor& y) {
  const double* xs = x.data();
  double* ys = y.data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) ys[i] = xs[i] > 0.0 ? xs[i] : 0.0;
}

void relu_backward(const Tensor& x, const Tensor& gy, Tensor& gx) {
  const double* xs = x.data();
  const double* gys = gy.data();
  double* gxs = gx.data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) gxs[i] = xs[i] > 0.0 ? gys[i] : 0.0;
}

void upsample2_forward(const Tensor& x, Tensor& y) {
  const int c = x.dim(0), h = x.dim(1), w = x.dim(2);
#pragma omp parallel for schedule(static)
  for (int ci = 0; ci < c; ++ci)
    for (int iy = 0; iy < 2 * h; ++iy)
      for (int ix = 0; ix < 2 * w; ++ix) y(ci, iy, ix) = x(ci, iy / 2, ix / 2);
}

void upsample2_backward(const Tensor& gy, Tensor& gx) {
  const int c = gx.dim(0), h = gx.dim(1), w = gx.dim(2);
#pragma omp parallel for schedule(static)
  for (int ci = 0; ci < c; ++ci)
    for (int iy = 0; iy < h; ++iy)
      for (int ix = 0; ix < w; ++ix)
        gx(ci, iy, ix) = gy(ci, 2 * iy, 2 * ix) + gy(ci, 2 * iy, 2 * ix + 1) +
                         gy(ci, 2 * iy + 1, 2 * ix) + gy(ci, 2 * iy + 1, 2 * ix + 1);
}

}  // namespace parallel

namespace {
Backend g_backend = Backend::Parallel;
}

Backend backend() { return g_backend; }
void set_backend(Backend b) { g_backend = b; }

#define ORPOSE_DISPATCH(fn, ...)                   \
  do {                                             \
    if (g_backend == Backend::Serial)              \
      reference::fn(__VA_ARGS__);                  \
    else                                           \
      parallel::fn(__VA_ARGS__);                   \
  } while (0)

void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& bias, Tensor& y,
                    int stride, int pad) {
  ORPOSE_DISPATCH(conv2d_forward, x, w, bias, y, stride, pad);
}
void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& gy, Tensor* gx,
                     Tensor* gw, Tensor* gbias, int stride, int pad) {
  ORPOSE_DISPATCH(conv2d_backward, x, w, gy, gx, gw, gbias, stride, pad);
}
void relu_forward(const Tensor& x, Tensor& y) { ORPOSE_DISPATCH(relu_forward, x, y); }
void relu_backward(const Tensor& x, const Tensor& gy, Tensor& gx) {
  ORPOSE_DISPATCH(relu_backward, x, gy, gx);
}
void upsample2_forward(const Tensor& x, Tensor& y) { ORPOSE_DISPATCH(upsample2_forward, x, y); }
void upsample2_backward(const Tensor& gy, Tensor& gx) {
  ORPOSE_DISPATCH(upsample2_backward, gy, gx);
}
void gemm(int m, int n, int k, const double* a, const double* b, double* c, bool accumulate) {
  ORPOSE_DISPATCH(gemm, m, n, k, a, b, c, accumulate);
}

#undef ORPOSE_DISPATCH

}  // namespace orpose::kernels
