#include <algorithm>

#include "orpose/kernels/ops.hpp"
#include "orpose/util/error.hpp"

// Naive direct-form kernels. Deliberately simple: these are the oracle the
// parallel implementations are tested against.

namespace orpose::kernels {

int conv_out_dim(int in, int k, int stride, int pad) {
  return (in + 2 * pad - k) / stride + 1;
}

namespace reference {

void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& bias, Tensor& y,
                    int stride, int pad) {
  const int cin = x.dim(0), h = x.dim(1), wd = x.dim(2);
  const int cout = w.dim(0), kh = w.dim(2), kw = w.dim(3);
  if (w.dim(1) != cin) throw InvalidInput("conv2d: weight/input channel mismatch");
  const int ho = conv_out_dim(h, kh, stride, pad);
  const int wo = conv_out_dim(wd, kw, stride, pad);
  if (y.dim(0) != cout || y.dim(1) != ho || y.dim(2) != wo)
    throw InvalidInput("conv2d: bad output shape");

  for (int co = 0; co < cout; ++co) {
    for (int oy = 0; oy < ho; ++oy) {
      for (int ox = 0; ox < wo; ++ox) {
        double acc = bias(co);
        for (int ci = 0; ci < cin; ++ci) {
          for (int ky = 0; ky < kh; ++ky) {
            const int iy = oy * stride + ky - pad;
            if (iy < 0 || iy >= h) continue;
            for (int kx = 0; kx < kw; ++kx) {
              const int ix = ox * stride + kx - pad;
              if (ix < 0 || ix >= wd) continue;
              acc += x(ci, iy, ix) * w(co, ci, ky, kx);
            }
          }
        }
        y(co, oy, ox) = acc;
      }
    }
  }
}

void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& gy, Tensor* gx,
                     Tensor* gw, Tensor* gbias, int stride, int pad) {
  const int cin = x.dim(0), h = x.dim(1), wd = x.dim(2);
  const int cout = w.dim(0), kh = w.dim(2), kw = w.dim(3);
  const int ho = gy.dim(1), wo = gy.dim(2);

  if (gx) gx->fill(0.0);
  for (int co = 0; co < cout; ++co) {
    for (int oy = 0; oy < ho; ++oy) {
      for (int ox = 0; ox < wo; ++ox) {
        const double g = gy(co, oy, ox);
        if (gbias) (*gbias)(co) += g;
        for (int ci = 0; ci < cin; ++ci) {
          for (int ky = 0; ky < kh; ++ky) {
            const int iy = oy * stride + ky - pad;
            if (iy < 0 || iy >= h) continue;
            for (int kx = 0; kx < kw; ++kx) {
              const int ix = ox * stride + kx - pad;
              if (ix < 0 || ix >= wd) continue;
              if (gw) (*gw)(co, ci, ky, kx) += g * x(ci, iy, ix);
              if (gx) (*gx)(ci, iy, ix) += g * w(co, ci, ky, kx);
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
  for (std::size_t i = 0; i < x.size(); ++i) ys[i] = xs[i] > 0.0 ? xs[i] : 0.0;
}

void relu_backward(const Tensor& x, const Tensor& gy, Tensor& gx) {
  const double* xs = x.data();
  const double* gys = gy.data();
  double* gxs = gx.data();
  for (std::size_t i = 0; i < x.size(); ++i) gxs[i] = xs[i] > 0.0 ? gys[i] : 0.0;
}

void upsample2_forward(const Tensor& x, Tensor& y) {
  const int c = x.dim(0), h = x.dim(1), w = x.dim(2);
  for (int ci = 0; ci < c; ++ci)
    for (int iy = 0; iy < 2 * h; ++iy)
      for (int ix = 0; ix < 2 * w; ++ix) y(ci, iy, ix) = x(ci, iy / 2, ix / 2);
}

void upsample2_backward(const Tensor& gy, Tensor& gx) {
  const int c = gx.dim(0), h = gx.dim(1), w = gx.dim(2);
  for (int ci = 0; ci < c; ++ci)
    for (int iy = 0; iy < h; ++iy)
      for (int ix = 0; ix < w; ++ix)
        gx(ci, iy, ix) = gy(ci, 2 * iy, 2 * ix) + gy(ci, 2 * iy, 2 * ix + 1) +
                         gy(ci, 2 * iy + 1, 2 * ix) + gy(ci, 2 * iy + 1, 2 * ix + 1);
}

void gemm(int m, int n, int k, const double* a, const double* b, double* c, bool accumulate) {
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

}  // namespace reference
}  // namespace orpose::kernels
