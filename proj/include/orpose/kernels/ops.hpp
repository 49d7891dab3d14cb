#pragma once

#include "orpose/kernels/tensor.hpp"

namespace orpose::kernels {

// Two implementations of every hot kernel: a plain serial reference and an
// OpenMP-parallel version (im2col + GEMM for convolutions). Tests assert the
// two agree; tools/kernel_bench compares their throughput. Both accumulate
// each output element in a fixed order, so results do not depend on the
// thread count.
enum class Backend { Serial, Parallel };

Backend backend();
void set_backend(Backend b);

// x: (Cin,H,W), w: (Cout,Cin,kh,kw), bias: (Cout), y: (Cout,Ho,Wo).
void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& bias, Tensor& y,
                    int stride, int pad);
// Any of gx/gw/gbias may be null. gw and gbias are accumulated into.
void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& gy, Tensor* gx,
                     Tensor* gw, Tensor* gbias, int stride, int pad);

void relu_forward(const Tensor& x, Tensor& y);
void relu_backward(const Tensor& x, const Tensor& gy, Tensor& gx);

// Nearest-neighbour 2x upsample over (C,H,W); backward is a 2x2 sum pool.
void upsample2_forward(const Tensor& x, Tensor& y);
void upsample2_backward(const Tensor& gy, Tensor& gx);

// c[m,n] (+)= a[m,k] * b[k,n]; row-major, accumulate=false overwrites c.
void gemm(int m, int n, int k, const double* a, const double* b, double* c, bool accumulate);

int conv_out_dim(int in, int k, int stride, int pad);

namespace reference {
void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& bias, Tensor& y,
                    int stride, int pad);
void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& gy, Tensor* gx,
                     Tensor* gw, Tensor* gbias, int stride, int pad);
void relu_forward(const Tensor& x, Tensor& y);
void relu_backward(const Tensor& x, const Tensor& gy, Tensor& gx);
void upsample2_forward(const Tensor& x, Tensor& y);
void upsample2_backward(const Tensor& gy, Tensor& gx);
void gemm(int m, int n, int k, const double* a, const double* b, double* c, bool accumulate);
}  // namespace reference

namespace parallel {
void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& bias, Tensor& y,
                    int stride, int pad);
void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& gy, Tensor* gx,
                     Tensor* gw, Tensor* gbias, int stride, int pad);
void relu_forward(const Tensor& x, Tensor& y);
void relu_backward(const Tensor& x, const Tensor& gy, Tensor& gx);
void upsample2_forward(const Tensor& x, Tensor& y);
void upsample2_backward(const Tensor& gy, Tensor& gx);
void gemm(int m, int n, int k, const double* a, const double* b, double* c, bool accumulate);
}  // namespace parallel

}  // namespace orpose::kernels
