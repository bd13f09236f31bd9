// Copyright 2026 The auctiondet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auctiondet/correlate.hpp"

#include <fftw3.h>

#include <complex>
#include <memory>
#include <mutex>
#include <string>

namespace auctiondet {
namespace {

// FFTW's planner is not reentrant; execution is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> AllocFftw(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  ~Plan() {
    std::lock_guard lock(PlannerMutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void Execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

Grid CorrelateDirect(const Grid& y, const Grid& s) {
  const std::size_t w = s.rows();
  const std::size_t out_rows = y.rows() - w + 1;
  const std::size_t out_cols = y.cols() - w + 1;
  Grid out(out_rows, out_cols);
  for (std::size_t i = 0; i < out_rows; ++i) {
    for (std::size_t j = 0; j < out_cols; ++j) {
      double acc = 0.0;
      for (std::size_t u = 0; u < w; ++u) {
        const double* yr = y.row(i + u).data() + j;
        const double* sr = s.row(u).data();
        for (std::size_t v = 0; v < w; ++v) acc += yr[v] * sr[v];
      }
      out(i, j) = acc;
    }
  }
  return out;
}

// Circular correlation on the measurement's own extent. Valid-mode outputs
// (i <= N - W, j <= M - W) never wrap, so no extra padding is required.
Grid CorrelateFft(const Grid& y, const Grid& s) {
  const int n = static_cast<int>(y.rows());
  const int m = static_cast<int>(y.cols());
  const std::size_t real_size = static_cast<std::size_t>(n) * m;
  const std::size_t half_cols = static_cast<std::size_t>(m / 2 + 1);
  const std::size_t spec_size = static_cast<std::size_t>(n) * half_cols;

  auto real_buf = AllocFftw<double>(real_size);
  auto y_hat = AllocFftw<fftw_complex>(spec_size);
  auto s_hat = AllocFftw<fftw_complex>(spec_size);

  std::unique_ptr<Plan> forward_y, forward_s, inverse;
  {
    std::lock_guard lock(PlannerMutex());
    forward_y = std::make_unique<Plan>(fftw_plan_dft_r2c_2d(
        n, m, real_buf.get(), y_hat.get(), FFTW_ESTIMATE));
    forward_s = std::make_unique<Plan>(fftw_plan_dft_r2c_2d(
        n, m, real_buf.get(), s_hat.get(), FFTW_ESTIMATE));
    inverse = std::make_unique<Plan>(fftw_plan_dft_c2r_2d(
        n, m, y_hat.get(), real_buf.get(), FFTW_ESTIMATE));
  }

  std::copy(y.values().begin(), y.values().end(), real_buf.get());
  forward_y->Execute();

  std::fill(real_buf.get(), real_buf.get() + real_size, 0.0);
  for (std::size_t u = 0; u < s.rows(); ++u) {
    for (std::size_t v = 0; v < s.cols(); ++v) {
      real_buf[u * m + v] = s(u, v);
    }
  }
  forward_s->Execute();

  for (std::size_t i = 0; i < spec_size; ++i) {
    const std::complex<double> a(y_hat[i][0], y_hat[i][1]);
    const std::complex<double> b(s_hat[i][0], s_hat[i][1]);
    const std::complex<double> c = a * std::conj(b);
    y_hat[i][0] = c.real();
    y_hat[i][1] = c.imag();
  }
  inverse->Execute();

  const std::size_t w = s.rows();
  const std::size_t out_rows = y.rows() - w + 1;
  const std::size_t out_cols = y.cols() - w + 1;
  const double scale = 1.0 / static_cast<double>(real_size);
  Grid out(out_rows, out_cols);
  for (std::size_t i = 0; i < out_rows; ++i) {
    for (std::size_t j = 0; j < out_cols; ++j) {
      out(i, j) = real_buf[i * m + j] * scale;
    }
  }
  return out;
}

}  // namespace

Grid Correlate(const Grid& measurement, const Grid& templ,
               CorrelationMethod method) {
  if (templ.rows() != templ.cols()) {
    throw DimensionError("template must be square, got " +
                         std::to_string(templ.rows()) + "x" +
                         std::to_string(templ.cols()));
  }
  if (templ.rows() > measurement.rows() || templ.cols() > measurement.cols()) {
    throw DimensionError("template (" + std::to_string(templ.rows()) +
                         ") larger than measurement (" +
                         std::to_string(measurement.rows()) + "x" +
                         std::to_string(measurement.cols()) + ")");
  }
  if (method == CorrelationMethod::kAuto) {
    method = templ.rows() <= kDirectCorrelationMaxWidth
                 ? CorrelationMethod::kDirect
                 : CorrelationMethod::kFft;
  }
  return method == CorrelationMethod::kDirect ? CorrelateDirect(measurement, templ)
                                              : CorrelateFft(measurement, templ);
}

}  // namespace auctiondet
