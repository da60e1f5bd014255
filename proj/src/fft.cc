// Copyright 2026 The cvgup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fft.h"

#include <fftw3.h>

#include <mutex>

namespace cvgup::detail {

namespace {

// FFTW's planner is not reentrant; execution of a finished plan is.
std::mutex planner_mutex;

class Plan {
   public:
    explicit Plan(fftw_plan plan) : plan_(plan) {}
    Plan(const Plan &) = delete;
    Plan &operator=(const Plan &) = delete;
    ~Plan() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan_);
    }
    void execute() const { fftw_execute(plan_); }

   private:
    fftw_plan plan_;
};

fftw_complex *as_fftw(Complex *p) {
    return reinterpret_cast<fftw_complex *>(p);
}

std::size_t padded_size(std::size_t m) {
    std::size_t n = 1;
    while (n < m) {
        n <<= 1;
    }
    return n;
}

}  // namespace

void dft(std::span<Complex> data, int sign) {
    fftw_plan raw;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        raw = fftw_plan_dft_1d(static_cast<int>(data.size()), as_fftw(data.data()), as_fftw(data.data()),
                               sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    Plan plan(raw);
    plan.execute();
}

void dft2(std::span<Complex> data, std::size_t n0, std::size_t n1, int sign) {
    fftw_plan raw;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        raw = fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), as_fftw(data.data()),
                               as_fftw(data.data()), sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    Plan plan(raw);
    plan.execute();
}

std::vector<double> linear_convolution(std::span<const double> a, std::span<const double> b) {
    std::size_t m = a.size() + b.size() - 1;
    std::size_t n = padded_size(m);
    std::size_t nc = n / 2 + 1;

    std::vector<double> ra(n, 0.0);
    std::vector<double> rb(n, 0.0);
    std::copy(a.begin(), a.end(), ra.begin());
    std::copy(b.begin(), b.end(), rb.begin());
    std::vector<Complex> ca(nc);
    std::vector<Complex> cb(nc);

    fftw_plan pa;
    fftw_plan pb;
    fftw_plan pc;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        int ni = static_cast<int>(n);
        pa = fftw_plan_dft_r2c_1d(ni, ra.data(), as_fftw(ca.data()), FFTW_ESTIMATE);
        pb = fftw_plan_dft_r2c_1d(ni, rb.data(), as_fftw(cb.data()), FFTW_ESTIMATE);
        pc = fftw_plan_dft_c2r_1d(ni, as_fftw(ca.data()), ra.data(), FFTW_ESTIMATE);
    }
    Plan plan_a(pa);
    Plan plan_b(pb);
    Plan plan_c(pc);
    plan_a.execute();
    plan_b.execute();
    for (std::size_t k = 0; k < nc; k++) {
        ca[k] *= cb[k];
    }
    plan_c.execute();

    std::vector<double> out(ra.begin(), ra.begin() + static_cast<std::ptrdiff_t>(m));
    double scale = 1.0 / static_cast<double>(n);
    for (double &v : out) {
        v *= scale;
    }
    return out;
}

}  // namespace cvgup::detail
