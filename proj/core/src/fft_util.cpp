#include "fft_util.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace periwave::detail {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Fft::Fft(int N) : N_(N) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    buf_ = reinterpret_cast<std::complex<double>*>(
        fftw_malloc(sizeof(fftw_complex) * N));
    auto* b = reinterpret_cast<fftw_complex*>(buf_);
    plan_fwd_ = fftw_plan_dft_1d(N, b, b, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(N, b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buf_);
}

// Execution always goes through the plan's own (aligned) buffer, so callers
// may pass arbitrarily allocated arrays.
void Fft::forward(std::complex<double>* data) const {
    std::memcpy(buf_, data, sizeof(std::complex<double>) * N_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(data, buf_, sizeof(std::complex<double>) * N_);
}

void Fft::backward(std::complex<double>* data) const {
    std::memcpy(buf_, data, sizeof(std::complex<double>) * N_);
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    std::memcpy(data, buf_, sizeof(std::complex<double>) * N_);
}

std::vector<std::complex<double>> fft_coeffs(const std::vector<double>& u) {
    const int N = static_cast<int>(u.size());
    std::vector<std::complex<double>> buf(u.begin(), u.end());
    Fft fft(N);
    fft.forward(buf.data());
    for (auto& z : buf) z /= static_cast<double>(N);
    return buf;
}

std::vector<double> ifft_real(const std::vector<std::complex<double>>& uh) {
    const int N = static_cast<int>(uh.size());
    std::vector<std::complex<double>> buf(uh);
    Fft fft(N);
    fft.backward(buf.data());
    std::vector<double> out(N);
    for (int i = 0; i < N; ++i) out[i] = buf[i].real();
    return out;
}

} // namespace periwave::detail
