#ifndef PERIWAVE_FFT_UTIL_HPP
#define PERIWAVE_FFT_UTIL_HPP

#include <complex>
#include <vector>

namespace periwave::detail {

// Thin FFTW wrapper. Plans are created under a global mutex (FFTW planning
// is not thread-safe); execution is. One Fft instance per thread/trajectory.
class Fft {
  public:
    explicit Fft(int N);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    int size() const { return N_; }

    // In-place-safe complex transforms, no normalization.
    void forward(std::complex<double>* data) const;
    void backward(std::complex<double>* data) const;

  private:
    int N_;
    void* plan_fwd_;
    void* plan_bwd_;
    std::complex<double>* buf_;
};

// Fourier coefficients f_hat(m) = (1/N) sum_j f_j e^{-2pi i j m/N},
// FFTW index order (index i holds mode m = i < N/2 ? i : i - N).
std::vector<std::complex<double>> fft_coeffs(const std::vector<double>& u);
std::vector<double> ifft_real(const std::vector<std::complex<double>>& uh);

// Signed mode number for FFTW index i of an N-point transform.
inline long mode_of(int i, int N) { return i < (N + 1) / 2 ? i : i - N; }

} // namespace periwave::detail

#endif
