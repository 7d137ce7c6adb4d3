#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <fftw3.h>

namespace ptwave::detail {

// Process-lifetime FFTW plan cache, one in-place c2c plan per (size, sign).
// Plans use FFTW_ESTIMATE so planning is cheap and deterministic, and
// FFTW_UNALIGNED so the new-array execute interface accepts any buffer.
// fftw_execute_dft on a cached plan is thread-safe; creation is serialized.
inline fftw_plan dft_plan(int n, int sign) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::scoped_lock lock(mutex);
    auto key = std::make_pair(n, sign);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

// Unnormalized in-place DFT with the FFTW sign convention:
// sign = FFTW_FORWARD  computes  z_m <- sum_j z_j e^{-2 pi i j m / n}
// sign = FFTW_BACKWARD computes  z_j <- sum_m z_m e^{+2 pi i j m / n}
inline void dft_inplace(std::vector<std::complex<double>>& z, int sign) {
    auto* buf = reinterpret_cast<fftw_complex*>(z.data());
    fftw_execute_dft(dft_plan(static_cast<int>(z.size()), sign), buf, buf);
}

} // namespace ptwave::detail
