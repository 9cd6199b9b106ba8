#include "oscilloflow/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "oscilloflow/errors.hpp"

namespace oscf {

namespace {

// FFTW plan creation is not thread-safe; execution via the new-array
// interface is. Plans are created once per (dim, n, sign) with
// FFTW_ESTIMATE | FFTW_UNALIGNED so that any buffer is admissible and the
// codelet choice (hence rounding) is identical for every execution.
class PlanCache {
public:
    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_tuple(dim, n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::size_t total = 1;
        for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
        std::vector<std::complex<double>> in(total), out(total);
        int dims[3] = {n, n, n};
        fftw_plan p = fftw_plan_dft(dim, dims,
                                    reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw ConfigError("fftw plan creation failed");
        plans_[key] = p;
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(int dim, int n, int sign, std::complex<double>* in, std::complex<double>* out) {
    fftw_plan p = cache().get(dim, n, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in), reinterpret_cast<fftw_complex*>(out));
}

} // namespace

void forward_transform_raw(const TorusGrid& grid, const double* samples,
                           std::complex<double>* out) {
    const std::size_t m = grid.size();
    std::vector<std::complex<double>> in(m);
    for (std::size_t i = 0; i < m; ++i) in[i] = {samples[i], 0.0};
    execute(grid.dim(), grid.points_per_axis(), FFTW_FORWARD, in.data(), out);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) out[i] *= scale;
}

SpectralField forward_transform(const TorusGrid& grid, std::span<const double> samples,
                                int components) {
    if (samples.size() != static_cast<std::size_t>(components) * grid.size())
        throw ConfigError("forward_transform: sample count " + std::to_string(samples.size()) +
                          " does not match components*grid size " +
                          std::to_string(components * grid.size()));
    SpectralField f(grid, components);
    for (int c = 0; c < components; ++c)
        forward_transform_raw(grid, samples.data() + static_cast<std::size_t>(c) * grid.size(),
                              f.component(c).data());
    symmetrize_reality(f);
    return f;
}

void inverse_transform_component(const SpectralField& f, int c, double* out) {
    const TorusGrid& g = f.grid();
    const std::size_t m = g.size();
    std::vector<std::complex<double>> in(f.component(c).begin(), f.component(c).end());
    std::vector<std::complex<double>> tmp(m);
    execute(g.dim(), g.points_per_axis(), FFTW_BACKWARD, in.data(), tmp.data());
    for (std::size_t i = 0; i < m; ++i) out[i] = tmp[i].real();
}

std::vector<double> inverse_transform(const SpectralField& f) {
    const std::size_t m = f.grid().size();
    std::vector<double> out(static_cast<std::size_t>(f.components()) * m);
    for (int c = 0; c < f.components(); ++c)
        inverse_transform_component(f, c, out.data() + static_cast<std::size_t>(c) * m);
    return out;
}

} // namespace oscf
