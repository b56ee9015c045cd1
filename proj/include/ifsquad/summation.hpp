#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace ifsq {

/// Kahan-Neumaier compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumComplex {
public:
    void add(const std::complex<double>& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

namespace detail {
template <class T>
struct accumulator_for;
template <>
struct accumulator_for<double> {
    using type = KahanSum;
};
template <>
struct accumulator_for<std::complex<double>> {
    using type = KahanSumComplex;
};

/// Runs block 0..block_count-1, possibly concurrently.
void run_blocks(std::size_t block_count, const std::function<void(std::size_t)>& run_block);
}  // namespace detail

template <class T>
using AccumulatorFor = typename detail::accumulator_for<T>::type;

/// Worker count from the IFSQUAD_THREADS environment variable; all available
/// cores when unset.
int worker_count();

/// Splits [0, count) into fixed blocks, evaluates block partials (possibly
/// concurrently) and combines them in block order; the result is therefore
/// identical for every worker count.
template <class T, class Fill>
T block_reduce(std::size_t count, std::size_t block_size, Fill&& fill) {
    if (count == 0) return T{};
    const std::size_t nblocks = (count + block_size - 1) / block_size;
    std::vector<T> partials(nblocks);
    detail::run_blocks(nblocks, [&](std::size_t b) {
        AccumulatorFor<T> acc;
        const std::size_t begin = b * block_size;
        const std::size_t end = std::min(count, begin + block_size);
        fill(begin, end, acc);
        partials[b] = acc.value();
    });
    AccumulatorFor<T> total;
    for (const T& p : partials) total.add(p);
    return total.value();
}

}  // namespace ifsq
