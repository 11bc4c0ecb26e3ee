#include "satake/numeric.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace satake {

Complex cpow_int(Complex base, long e) {
    if (e < 0) return 1.0 / cpow_int(base, -e);
    Complex acc{1.0, 0.0};
    Complex b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k != 0) {
        if (k & 1UL) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

BigInt bigint_pow(const BigInt& base, unsigned e) {
    BigInt acc = 1;
    BigInt b = base;
    while (e != 0) {
        if (e & 1U) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() == 1) return v[0];
    if (v.size() <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum_impl(v.subspan(0, half)) + pairwise_sum_impl(v.subspan(half));
}

constexpr std::int64_t kBlock = 4096;

}  // namespace

Complex pairwise_sum(std::span<const Complex> values) { return pairwise_sum_impl(values); }
double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values); }

Complex blocked_sum(std::int64_t count, const std::function<Complex(std::int64_t)>& f,
                    int threads) {
    if (count <= 0) return Complex{};
    const std::int64_t nblocks = (count + kBlock - 1) / kBlock;
    std::vector<Complex> block_sums(static_cast<std::size_t>(nblocks));

    auto run_block = [&](std::int64_t b) {
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(count, lo + kBlock);
        std::vector<Complex> buf(static_cast<std::size_t>(hi - lo));
        for (std::int64_t i = lo; i < hi; ++i) buf[static_cast<std::size_t>(i - lo)] = f(i);
        block_sums[static_cast<std::size_t>(b)] = pairwise_sum(buf);
    };

    if (threads <= 1 || nblocks == 1) {
        for (std::int64_t b = 0; b < nblocks; ++b) run_block(b);
    } else {
        std::atomic<std::int64_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::int64_t b = next.fetch_add(1);
                if (b >= nblocks) break;
                run_block(b);
            }
        };
        const int nw = static_cast<int>(std::min<std::int64_t>(threads, nblocks));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nw));
        for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return pairwise_sum(block_sums);
}

std::vector<long> primes_up_to(double x) {
    if (x < 2.0) return {};
    if (x > 2.0e6) throw std::invalid_argument("prime sieve limit exceeded (max 2e6)");
    const long limit = static_cast<long>(std::floor(x));
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<long> out;
    for (long i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<long> primes_in(double low, double high) {
    std::vector<long> out;
    for (long p : primes_up_to(high))
        if (static_cast<double>(p) > low) out.push_back(p);
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Lower-gamma series, x < a+1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int k = 0; k < 500; ++k) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper-gamma continued fraction (Lentz), x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_tail(double stat, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_tail: dof must be positive");
    if (stat <= 0.0) return 1.0;
    return gamma_q(0.5 * dof, 0.5 * stat);
}

}  // namespace satake
