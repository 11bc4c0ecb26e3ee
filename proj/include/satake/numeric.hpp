#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace satake {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

/// Integer power by binary exponentiation; keeps unit-modulus inputs on the
/// circle to within a few ulp (std::pow on complex routes through exp/log).
Complex cpow_int(Complex base, long e);

BigInt bigint_pow(const BigInt& base, unsigned e);

/// Pairwise (binary-tree) summation over a fixed index order. The result is
/// independent of chunking, which is what the deterministic-reduction
/// contracts of the quadrature and ensemble code rely on.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

/// Sums f(i) for i in [0, count) by fixed 4096-element blocks, each block
/// pairwise-summed, block results pairwise-combined in block order. `threads`
/// only changes which worker evaluates a block, never the result.
Complex blocked_sum(std::int64_t count, const std::function<Complex(std::int64_t)>& f,
                    int threads);

std::vector<long> primes_in(double low, double high);  // primes p with low < p <= high
std::vector<long> primes_up_to(double x);
bool is_prime(long n);

/// Regularized upper incomplete gamma Q(a, x) = Γ(a,x)/Γ(a), a > 0, x >= 0.
/// Series for x < a+1, continued fraction otherwise.
double gamma_q(double a, double x);

/// Chi-square tail p-value P(X > stat) with `dof` degrees of freedom.
double chi_square_tail(double stat, int dof);

}  // namespace satake
