#include "support/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fbmlab {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

std::array<std::uint32_t, 4> philox_block(std::uint64_t key,
                                          std::array<std::uint32_t, 4> ctr) {
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const std::array<std::uint32_t, 4> next = {
        static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
        static_cast<std::uint32_t>(p1),
        static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
        static_cast<std::uint32_t>(p0)};
    ctr = next;
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return ctr;
}

std::array<std::uint64_t, 2> philox_pair(std::uint64_t seed,
                                         std::uint64_t stream,
                                         std::uint64_t block_index) {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_index),
      static_cast<std::uint32_t>(block_index >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
  const auto out = philox_block(seed, ctr);
  return {static_cast<std::uint64_t>(out[0]) |
              (static_cast<std::uint64_t>(out[1]) << 32),
          static_cast<std::uint64_t>(out[2]) |
              (static_cast<std::uint64_t>(out[3]) << 32)};
}

inline double u64_to_open_unit(std::uint64_t x) {
  // (k + 1/2) * 2^-53 with k in [0, 2^53) never hits 0 or 1.
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

std::uint64_t RandomStream::bits(std::uint64_t index) const {
  const auto pair = philox_pair(seed_, stream_, index >> 1);
  return pair[index & 1];
}

double RandomStream::uniform(std::uint64_t index) const {
  return u64_to_open_unit(bits(index));
}

double RandomStream::normal(std::uint64_t index) const {
  return normal_quantile(uniform(index));
}

void RandomStream::fill_normals(std::span<double> out,
                                std::uint64_t first) const {
  std::uint64_t i = first;
  std::size_t n = 0;
  while (n < out.size()) {
    const auto pair = philox_pair(seed_, stream_, i >> 1);
    if ((i & 1) == 0 && n + 1 < out.size()) {
      out[n++] = normal_quantile(u64_to_open_unit(pair[0]));
      out[n++] = normal_quantile(u64_to_open_unit(pair[1]));
      i += 2;
    } else {
      out[n++] = normal_quantile(u64_to_open_unit(pair[i & 1]));
      ++i;
    }
  }
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("normal_quantile: p must lie in (0,1)");
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) *
                 r +
             4.5921953931549871457e+4) *
                r +
            1.3731693765509461125e+4) *
               r +
           1.9715909503065514427e+3) *
              r +
          1.3314166789178437745e+2) *
             r +
         3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) *
                 r +
             2.1213794301586595867e+4) *
                r +
            5.3941960214247511077e+3) *
               r +
           6.8718700749205790830e+2) *
              r +
          4.2313330701600911252e+1) *
             r +
         1.0);
    return q * num / den;
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) *
                 r +
             1.27045825245236838258e+0) *
                r +
            3.64784832476320460504e+0) *
               r +
           5.76949722146069140550e+0) *
              r +
          4.63033784615654529590e+0) *
             r +
         1.42343711074968357734e+0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) *
                 r +
             1.48103976427480074590e-1) *
                r +
            6.89767334985100004550e-1) *
               r +
           1.67638483018380384940e+0) *
              r +
          2.05319162663775882187e+0) *
             r +
         1.0);
    value = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) *
                 r +
             2.65321895265761230930e-2) *
                r +
            2.96560571828504891230e-1) *
               r +
           1.78482653991729133580e+0) *
              r +
          5.46378491116411436990e+0) *
             r +
         6.65790464350110377720e+0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) *
                 r +
             7.86869131145613259100e-4) *
                r +
            1.48753612908506148525e-2) *
               r +
           1.36929880922735805310e-1) *
              r +
          5.99832206555887937690e-1) *
             r +
         1.0);
    value = num / den;
  }
  return (q < 0.0) ? -value : value;
}

} // namespace fbmlab
