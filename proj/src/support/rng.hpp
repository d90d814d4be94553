#ifndef FBMLAB_SUPPORT_RNG_HPP
#define FBMLAB_SUPPORT_RNG_HPP

#include <array>
#include <cstdint>
#include <span>

namespace fbmlab {

// Counter-based generator (Philox4x32-10). A draw is a pure function of
// (seed, stream, index), so parallel Monte Carlo is order-independent:
// path i reads stream i and nobody shares state.
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint64_t bits(std::uint64_t index) const;

  // Uniform on the open interval (0,1).
  double uniform(std::uint64_t index) const;

  // Standard normal via the inverse CDF, N(0,1) draw number `index`.
  double normal(std::uint64_t index) const;

  // Consecutive draws starting at `first`; one Philox block serves two draws.
  void fill_normals(std::span<double> out, std::uint64_t first = 0) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// Inverse of the standard normal CDF (Wichura's PPND16, good to ~1e-15).
double normal_quantile(double p);

// Stream-id composition used by the harness: purpose tag in the top bits so
// per-path streams for B, W, W-tilde and limit resampling never collide.
enum class StreamPurpose : std::uint64_t {
  driver = 0,
  brownian_w = 1,
  brownian_wtilde = 2,
  limit_driver = 3,
  limit_w = 4,
  limit_wtilde = 5,
};

inline std::uint64_t substream(StreamPurpose purpose, std::uint64_t index) {
  return (static_cast<std::uint64_t>(purpose) << 48) | index;
}

} // namespace fbmlab

#endif
