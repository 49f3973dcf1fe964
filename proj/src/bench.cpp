#include "exacthnf/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "exacthnf/denominators.hpp"
#include "exacthnf/hermite_driver.hpp"

namespace exacthnf {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Int Rng::entry(unsigned bits) {
  // Uniform in [-2^bits, 2^bits]: draw magnitude from [0, 2^(bits+1)] and shift.
  Int span = (Int(1) << (bits + 1)) + 1;
  Int v(0);
  Int produced(1);
  while (produced < span) {
    v = (v << 32) | Int(static_cast<unsigned long>(next() & 0xffffffffull));
    produced <<= 32;
  }
  return posRem(v, span) - (Int(1) << bits);
}

IntMatrix randomNonsingular(std::size_t n, unsigned bits, Rng& rng) {
  for (;;) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.entry(bits);
    if (detBareiss(a) != 0) return a;
  }
}

std::vector<BenchRow> runBench(const std::vector<std::size_t>& sizes,
                               const std::vector<unsigned>& bitlens, unsigned trials,
                               std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  if (trials == 0) return rows;
  for (std::size_t n : sizes) {
    for (unsigned bits : bitlens) {
      double msMassager = 0, msClassical = 0;
      std::uint64_t opsMassager = 0, opsClassical = 0;
      for (unsigned t = 0; t < trials; ++t) {
        // Per-trial seed keeps the stream independent of trial order.
        Rng rng(seed ^ (0x517cc1b727220a95ull * (t + 1)) ^ (n << 16) ^ bits);
        const IntMatrix a = randomNonsingular(n, bits, rng);

        instrument::reset();
        auto t0 = Clock::now();
        const CompactHermite h1 = hermiteForm(a);
        auto t1 = Clock::now();
        opsMassager += instrument::limbOps();
        msMassager += std::chrono::duration<double, std::milli>(t1 - t0).count();

        instrument::reset();
        t0 = Clock::now();
        const CompactHermite h2 = classicalHnf(a);
        t1 = Clock::now();
        opsClassical += instrument::limbOps();
        msClassical += std::chrono::duration<double, std::milli>(t1 - t0).count();

        if (!(h1 == h2)) throw CertifyFail("bench: algorithms disagree");
      }
      rows.push_back({n, bits, "massager", msMassager / trials, opsMassager / trials});
      rows.push_back({n, bits, "classical", msClassical / trials, opsClassical / trials});
    }
  }
  return rows;
}

std::string benchTable(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << std::setw(8) << "bits" << std::setw(12)
     << "algorithm" << std::right << std::setw(14) << "wall[ms]" << std::setw(16)
     << "limbOps" << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(6) << r.n << std::setw(8) << r.bits << std::setw(12)
       << r.algorithm << std::right << std::setw(14) << std::fixed
       << std::setprecision(2) << r.wallMillis << std::setw(16) << r.limbOps << '\n';
  }
  return os.str();
}

}  // namespace exacthnf
