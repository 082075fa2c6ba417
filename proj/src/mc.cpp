#include "cosform/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cosform/errors.hpp"

namespace cosform::mc {

nlohmann::json McEstimate::to_json() const {
  return nlohmann::json{{"mean_re", mean.real()},
                        {"mean_im", mean.imag()},
                        {"stderr", std_err},
                        {"samples", samples},
                        {"seed", seed}};
}

McEstimate mc_run(const std::function<Cplx(rng::RngStream&)>& sample_one,
                  const McOptions& opt) {
  if (!sample_one) throw InvalidArgument("mc_run: empty integrand");
  if (opt.samples < 1) throw InvalidArgument("mc_run: need samples >= 1");
  if (opt.threads < 0) throw InvalidArgument("mc_run: need threads >= 0");

  const long long chunks = (opt.samples + kChunk - 1) / kChunk;
  std::vector<Cplx> sums(chunks, Cplx(0.0, 0.0));
  std::vector<double> sqs(chunks, 0.0);
  std::atomic<long long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    try {
      for (;;) {
        const long long c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) return;
        const long long lo = c * kChunk;
        const long long hi = std::min(opt.samples, lo + kChunk);
        rng::RngStream rs(opt.seed, static_cast<std::uint64_t>(c));
        Cplx s(0.0, 0.0);
        double q = 0.0;
        for (long long i = lo; i < hi; ++i) {
          const Cplx v = sample_one(rs);
          s += v;
          q += std::norm(v);
        }
        sums[c] = s;
        sqs[c] = q;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks, std::memory_order_relaxed);  // drain remaining work
    }
  };

  long long want = opt.threads > 0
                       ? opt.threads
                       : std::max(1u, std::thread::hardware_concurrency());
  want = std::clamp<long long>(want, 1, chunks);
  if (want == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(want));
    for (long long i = 0; i < want; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Index-order reduction: the grouping of the global sum never depends on
  // which worker produced which chunk.
  Cplx total(0.0, 0.0);
  double sq = 0.0;
  for (long long c = 0; c < chunks; ++c) {
    total += sums[c];
    sq += sqs[c];
  }
  const double n = double(opt.samples);
  McEstimate est;
  est.mean = total / n;
  est.samples = opt.samples;
  est.seed = opt.seed;
  if (opt.samples > 1) {
    const double var = std::max(0.0, (sq - n * std::norm(est.mean)) / (n - 1.0));
    est.std_err = std::sqrt(var / n);
  }
  return est;
}

}  // namespace cosform::mc
