#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nfp {

/// Point in R^d, d <= 3; unused trailing components are zero.
using Point = std::array<double, 3>;

/// Raised when input values violate a documented precondition.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Raised when a configuration file cannot be parsed or validated.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an iterative numerical procedure fails to converge or
/// produces non-finite values.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the resolvent when the solution undershoots the positivity
/// threshold; callers typically retry with a smaller step.
class PositivityError : public NumericalError {
public:
    explicit PositivityError(const std::string& msg) : NumericalError(msg) {}
};

/// Chunked parallel map over [0, n). Chunk boundaries depend only on n and
/// the thread count never influences results: bodies must write to disjoint
/// locations and perform no shared reductions.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body)
{
    if (threads <= 1 || n < 4096) {
        body(0, n);
        return;
    }
    std::size_t nt = std::min<std::size_t>(threads, (n + 4095) / 4096);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t k = 0; k < nt; ++k) {
        std::size_t lo = k * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

inline int default_thread_count()
{
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace nfp
