#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace reacsynth {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

class Stopwatch {
public:
    Stopwatch() : start_(clock::now()) {}
    double elapsed_s() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_).count();
    }
private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

// Wall-clock budget shared along a call chain. A default-constructed
// budget never expires.
class Budget {
public:
    Budget() = default;
    explicit Budget(double seconds)
        : deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds))) {}

    bool expired() const {
        return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
    }
    double remaining_s() const {
        if (!deadline_) return 1e9;
        return std::chrono::duration<double>(*deadline_ - std::chrono::steady_clock::now()).count();
    }
private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace reacsynth
