#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace kgrag {

// 64-bit FNV-1a. Used instead of std::hash so hashed embeddings are stable
// across standard libraries and runs.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic RNG with portable derived draws. std::uniform_*_distribution
// is implementation-defined, so the draws are computed by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x2545f4914f6cdd1dull) {}

    std::uint64_t next() {
        state_ = mix64(state_);
        return state_;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

// First dotted segment of a qualified name ("numpy.linalg.norm" -> "numpy").
inline std::string root_segment(std::string_view qualified) {
    std::size_t dot = qualified.find('.');
    return std::string(dot == std::string_view::npos ? qualified : qualified.substr(0, dot));
}

// Last `n` dotted segments ("a.b.c.d", 2 -> "c.d").
inline std::string tail_segments(std::string_view qualified, std::size_t n) {
    std::size_t pos = qualified.size();
    while (n > 0 && pos != 0) {
        std::size_t dot = qualified.rfind('.', pos - 1);
        if (dot == std::string_view::npos) return std::string(qualified);
        pos = dot;
        --n;
        if (n == 0) return std::string(qualified.substr(dot + 1));
    }
    return std::string(qualified);
}

// Apply fn(i) for i in [0, count) over at most `workers` threads. Results are
// written by index, so output order never depends on scheduling.
inline void parallel_for(std::size_t count, std::size_t workers,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Render p/t to exactly four decimal places, rounding half away from zero,
// using integer arithmetic so the text never depends on FP rounding.
inline std::string render_ratio_4dp(std::uint64_t numerator, std::uint64_t denominator) {
    std::uint64_t scaled = (numerator * 20000 + denominator) / (2 * denominator);
    std::string digits = std::to_string(scaled);
    while (digits.size() < 5) digits.insert(digits.begin(), '0');
    return digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
}

} // namespace kgrag
