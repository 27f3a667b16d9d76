#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace pdaflow {

// FNV-1a over raw bytes; used for artifact manifests and config hashes.
std::uint64_t fnv1a(const void* data, std::size_t len);
std::uint64_t fnv1a(const std::string& s);
std::uint64_t fnv1a_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t v);

// Mixes a base seed with a stream index so derived generators are independent.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0);

// Shortest round-trip decimal form; keeps CSV reruns byte-identical.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Runs fn(i) for i in [0, n). Tasks must be independent; results keyed by
// index so the outcome does not depend on completion order.
void parallel_for(int n, const std::function<void(int)>& fn, int max_threads = 0);

class Stopwatch {
  public:
    Stopwatch() : start_(clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace pdaflow
