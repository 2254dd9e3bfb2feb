#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ctbnc {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Strict parse of a full token as a double; nullopt when the token is not
// a complete finite number.
std::optional<double> parse_double(std::string_view token);

std::optional<long long> parse_integer(std::string_view token);

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

// Whitespace-separated tokens (spaces and tabs collapse).
std::vector<std::string> split_tokens(std::string_view s);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// Deterministic per-item seed derivation (splitmix64 mix of base and index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

using Rng = std::mt19937_64;

// Runs fn(i) for i in [0, n). jobs <= 1 executes inline; otherwise a small
// thread pool processes disjoint index ranges. fn must be safe to call
// concurrently for distinct i.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace ctbnc
