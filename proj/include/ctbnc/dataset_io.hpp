#pragma once

#include "ctbnc/trajectory.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

namespace ctbnc {

// File conventions for delimited trajectory text: header row, one column per
// variable plus a time column, optional trajectory-separator column.
struct DatasetOptions {
    std::string extension = ".csv";
    char separator = ',';
    std::string time_column = "t";
    std::string class_column = "class";
    std::optional<std::string> trj_separator_column;
    std::optional<std::set<std::string>> valid_columns;
};

// Loads every matching file under path (or the single file itself) into one
// dataset; one trajectory per file, or several when the separator column
// value changes (segment ids get a "#k" suffix).
Dataset load_dataset(const std::filesystem::path& path, const DatasetOptions& options);

// Writes one delimited file per trajectory ("<id><extension>") under dir.
// Column order: time, attributes, class. Inverse of load_dataset.
void save_dataset(const Dataset& dataset, const std::filesystem::path& dir,
                  const DatasetOptions& options);

// Reads a cross-validation partitioning in either accepted form: a results
// file ("name: True Class: ..." lines under "Test<k>" headers) or a listing
// file ("Test k of K:" headers followed by bare trajectory names). prefix,
// when given, is stripped from every trajectory name.
PartitionSpec load_partition(const std::filesystem::path& path,
                             const std::optional<std::string>& prefix = std::nullopt);

// Keeps a uniformly random ceil(fraction*n) subset of trajectories, each cut
// to its first ceil(fraction*rows) time points (at least one). fraction = 1
// is the identity.
Dataset cut_dataset(const Dataset& dataset, double fraction, std::uint64_t seed);

// Multiplies every timestamp by factor (> 0).
Dataset scale_time(const Dataset& dataset, double factor);

// Uniformly random reorder of the trajectories, deterministic per seed.
Dataset permute_dataset(const Dataset& dataset, std::uint64_t seed);

} // namespace ctbnc
