#include "ctbnc/dataset_io.hpp"

#include "ctbnc/errors.hpp"
#include "ctbnc/util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace fs = std::filesystem;

namespace ctbnc {

namespace {

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

struct FileLayout {
    std::size_t time_col = 0;
    std::size_t class_col = 0;
    std::optional<std::size_t> separator_col;
    std::vector<std::size_t> attr_cols;     // file column per attribute, indexing order
    std::vector<std::string> attr_names;
};

FileLayout resolve_layout(const std::vector<std::string>& header, const DatasetOptions& options,
                          const std::string& file_name) {
    FileLayout layout;
    auto locate = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == name) return c;
        }
        return std::nullopt;
    };
    auto require = [&](const std::string& name) {
        auto col = locate(name);
        if (!col) throw IoError("file '" + file_name + "' is missing column '" + name + "'");
        return *col;
    };
    layout.time_col = require(options.time_column);
    layout.class_col = require(options.class_column);
    if (options.trj_separator_column) {
        layout.separator_col = require(*options.trj_separator_column);
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string& name = header[c];
        if (c == layout.time_col || c == layout.class_col || c == layout.separator_col) continue;
        if (options.valid_columns && !options.valid_columns->count(name)) continue;
        layout.attr_cols.push_back(c);
        layout.attr_names.push_back(name);
    }
    if (options.valid_columns) {
        for (const auto& name : *options.valid_columns) {
            if (!locate(name)) {
                throw IoError("file '" + file_name + "' is missing column '" + name + "'");
            }
        }
    }
    if (layout.attr_names.empty()) {
        throw IoError("file '" + file_name + "' has no attribute columns");
    }
    return layout;
}

struct RawRow {
    double time;
    std::vector<std::string> attr_values;
    std::string class_value;
    std::string separator_value;
};

void ingest_segment(Dataset& dataset, const std::string& id, std::vector<RawRow> rows,
                    const std::string& file_name) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RawRow& a, const RawRow& b) { return a.time < b.time; });
    for (std::size_t j = 1; j < rows.size(); ++j) {
        if (!(rows[j].time > rows[j - 1].time)) {
            throw ValidationError("file '" + file_name + "': non-increasing time within trajectory '" +
                                  id + "'");
        }
    }
    const std::string& class_value = rows.front().class_value;
    for (const auto& row : rows) {
        if (row.class_value != class_value) {
            throw ValidationError("file '" + file_name + "': class value changes within trajectory '" +
                                  id + "'");
        }
    }
    std::size_t attr_count = dataset.attribute_count();
    std::vector<double> times;
    std::vector<StateCode> states;
    times.reserve(rows.size());
    states.reserve(rows.size() * attr_count);
    auto& domains = dataset.domains();
    for (const auto& row : rows) {
        times.push_back(row.time);
        for (std::size_t a = 0; a < attr_count; ++a) {
            std::size_t node = dataset.attribute_node(a);
            std::size_t code = domains[node].intern(row.attr_values[a]);
            if (code > std::numeric_limits<StateCode>::max()) {
                throw ValidationError("too many distinct states for variable " +
                                      dataset.indexing().name_of(node));
            }
            states.push_back(static_cast<StateCode>(code));
        }
    }
    std::size_t class_node = dataset.indexing().class_index();
    StateCode label = static_cast<StateCode>(domains[class_node].intern(class_value));
    dataset.add(Trajectory(id, std::move(times), std::move(states), attr_count, label));
}

void load_file(Dataset& dataset, const fs::path& path, const DatasetOptions& options) {
    const std::string file_name = path.filename().string();
    auto lines = read_lines(path);
    if (lines.empty()) throw IoError("file '" + file_name + "' is empty");
    auto header = split(lines[0], options.separator);
    for (auto& h : header) h = std::string(trim(h));
    FileLayout layout = resolve_layout(header, options, file_name);

    // The layout must agree with the dataset indexing built from the first file.
    std::vector<std::size_t> attr_col_of(dataset.attribute_count());
    for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
        const std::string& want = dataset.indexing().name_of(dataset.attribute_node(a));
        auto it = std::find(layout.attr_names.begin(), layout.attr_names.end(), want);
        if (it == layout.attr_names.end()) {
            throw IoError("file '" + file_name + "' is missing column '" + want + "'");
        }
        attr_col_of[a] = layout.attr_cols[it - layout.attr_names.begin()];
    }

    std::vector<std::vector<RawRow>> segments;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        std::string_view raw = trim(lines[ln]);
        if (raw.empty()) continue;
        auto cells = split(lines[ln], options.separator);
        for (auto& c : cells) c = std::string(trim(c));
        if (cells.size() != header.size()) {
            throw ParseError(file_name, ln + 1, "expected " + std::to_string(header.size()) +
                                                    " columns, found " + std::to_string(cells.size()));
        }
        RawRow row;
        auto time = parse_double(cells[layout.time_col]);
        if (!time) {
            throw ParseError(file_name, ln + 1, "non-numeric time value '" + cells[layout.time_col] + "'");
        }
        row.time = *time;
        row.class_value = cells[layout.class_col];
        if (layout.separator_col) row.separator_value = cells[*layout.separator_col];
        row.attr_values.reserve(attr_col_of.size());
        for (std::size_t a = 0; a < attr_col_of.size(); ++a) {
            row.attr_values.push_back(cells[attr_col_of[a]]);
        }
        bool new_segment = segments.empty() ||
            (layout.separator_col && segments.back().back().separator_value != row.separator_value);
        if (new_segment) segments.emplace_back();
        segments.back().push_back(std::move(row));
    }
    if (segments.empty()) throw IoError("file '" + file_name + "' has no data rows");

    if (!options.trj_separator_column) {
        ingest_segment(dataset, file_name, std::move(segments[0]), file_name);
        return;
    }
    for (std::size_t k = 0; k < segments.size(); ++k) {
        ingest_segment(dataset, file_name + "#" + std::to_string(k + 1), std::move(segments[k]),
                       file_name);
    }
}

} // namespace

Dataset load_dataset(const fs::path& path, const DatasetOptions& options) {
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path)) {
            if (!entry.is_regular_file()) continue;
            if (entry.path().filename().string().ends_with(options.extension)) {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end(),
                  [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
        if (files.empty()) {
            throw IoError("no '" + options.extension + "' files found in " + path.string());
        }
    } else if (fs::is_regular_file(path)) {
        files.push_back(path);
    } else {
        throw IoError("data path does not exist: " + path.string());
    }

    // Indexing comes from the first file's header: attribute columns in header
    // order, class appended at its header position.
    auto first_lines = read_lines(files[0]);
    if (first_lines.empty()) throw IoError("file '" + files[0].filename().string() + "' is empty");
    auto header = split(first_lines[0], options.separator);
    for (auto& h : header) h = std::string(trim(h));
    FileLayout layout = resolve_layout(header, options, files[0].filename().string());

    std::vector<std::string> names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c == layout.time_col || c == layout.separator_col) continue;
        if (c == layout.class_col) {
            names.push_back(header[c]);
            continue;
        }
        if (std::find(layout.attr_names.begin(), layout.attr_names.end(), header[c]) !=
            layout.attr_names.end()) {
            names.push_back(header[c]);
        }
    }
    NodeIndexing indexing(names, options.class_column, options.time_column);
    Dataset dataset(indexing, std::vector<StateDomain>(indexing.size()));
    for (const auto& file : files) load_file(dataset, file, options);
    return dataset;
}

void save_dataset(const Dataset& dataset, const fs::path& dir, const DatasetOptions& options) {
    fs::create_directories(dir);
    const auto& indexing = dataset.indexing();
    for (const auto& trj : dataset.trajectories()) {
        std::string name = trj.id();
        if (!name.ends_with(options.extension)) name += options.extension;
        std::ofstream out(dir / name);
        if (!out) throw IoError("cannot write file: " + (dir / name).string());
        out << options.time_column;
        for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
            out << options.separator << indexing.name_of(dataset.attribute_node(a));
        }
        out << options.separator << indexing.class_name() << "\n";
        std::string label = trj.label() ? dataset.class_domain().state(*trj.label()) : "";
        for (std::size_t j = 0; j < trj.row_count(); ++j) {
            out << format_double(trj.time(j));
            for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
                out << options.separator
                    << dataset.domain(dataset.attribute_node(a)).state(trj.state(j, a));
            }
            out << options.separator << label << "\n";
        }
    }
}

PartitionSpec load_partition(const fs::path& path, const std::optional<std::string>& prefix) {
    auto lines = read_lines(path);
    PartitionSpec spec;
    std::vector<std::size_t> fold_sizes;
    bool seen_header = false;
    const std::string source = path.filename().string();
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string line(trim(lines[ln]));
        if (line.empty()) continue;
        if (line.rfind("Test", 0) == 0) {
            seen_header = true;
            fold_sizes.push_back(0);
            continue;
        }
        if (!seen_header) {
            throw ParseError(source, ln + 1, "trajectory name before the first 'Test' header");
        }
        std::string id = line;
        auto marker = line.find(": True Class:");
        if (marker != std::string::npos) id = line.substr(0, marker);
        id = std::string(trim(id));
        if (prefix && id.rfind(*prefix, 0) == 0) id = id.substr(prefix->size());
        if (id.empty()) throw ParseError(source, ln + 1, "empty trajectory name");
        auto [it, inserted] = spec.fold_of.emplace(id, fold_sizes.size() - 1);
        if (!inserted) {
            throw ValidationError("partition file '" + source + "': trajectory '" + id +
                                  "' appears more than once");
        }
        ++fold_sizes.back();
    }
    if (fold_sizes.empty()) {
        throw ParseError(source, lines.size(), "no 'Test' fold headers found");
    }
    for (std::size_t k = 0; k < fold_sizes.size(); ++k) {
        if (fold_sizes[k] == 0) {
            throw ValidationError("partition file '" + source + "': fold " + std::to_string(k + 1) +
                                  " is empty");
        }
    }
    spec.fold_count = fold_sizes.size();
    return spec;
}

Dataset cut_dataset(const Dataset& dataset, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw ArgumentError("cut fraction must be in (0, 1]");
    }
    if (fraction == 1.0 || dataset.empty()) return dataset;
    std::size_t n = dataset.size();
    std::size_t keep = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
    keep = std::max<std::size_t>(1, std::min(keep, n));
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    Rng rng(seed);
    std::shuffle(indices.begin(), indices.end(), rng);
    indices.resize(keep);
    std::sort(indices.begin(), indices.end());
    Dataset out(dataset.indexing(), dataset.domains());
    for (std::size_t i : indices) {
        const Trajectory& t = dataset.trajectory(i);
        std::size_t rows =
            static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(t.row_count())));
        out.add(t.truncated(rows));
    }
    return out;
}

Dataset scale_time(const Dataset& dataset, double factor) {
    if (!(factor > 0.0)) throw ArgumentError("time factor must be > 0");
    Dataset out = dataset;
    for (auto& t : out.trajectories()) t.scale_times(factor);
    return out;
}

Dataset permute_dataset(const Dataset& dataset, std::uint64_t seed) {
    Dataset out = dataset;
    Rng rng(seed);
    std::shuffle(out.trajectories().begin(), out.trajectories().end(), rng);
    return out;
}

} // namespace ctbnc
