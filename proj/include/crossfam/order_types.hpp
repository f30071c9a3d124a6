#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "crossfam/geometry.hpp"

namespace crossfam {

// Malformed or corrupt database content.
struct DataError : InputError {
    using InputError::InputError;
};

// Environment variable naming the directory that holds the catalogue files.
inline constexpr const char* kOrderTypeDirEnv = "ORDER_TYPE_DB_DIR";

// 1 byte per coordinate up to 8 points, 2 bytes for 9 and 10.
std::size_t coord_width_for(std::size_t n);
// otypesNN.b08 or otypesNN.b16.
std::string db_file_name(std::size_t n);
// File for n under $ORDER_TYPE_DB_DIR when the variable is set and the file exists.
std::optional<std::filesystem::path> locate_db(std::size_t n);

struct OrderTypeDb {
    std::size_t n = 0;
    std::size_t coord_width = 0;
    std::size_t record_count = 0;
    std::filesystem::path source;

    std::size_t record_bytes() const { return n * 2 * coord_width; }
};

// Validates that the file size is a whole number of records.
OrderTypeDb open_db(const std::filesystem::path& path, std::size_t n);

struct OrderTypeRecord {
    std::size_t index = 0;
    PointSet points;  // ids 0..n-1 in file order
};

// Decodes one record; throws DataError naming the index on a general-position violation.
PointSet decode_record(const std::uint8_t* bytes, std::size_t n, std::size_t coord_width, std::size_t index);
std::vector<std::uint8_t> encode_record(const PointSet& ps, std::size_t coord_width);

// Records [begin, end) in file order; end defaults to record_count.
void iterate(const OrderTypeDb& db, const std::function<void(const OrderTypeRecord&)>& f, std::size_t begin = 0,
             std::optional<std::size_t> end = std::nullopt);

// Writes records in catalogue format; every point set must have the same size.
void write_db(const std::filesystem::path& path, const std::vector<PointSet>& records);

}  // namespace crossfam
