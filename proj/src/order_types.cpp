#include "crossfam/order_types.hpp"

#include <cstdlib>
#include <fstream>

namespace crossfam {

std::size_t coord_width_for(std::size_t n) {
    if (n < 3 || n > 10) throw InputError("order-type catalogue covers 3 to 10 points, got " + std::to_string(n));
    return n <= 8 ? 1 : 2;
}

std::string db_file_name(std::size_t n) {
    const std::size_t w = coord_width_for(n);
    std::string nn = (n < 10 ? "0" : "") + std::to_string(n);
    return "otypes" + nn + (w == 1 ? ".b08" : ".b16");
}

std::optional<std::filesystem::path> locate_db(std::size_t n) {
    const char* dir = std::getenv(kOrderTypeDirEnv);
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    std::filesystem::path p = std::filesystem::path(dir) / db_file_name(n);
    std::error_code ec;
    if (!std::filesystem::is_regular_file(p, ec)) return std::nullopt;
    return p;
}

OrderTypeDb open_db(const std::filesystem::path& path, std::size_t n) {
    OrderTypeDb db;
    db.n = n;
    db.coord_width = coord_width_for(n);
    db.source = path;
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    if (ec) throw InputError("cannot open order-type file " + path.string() + ": " + ec.message());
    if (size % db.record_bytes() != 0)
        throw DataError("corrupt order-type file " + path.string() + ": size " + std::to_string(size) +
                        " is not a multiple of " + std::to_string(db.record_bytes()));
    db.record_count = static_cast<std::size_t>(size / db.record_bytes());
    return db;
}

PointSet decode_record(const std::uint8_t* bytes, std::size_t n, std::size_t coord_width, std::size_t index) {
    auto read = [&](std::size_t k) {
        Coord v = 0;
        for (std::size_t b = 0; b < coord_width; ++b) v |= static_cast<Coord>(bytes[k * coord_width + b]) << (8 * b);
        return v;
    };
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<int>(i), read(2 * i), read(2 * i + 1)});
    try {
        return PointSet(std::move(pts));
    } catch (const InputError& e) {
        throw DataError("record " + std::to_string(index) + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_record(const PointSet& ps, std::size_t coord_width) {
    const Coord limit = Coord{1} << (8 * coord_width);
    std::vector<std::uint8_t> out;
    out.reserve(ps.size() * 2 * coord_width);
    for (const Point& p : ps)
        for (Coord v : {p.x, p.y}) {
            if (v < 0 || v >= limit) throw InputError("coordinate " + std::to_string(v) + " does not fit the record width");
            for (std::size_t b = 0; b < coord_width; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
        }
    return out;
}

void iterate(const OrderTypeDb& db, const std::function<void(const OrderTypeRecord&)>& f, std::size_t begin,
             std::optional<std::size_t> end) {
    const std::size_t stop = end.value_or(db.record_count);
    if (begin > stop || stop > db.record_count) throw InputError("record range out of bounds");
    std::ifstream in(db.source, std::ios::binary);
    if (!in) throw InputError("cannot open order-type file " + db.source.string());
    const std::size_t rb = db.record_bytes();
    in.seekg(static_cast<std::streamoff>(begin * rb));
    constexpr std::size_t kChunk = 4096;
    std::vector<std::uint8_t> buf(kChunk * rb);
    for (std::size_t at = begin; at < stop;) {
        const std::size_t take = std::min(kChunk, stop - at);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(take * rb));
        if (static_cast<std::size_t>(in.gcount()) != take * rb)
            throw DataError("order-type file " + db.source.string() + " ended early at record " + std::to_string(at));
        for (std::size_t k = 0; k < take; ++k, ++at)
            f(OrderTypeRecord{at, decode_record(buf.data() + k * rb, db.n, db.coord_width, at)});
    }
}

void write_db(const std::filesystem::path& path, const std::vector<PointSet>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    std::size_t n = records.empty() ? 0 : records.front().size();
    for (const PointSet& ps : records) {
        if (ps.size() != n) throw InputError("records differ in size");
        auto bytes = encode_record(ps, coord_width_for(n));
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
}

}  // namespace crossfam
