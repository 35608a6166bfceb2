#include "ccp/grad/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace ccp::grad {

namespace {

constexpr char kMagic[8] = {'C', 'C', 'P', 'C', 'K', 'P', 'T', '1'};

template <typename T>
void write_raw(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("checkpoint: truncated file");
    return v;
}

}  // namespace

void save_checkpoint(const std::string& path, const ParameterSet& params) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("checkpoint: cannot open " + path + " for writing");
    os.write(kMagic, sizeof(kMagic));
    write_raw<std::uint32_t>(os, static_cast<std::uint32_t>(params.size()));
    for (const auto& name : params.names()) {
        const Matrix& m = params.at(name);
        write_raw<std::uint32_t>(os, static_cast<std::uint32_t>(name.size()));
        os.write(name.data(), static_cast<std::streamsize>(name.size()));
        write_raw<std::uint64_t>(os, static_cast<std::uint64_t>(m.rows()));
        write_raw<std::uint64_t>(os, static_cast<std::uint64_t>(m.cols()));
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                write_raw<double>(os, m(i, j));
            }
        }
    }
    if (!os) throw std::runtime_error("checkpoint: write failed for " + path);
}

ParameterSet load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("checkpoint: cannot open " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw std::runtime_error("checkpoint: bad magic in " + path);
    }
    const auto count = read_raw<std::uint32_t>(is);
    ParameterSet out;
    for (std::uint32_t r = 0; r < count; ++r) {
        const auto name_len = read_raw<std::uint32_t>(is);
        std::string name(name_len, '\0');
        is.read(name.data(), name_len);
        if (!is) throw std::runtime_error("checkpoint: truncated name");
        const auto rows = read_raw<std::uint64_t>(is);
        const auto cols = read_raw<std::uint64_t>(is);
        Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (std::uint64_t i = 0; i < rows; ++i) {
            for (std::uint64_t j = 0; j < cols; ++j) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    read_raw<double>(is);
            }
        }
        out.add(name, std::move(m));
    }
    return out;
}

}  // namespace ccp::grad
