#include "parcert/seq_cache.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "parcert/errors.hpp"

namespace parcert {

namespace {

template <typename T>
void put_le(std::ostream& out, T v) {
    for (unsigned i = 0; i < sizeof(T); ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(std::istream& in) {
    T v = 0;
    for (unsigned i = 0; i < sizeof(T); ++i) {
        int c = in.get();
        if (c == EOF) throw std::runtime_error("sequence cache: truncated stream");
        v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

} // namespace

void write_prefix(std::ostream& out, const SequenceSpec& spec,
                  const std::vector<BigCount>& values) {
    out.write(kSeqCacheMagic, 4);
    put_le<std::uint32_t>(out, kSeqCacheVersion);
    const std::string sel = spec.selector();
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(sel.size()));
    out.write(sel.data(), static_cast<std::streamsize>(sel.size()));
    put_le<std::uint64_t>(out, values.size());

    std::vector<unsigned char> buf;
    for (const BigCount& v : values) {
        if (sgn(v) < 0) throw InvalidSpec("sequence cache: negative value");
        const std::size_t nbytes = sgn(v) == 0 ? 0 : (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
        put_le<std::uint32_t>(out, static_cast<std::uint32_t>(nbytes));
        if (nbytes > 0) {
            buf.resize(nbytes);
            std::size_t written = 0;
            // order -1 / endian -1: least significant byte first
            mpz_export(buf.data(), &written, -1, 1, -1, 0, v.get_mpz_t());
            out.write(reinterpret_cast<const char*>(buf.data()),
                      static_cast<std::streamsize>(written));
        }
    }
    if (!out) throw std::runtime_error("sequence cache: write failed");
}

std::vector<BigCount> read_prefix(std::istream& in, const SequenceSpec& expected) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kSeqCacheMagic, 4))
        throw InvalidSpec("sequence cache: bad magic");
    const auto version = get_le<std::uint32_t>(in);
    if (version != kSeqCacheVersion)
        throw InvalidSpec("sequence cache: unsupported version " + std::to_string(version));
    const auto sel_len = get_le<std::uint32_t>(in);
    std::string sel(sel_len, '\0');
    in.read(sel.data(), sel_len);
    if (!in) throw std::runtime_error("sequence cache: truncated selector");
    if (sel != expected.selector())
        throw InvalidSpec("sequence cache: descriptor '" + sel + "' does not match requested '" +
                          expected.selector() + "'");

    const auto count = get_le<std::uint64_t>(in);
    std::vector<BigCount> values(count);
    std::vector<unsigned char> buf;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto nbytes = get_le<std::uint32_t>(in);
        if (nbytes == 0) {
            values[i] = 0;
            continue;
        }
        buf.resize(nbytes);
        in.read(reinterpret_cast<char*>(buf.data()), nbytes);
        if (!in) throw std::runtime_error("sequence cache: truncated value");
        mpz_import(values[i].get_mpz_t(), nbytes, -1, 1, -1, 0, buf.data());
    }
    return values;
}

void save_prefix_file(const std::string& path, const SequenceSpec& spec,
                      const std::vector<BigCount>& values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_prefix(out, spec, values);
}

std::vector<BigCount> load_prefix_file(const std::string& path, const SequenceSpec& expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_prefix(in, expected);
}

} // namespace parcert
