#ifndef PARCERT_SEQ_CACHE_HPP
#define PARCERT_SEQ_CACHE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "parcert/bigcount.hpp"
#include "parcert/sequences.hpp"

namespace parcert {

// Versioned binary layout for serialized sequence prefixes:
//   magic "PCSQ" | u32 version | u32 selector length | selector bytes |
//   u64 value count | per value: u32 byte length + magnitude bytes,
// all integers and magnitudes little-endian (least significant byte first).

inline constexpr char kSeqCacheMagic[4] = {'P', 'C', 'S', 'Q'};
inline constexpr unsigned kSeqCacheVersion = 1;

void write_prefix(std::ostream& out, const SequenceSpec& spec,
                  const std::vector<BigCount>& values);

// Validates magic, version and that the stored selector matches `expected`;
// throws InvalidSpec on mismatch and std::runtime_error on truncation.
std::vector<BigCount> read_prefix(std::istream& in, const SequenceSpec& expected);

void save_prefix_file(const std::string& path, const SequenceSpec& spec,
                      const std::vector<BigCount>& values);
std::vector<BigCount> load_prefix_file(const std::string& path, const SequenceSpec& expected);

} // namespace parcert

#endif
