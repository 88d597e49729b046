#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include <cereal/archives/binary.hpp>
#include <cereal/types/common.hpp>
#include <cereal/types/memory.hpp>
#include <cereal/types/unordered_map.hpp>
#include <cereal/types/utility.hpp>
#include <cereal/types/vector.hpp>

#include "pathoracle/errors.hpp"

namespace pathoracle {

// Oracle file layout: 8-byte magic, u32 format version, u8 kind tag, then a
// cereal binary archive of the oracle object.
inline constexpr std::array<char, 8> kOracleMagic = {'P', 'O', 'R', 'A', 'C', 'L', 'E', '\0'};
inline constexpr std::uint32_t kOracleFormatVersion = 1;

enum class OracleKind : std::uint8_t {
  kDppro = 1,
  kBasic = 2,
  kMultilevel = 3,
  kTilde = 4,
  kComposed = 5,
};

template <class Oracle>
void save_oracle(std::ostream& out, OracleKind kind, const Oracle& oracle) {
  out.write(kOracleMagic.data(), kOracleMagic.size());
  const std::uint32_t version = kOracleFormatVersion;
  out.write(reinterpret_cast<const char*>(&version), sizeof(version));
  const auto tag = static_cast<std::uint8_t>(kind);
  out.write(reinterpret_cast<const char*>(&tag), sizeof(tag));
  cereal::BinaryOutputArchive archive(out);
  archive(oracle);
  if (!out) throw FormatError("failed to write oracle");
}

// Reads the header only; the stream is left at the start of the archive.
inline OracleKind read_oracle_header(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kOracleMagic) throw FormatError("not an oracle file (bad magic)");
  std::uint32_t version = 0;
  in.read(reinterpret_cast<char*>(&version), sizeof(version));
  if (!in || version != kOracleFormatVersion) {
    throw FormatError("unsupported oracle format version " + std::to_string(version));
  }
  std::uint8_t tag = 0;
  in.read(reinterpret_cast<char*>(&tag), sizeof(tag));
  if (!in || tag < 1 || tag > 5) throw FormatError("unknown oracle kind tag");
  return static_cast<OracleKind>(tag);
}

template <class Oracle>
Oracle load_oracle_body(std::istream& in) {
  Oracle oracle;
  try {
    cereal::BinaryInputArchive archive(in);
    archive(oracle);
  } catch (const cereal::Exception& e) {
    throw FormatError(std::string("corrupt oracle file: ") + e.what());
  }
  return oracle;
}

}  // namespace pathoracle
