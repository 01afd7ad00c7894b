#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "rspir/protocol_params.hpp"
#include "rspir/reed_solomon.hpp"

namespace rspir {

// One plaintext file: an L x k matrix over GF(p). Row l is the coefficient
// vector of the stripe polynomial f_l(z), degree < k.
struct FileMatrix {
  int rows = 0;
  int cols = 0;
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> data;  // row-major residues

  static FileMatrix zero(std::uint32_t p, int rows, int cols);

  FieldElement at(int row, int col) const;
  void set(int row, int col, FieldElement v);
  Polynomial row_polynomial(int row) const;

  bool operator==(const FileMatrix&) const = default;
};

FileMatrix random_file(std::mt19937_64& rng, std::uint32_t p, int rows, int cols);
std::vector<FileMatrix> random_files(std::mt19937_64& rng, std::uint32_t p, int count, int rows,
                                     int cols);

// The n encoded server columns plus the plaintext they were built from. Column
// j holds f^m_l(alpha_j) laid out file-major, row-minor, matching the query
// vector layout. Immutable after construction.
struct StorageSystem {
  SchemeParams params;
  RsCode code;  // dim = k
  std::vector<FileMatrix> files;
  std::vector<std::vector<FieldElement>> columns;  // [n][L*M]

  int column_entry_index(int file, int row) const { return file * params.L + row; }
};

// Encodes every stripe of every file with the storage code. Checks that the
// files are params.M matrices of shape params.L x params.k over the code's field.
StorageSystem encode_system(const std::vector<FileMatrix>& files, const RsCode& code,
                            const SchemeParams& params);

// Line-oriented plaintext format (see README): a "modulus p" line, then one
// "file" marker per matrix followed by its rows as whitespace-separated
// residues in [0, p).
struct FileSet {
  std::uint32_t modulus = 0;
  std::vector<FileMatrix> files;
};

FileSet read_files_text(std::istream& in);
FileSet read_files_file(const std::string& path);
void write_files_text(std::ostream& out, const FileSet& set);
void write_files_file(const std::string& path, const FileSet& set);

}  // namespace rspir
