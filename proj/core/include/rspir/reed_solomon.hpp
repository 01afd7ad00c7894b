#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rspir/galois.hpp"

namespace rspir {

// Evaluation code RS[n, dim] on a fixed vector of n distinct points. MDS with
// minimum distance n - dim + 1.
struct RsCode {
  std::uint32_t modulus = 0;
  int dim = 0;
  std::vector<FieldElement> alphas;

  int length() const { return static_cast<int>(alphas.size()); }
};

// Evaluation points default to 1..n; requires p > n so they are distinct.
RsCode make_rs_code(std::uint32_t p, int n, int dim);
RsCode make_rs_code(int dim, std::vector<FieldElement> alphas);

// Length-n word where unresponsive positions carry the absorbing erasure
// symbol, represented as an empty optional.
struct ReceivedWord {
  std::vector<std::optional<FieldElement>> symbols;

  static ReceivedWord from_values(std::vector<FieldElement> values);
  int length() const { return static_cast<int>(symbols.size()); }
  bool is_erased(int j) const { return !symbols[static_cast<std::size_t>(j)].has_value(); }
  int erasure_count() const;
};

// Evaluations of f at all code points; requires deg(f) < dim.
std::vector<FieldElement> rs_encode(const Polynomial& f, const RsCode& code);

// Error-and-erasure decoding: given at most r erasures and at most b wrong
// values among the rest, returns the unique f with deg(f) < dim whose codeword
// matches w outside those positions. Uniqueness holds because the word after
// dropping erased positions still has distance >= 2b + 1 (needs n - dim >= 2b + r).
//
// Outside the radius the call either throws DecodeFailure or returns some other
// codeword that happens to lie within distance b of w; it never returns a
// polynomial further than b from the non-erased positions.
Polynomial rs_decode_errors_erasures(const ReceivedWord& w, const RsCode& code, int b, int r);

}  // namespace rspir
