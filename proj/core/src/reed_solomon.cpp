#include "rspir/reed_solomon.hpp"

#include <stdexcept>
#include <string>

#include "rspir/errors.hpp"

namespace rspir {

RsCode make_rs_code(std::uint32_t p, int n, int dim) {
  check_prime_modulus(p);
  if (n < 1 || static_cast<std::uint64_t>(n) >= p) {
    throw std::invalid_argument("code length must satisfy 1 <= n < p");
  }
  std::vector<FieldElement> alphas;
  alphas.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) alphas.emplace_back(static_cast<std::uint64_t>(j), p);
  return make_rs_code(dim, std::move(alphas));
}

RsCode make_rs_code(int dim, std::vector<FieldElement> alphas) {
  if (alphas.empty()) throw std::invalid_argument("code needs at least one evaluation point");
  const std::uint32_t p = alphas[0].modulus;
  for (const auto& a : alphas) {
    if (a.modulus != p) throw std::invalid_argument("evaluation points from different fields");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      if (alphas[i] == alphas[j]) throw std::invalid_argument("evaluation points must be distinct");
    }
  }
  if (dim < 1 || dim > static_cast<int>(alphas.size())) {
    throw std::invalid_argument("code dimension must satisfy 1 <= dim <= n");
  }
  RsCode code;
  code.modulus = p;
  code.dim = dim;
  code.alphas = std::move(alphas);
  return code;
}

ReceivedWord ReceivedWord::from_values(std::vector<FieldElement> values) {
  ReceivedWord w;
  w.symbols.reserve(values.size());
  for (auto& v : values) w.symbols.emplace_back(v);
  return w;
}

int ReceivedWord::erasure_count() const {
  int c = 0;
  for (const auto& s : symbols) {
    if (!s.has_value()) ++c;
  }
  return c;
}

std::vector<FieldElement> rs_encode(const Polynomial& f, const RsCode& code) {
  if (f.modulus() != code.modulus) throw std::invalid_argument("message from another field");
  if (!f.degree_below(code.dim)) {
    throw std::invalid_argument("message degree too high for RS[n," + std::to_string(code.dim) + "]");
  }
  std::vector<FieldElement> out;
  out.reserve(code.alphas.size());
  for (const auto& a : code.alphas) out.push_back(f.eval(a));
  return out;
}

namespace {

// One nonzero vector of the nullspace of the rows x cols system, or empty if
// the matrix has full column rank. Gauss-Jordan over GF(p).
std::vector<std::uint32_t> nullspace_vector(std::vector<std::vector<std::uint32_t>> m,
                                            int cols, std::uint32_t p) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pr)]);
    auto& prow = m[static_cast<std::size_t>(row)];
    const std::uint64_t inv = FieldElement{prow[static_cast<std::size_t>(col)], p}.inv().value;
    for (int j = col; j < cols; ++j) {
      prow[static_cast<std::size_t>(j)] =
          static_cast<std::uint32_t>(prow[static_cast<std::size_t>(j)] * inv % p);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      auto& irow = m[static_cast<std::size_t>(i)];
      const std::uint64_t f = irow[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        const std::uint64_t sub = f * prow[static_cast<std::size_t>(j)] % p;
        irow[static_cast<std::size_t>(j)] =
            static_cast<std::uint32_t>((irow[static_cast<std::size_t>(j)] + p - sub) % p);
      }
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  // Free column = any column without a pivot.
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return {};

  std::vector<std::uint32_t> x(static_cast<std::size_t>(cols), 0);
  x[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
    const std::uint32_t v = m[i][static_cast<std::size_t>(free_col)];
    x[static_cast<std::size_t>(pivot_col_of_row[i])] = v == 0 ? 0 : p - v;
  }
  return x;
}

}  // namespace

Polynomial rs_decode_errors_erasures(const ReceivedWord& w, const RsCode& code, int b, int r) {
  const int n = code.length();
  const int dim = code.dim;
  const std::uint32_t p = code.modulus;
  if (w.length() != n) throw std::invalid_argument("received word length does not match code");
  if (b < 0 || r < 0) throw std::invalid_argument("negative error/erasure budget");
  if (n - dim < 2 * b + r) {
    throw std::invalid_argument("code distance too small: need n - dim >= 2b + r");
  }
  const int erasures = w.erasure_count();
  if (erasures > r) {
    throw std::invalid_argument("received word has " + std::to_string(erasures) +
                                " erasures, budget is " + std::to_string(r));
  }

  std::vector<int> survivors;
  survivors.reserve(static_cast<std::size_t>(n - erasures));
  for (int j = 0; j < n; ++j) {
    if (!w.is_erased(j)) {
      if (w.symbols[static_cast<std::size_t>(j)]->modulus != p) {
        throw std::invalid_argument("received symbol from another field");
      }
      survivors.push_back(j);
    }
  }

  // Berlekamp-Welch on the punctured word: find Q with deg < dim + b and a
  // locator E with deg <= b such that Q(a_j) = w_j E(a_j) on every survivor.
  // Any nonzero solution satisfies Q = f E when at most b survivors are wrong.
  const int q_len = dim + b;
  const int e_len = b + 1;
  const int cols = q_len + e_len;
  std::vector<std::vector<std::uint32_t>> m(survivors.size(),
                                            std::vector<std::uint32_t>(static_cast<std::size_t>(cols)));
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const int j = survivors[i];
    const std::uint64_t a = code.alphas[static_cast<std::size_t>(j)].value;
    const std::uint64_t wv = w.symbols[static_cast<std::size_t>(j)]->value;
    std::uint64_t pw = 1;
    for (int c = 0; c < q_len; ++c) {
      m[i][static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(pw);
      pw = pw * a % p;
    }
    pw = 1;
    for (int c = 0; c < e_len; ++c) {
      m[i][static_cast<std::size_t>(q_len + c)] = static_cast<std::uint32_t>((p - wv * pw % p) % p);
      pw = pw * a % p;
    }
  }

  const auto x = nullspace_vector(std::move(m), cols, p);
  if (x.empty()) throw DecodeFailure("no codeword within the decoding radius");

  const Polynomial numer = Polynomial::from_coefficients(
      p, std::vector<std::uint32_t>(x.begin(), x.begin() + q_len));
  const Polynomial locator = Polynomial::from_coefficients(
      p, std::vector<std::uint32_t>(x.begin() + q_len, x.end()));
  if (locator.is_zero()) throw DecodeFailure("degenerate locator");

  const auto [f, rem] = divmod(numer, locator);
  if (!rem.is_zero() || !f.degree_below(dim)) {
    throw DecodeFailure("no codeword within the decoding radius");
  }

  int disagreements = 0;
  for (int j : survivors) {
    if (f.eval(code.alphas[static_cast<std::size_t>(j)]) != *w.symbols[static_cast<std::size_t>(j)]) {
      ++disagreements;
    }
  }
  if (disagreements > b) throw DecodeFailure("no codeword within the decoding radius");
  return f;
}

}  // namespace rspir
