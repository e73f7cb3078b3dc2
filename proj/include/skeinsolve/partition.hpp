#pragma once

// Young-diagram combinatorics in the English convention: row 1 on top,
// cells indexed (row, col) from 1.

#include <algorithm>
#include <charconv>
#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "laurent.hpp"
#include "rational.hpp"

namespace skein {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

  /// Parses "p1,p2,...". The empty string and "0" denote ∅.
  static Partition parse(std::string_view text) {
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view field = text.substr(pos, end - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw InvalidPartition("cannot parse partition '" + std::string(text) + "'");
      }
      parts.push_back(v);
      pos = end + 1;
    }
    return Partition(std::move(parts));
  }

  /// "6,4,2"; the empty partition renders as "".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }
  /// Like to_string() but ∅ for the empty partition.
  std::string display() const { return parts_.empty() ? "∅" : to_string(); }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }
  /// λ_row with 1-based row; 0 beyond the last part.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }
  bool contains(int row, int col) const { return col >= 1 && col <= part(row); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Graded order: by size, then reverse lexicographic, so (4) < (3,1) < (2,2).
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    return y.parts_ <=> x.parts_;
  }

 private:
  void validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw InvalidPartition("partition parts must be nonincreasing");
      }
    }
  }

  std::vector<int> parts_;
};

struct Cell {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
  int content = 0;
  int hook = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

inline Cell cell(const Partition& lambda, int row, int col) {
  if (!lambda.contains(row, col)) {
    throw CellNotInPartition("cell (" + std::to_string(row) + "," + std::to_string(col) +
                             ") is not in (" + lambda.to_string() + ")");
  }
  Cell c;
  c.row = row;
  c.col = col;
  c.arm = lambda.part(row) - col;
  c.coarm = col - 1;
  c.coleg = row - 1;
  for (int i = row + 1; lambda.part(i) >= col; ++i) ++c.leg;
  c.content = c.coarm - c.coleg;
  c.hook = c.arm + c.leg + 1;
  return c;
}

/// All cells, row by row.
inline std::vector<Cell> cells(const Partition& lambda) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.part(r); ++c) out.push_back(cell(lambda, r, c));
  }
  return out;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse lexicographic order: (n), (n−1,1), …, (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_rec(n, n, prefix, out);
  return out;
}

/// Every partition of size 0..n, in graded order.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate_partitions(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// c_λ(q) = Σ_□ q^{c(□)}.
inline LaurentPolynomial content_polynomial(const Partition& lambda) {
  LaurentPolynomial r;
  for (const Cell& c : cells(lambda)) r += LaurentPolynomial::q(c.content);
  return r;
}

/// h_□(q) = Σ over the hook of □ of q^{c(■) − c(□)}; contents are taken
/// relative to the corner cell so that h_□(q) = q^{−leg}[h(□)]_q.
inline LaurentPolynomial q_hooklength(const Partition& lambda, int row, int col) {
  const Cell corner = cell(lambda, row, col);
  LaurentPolynomial r = 1;
  for (int j = col + 1; j <= lambda.part(row); ++j) {
    r += LaurentPolynomial::q((j - 1) - (row - 1) - corner.content);
  }
  for (int i = row + 1; lambda.part(i) >= col; ++i) {
    r += LaurentPolynomial::q((col - 1) - (i - 1) - corner.content);
  }
  return r;
}

inline LaurentPolynomial q_hooklength(const Partition& lambda, const Cell& c) {
  return q_hooklength(lambda, c.row, c.col);
}

/// h_λ(q) = Π_□ h_□(q).
inline LaurentPolynomial hook_polynomial(const Partition& lambda) {
  LaurentPolynomial r = 1;
  for (const Cell& c : cells(lambda)) r *= q_hooklength(lambda, c);
  return r;
}

/// The same polynomial as q^{−Σ(i−1)λ_i} Π_□ [h(□)]_q.
inline LaurentPolynomial hook_polynomial_power_form(const Partition& lambda) {
  int n = 0;
  for (int i = 1; i <= lambda.length(); ++i) n += (i - 1) * lambda.part(i);
  LaurentPolynomial r = LaurentPolynomial::q(-n);
  for (const Cell& c : cells(lambda)) r *= q_integer(c.hook);
  return r;
}

/// A partition together with the box that separates it from the partition
/// it was derived from. The cell is always described as a cell of the larger
/// partition.
struct BoxMove {
  Partition partition;
  Cell box;
};

/// All μ = λ + □, top row first.
inline std::vector<BoxMove> addable(const Partition& lambda) {
  std::vector<BoxMove> out;
  for (int r = 1; r <= lambda.length() + 1; ++r) {
    if (r == 1 || lambda.part(r) < lambda.part(r - 1)) {
      std::vector<int> parts = lambda.parts();
      if (r > lambda.length()) {
        parts.push_back(1);
      } else {
        ++parts[static_cast<std::size_t>(r - 1)];
      }
      Partition mu(std::move(parts));
      Cell b = cell(mu, r, mu.part(r));
      out.push_back({std::move(mu), b});
    }
  }
  return out;
}

/// All λ with λ + □ = μ, top row first.
inline std::vector<BoxMove> removable(const Partition& mu) {
  if (mu.empty()) throw EmptyPartition("the empty partition has no removable box");
  std::vector<BoxMove> out;
  for (int r = 1; r <= mu.length(); ++r) {
    if (mu.part(r) > mu.part(r + 1)) {
      Cell b = cell(mu, r, mu.part(r));
      std::vector<int> parts = mu.parts();
      if (--parts[static_cast<std::size_t>(r - 1)] == 0) parts.pop_back();
      out.push_back({Partition(std::move(parts)), b});
    }
  }
  return out;
}

/// Σ_□ (c(□) + h(□) + 1); always even.
inline long parity_sum(const Partition& lambda) {
  long total = 0;
  for (const Cell& c : cells(lambda)) total += c.content + c.hook + 1;
  return total;
}

/// Checks c_μ(q)/h_μ(q) = Σ_{λ+□=μ} 1/h_λ(q) exactly.
inline bool verify_branching(const Partition& mu) {
  if (mu.empty()) throw EmptyPartition("branching rule needs |μ| >= 1");
  RationalFunction lhs(content_polynomial(mu), hook_polynomial(mu));
  RationalFunction rhs;
  for (const BoxMove& m : removable(mu)) rhs += RationalFunction(1, hook_polynomial(m.partition));
  return rf_equal(lhs, rhs);
}

}  // namespace skein
