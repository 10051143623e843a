#pragma once

// Integer partitions, Young-diagram operations and Schubert jump sequences.

#include "hilbertkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbertkit {

class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}
  /// Throws std::invalid_argument unless `parts` is weakly decreasing. Trailing zeros are dropped.
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  /// (1,...,1) with k ones.
  static Partition column(unsigned k) { return Partition(std::vector<unsigned>(k, 1)); }

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
  bool empty() const { return parts_.empty(); }
  /// 1-based part with zero padding: part(1) is the largest.
  unsigned part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }
  unsigned first() const { return part(1); }

  /// Parts padded with zeros to exactly `len` entries; throws if longer.
  std::vector<unsigned> padded(std::size_t len) const {
    if (parts_.size() > len) throw std::invalid_argument("partition longer than requested padding");
    std::vector<unsigned> v = parts_;
    v.resize(len, 0);
    return v;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

private:
  std::vector<unsigned> parts_;
};

/// Parses "[3,1]" / "[]"; whitespace ignored.
inline Partition parse_partition(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("partition must look like [3,1]: '" + text + "'");
  std::vector<unsigned> parts;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("bad partition entry in '" + text + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == body.size()) throw ParseError("trailing comma in '" + text + "'");
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<unsigned> c(p.first(), 0);
  for (unsigned part : p.parts())
    for (unsigned j = 0; j < part; ++j) ++c[j];
  return Partition(c);
}

/// True iff lambda fits inside mu (lambda_i <= mu_i for all i).
inline bool contains(const Partition& mu, const Partition& lambda) {
  if (lambda.length() > mu.length()) return false;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > mu.part(i)) return false;
  return true;
}

/// Fits in the (m+1) x (n-m) rectangle indexing Schubert cells of G(m, n).
inline bool is_admissible(const Partition& lambda, unsigned n, unsigned m) {
  if (m > n) throw std::invalid_argument("requires m <= n");
  return lambda.length() <= m + 1 && lambda.first() <= n - m;
}

/// Strictly increasing 0 <= sigma_0 < ... < sigma_m <= n.
class JumpSequence {
public:
  JumpSequence(std::vector<unsigned> sigma, unsigned n) : sigma_(std::move(sigma)), n_(n) {
    if (sigma_.empty()) throw std::invalid_argument("jump sequence needs at least one entry");
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
      if (sigma_[i] > n_) throw std::invalid_argument("jump exceeds n");
      if (i && sigma_[i] <= sigma_[i - 1]) throw std::invalid_argument("jumps must be strictly increasing");
    }
  }
  const std::vector<unsigned>& sigma() const { return sigma_; }
  unsigned operator[](std::size_t i) const { return sigma_.at(i); }
  unsigned n() const { return n_; }
  unsigned m() const { return static_cast<unsigned>(sigma_.size()) - 1; }

  /// lambda_{i+1} = n - m + i - sigma_i.
  Partition to_partition() const {
    std::vector<unsigned> parts;
    for (std::size_t i = 0; i < sigma_.size(); ++i) parts.push_back(n_ - m() + static_cast<unsigned>(i) - sigma_[i]);
    return Partition(parts);
  }

  friend bool operator==(const JumpSequence&, const JumpSequence&) = default;

private:
  std::vector<unsigned> sigma_;
  unsigned n_;
};

/// sigma_i = n - m + i - lambda_{i+1}; throws std::invalid_argument if lambda is not admissible.
inline JumpSequence jumps(const Partition& lambda, unsigned n, unsigned m) {
  if (!is_admissible(lambda, n, m)) throw std::invalid_argument("partition " + lambda.to_string() + " is not admissible");
  std::vector<unsigned> s;
  for (unsigned i = 0; i <= m; ++i) s.push_back(n - m + i - lambda.part(i + 1));
  return JumpSequence(std::move(s), n);
}

/// All partitions of `size` with parts <= max_part, length <= max_len and (optionally)
/// containing `containing`, in lexicographically descending order.
inline std::vector<Partition> enumerate_partitions(unsigned size, unsigned max_part, unsigned max_len,
                                                   const std::optional<Partition>& containing = std::nullopt) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  const Partition empty;
  const Partition& floor = containing ? *containing : empty;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      if (cur.size() >= floor.length()) out.emplace_back(cur);
      return;
    }
    if (cur.size() >= max_len) return;
    const unsigned lo = std::max(1u, floor.part(cur.size() + 1));
    for (unsigned p = std::min(cap, remaining); p >= lo; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (containing && containing->size() > size) return out;
  rec(size, max_part);
  return out;
}

/// Partitions of every size 0..max_size fitting the given box, sizes ascending.
inline std::vector<Partition> partitions_up_to(unsigned max_size, unsigned max_part, unsigned max_len) {
  std::vector<Partition> out;
  for (unsigned s = 0; s <= max_size; ++s) {
    auto level = enumerate_partitions(s, max_part, max_len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace hilbertkit
