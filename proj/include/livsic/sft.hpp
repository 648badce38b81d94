#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "livsic/error.hpp"
#include "livsic/word.hpp"

namespace livsic {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// ---- boundary identification tables -----------------------------------------

/// f-matching: adjacent pair (first, second) whose images decompose as
/// decomposition[0..split) and decomposition[split..n).
struct MatchingInstance {
  std::string id;
  Side side = Side::u;
  Segment first, second;
  std::vector<Segment> decomposition;
  std::size_t split = 1;

  friend bool operator==(const MatchingInstance&, const MatchingInstance&) = default;
};

/// One segment adjacent to `base` decomposed in two ways.
struct BoundaryInstance {
  std::string id;
  Side side = Side::u;
  Segment base;
  std::vector<Segment> first, second;

  friend bool operator==(const BoundaryInstance&, const BoundaryInstance&) = default;
};

/// A cylinder with its adjacent gap, identified with `segments` in a
/// neighbouring rectangle; the last segment is the image of the gap.
struct CylinderGapInstance {
  std::string id;
  Side side = Side::s;
  Segment cylinder, gap;
  std::vector<Segment> segments;

  friend bool operator==(const CylinderGapInstance&, const CylinderGapInstance&) = default;
};

/// Two cylinders on `leaf` identified with `decomposition` on `other_leaf`:
/// `first` covers decomposition[0..split), `second` the rest.
struct CylinderCylinderInstance {
  std::string id;
  Side side = Side::s;
  Word leaf, first, second;
  Word other_leaf;
  std::vector<Word> decomposition;
  std::size_t split = 1;

  friend bool operator==(const CylinderCylinderInstance&, const CylinderCylinderInstance&) = default;
};

struct BoundaryData {
  std::vector<MatchingInstance> matching;
  std::vector<BoundaryInstance> boundary;
  std::vector<CylinderGapInstance> cylinder_gap;
  std::vector<CylinderCylinderInstance> cylinder_cylinder;

  [[nodiscard]] bool empty() const {
    return matching.empty() && boundary.empty() && cylinder_gap.empty() && cylinder_cylinder.empty();
  }

  friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
};

// ---- the subshift -----------------------------------------------------------

/// Two-sided subshift of finite type over {0..k-1}. Built only through
/// build_sft, which guarantees a primitive 0/1 matrix and admissible
/// boundary words.
struct SftSystem {
  std::size_t k = 0;
  IntMatrix matrix;
  std::size_t primitivity_exponent = 0;
  std::optional<BoundaryData> boundary;

  [[nodiscard]] bool allowed(int a, int b) const {
    return matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
  }

  [[nodiscard]] bool admissible(const Symbols& w) const {
    for (int s : w)
      if (s < 0 || static_cast<std::size_t>(s) >= k) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (!allowed(w[i], w[i + 1])) return false;
    return true;
  }
  [[nodiscard]] bool admissible(const Word& w) const { return admissible(w.symbols); }

  [[nodiscard]] bool admissible(const Segment& x) const {
    return admissible(x.word) && (!x.right || admissible(*x.right));
  }

  /// Symbols that may be appended at the deep end of `w` (all symbols at the root).
  [[nodiscard]] std::vector<int> extensions(const Word& w) const {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(k); ++b) {
      if (w.is_root()) out.push_back(b);
      else if (w.side == Side::u ? allowed(w.deepest(), b) : allowed(b, w.deepest())) out.push_back(b);
    }
    return out;
  }

  friend bool operator==(const SftSystem&, const SftSystem&) = default;
};

/// Same alphabet and transition matrix, boundary tables ignored.
inline bool same_shift(const SftSystem& a, const SftSystem& b) { return a.k == b.k && a.matrix == b.matrix; }

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline IntMatrix matrix_power(const IntMatrix& a, std::size_t p) {
  IntMatrix r(a.size(), std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i][i] = 1;
  for (std::size_t i = 0; i < p; ++i) r = multiply(r, a);
  return r;
}

inline std::int64_t trace(const IntMatrix& a) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

namespace detail {

inline void check_boundary_words(const SftSystem& sys, const BoundaryData& data) {
  auto need = [&](bool ok, const std::string& id) {
    if (!ok) throw Error(Errc::inadmissible_boundary_word, "instance " + id);
  };
  for (const auto& m : data.matching) {
    need(sys.admissible(m.first) && sys.admissible(m.second), m.id);
    for (const auto& x : m.decomposition) need(sys.admissible(x), m.id);
  }
  for (const auto& b : data.boundary) {
    need(sys.admissible(b.base), b.id);
    for (const auto& x : b.first) need(sys.admissible(x), b.id);
    for (const auto& x : b.second) need(sys.admissible(x), b.id);
  }
  for (const auto& c : data.cylinder_gap) {
    need(sys.admissible(c.cylinder) && sys.admissible(c.gap), c.id);
    for (const auto& x : c.segments) need(sys.admissible(x), c.id);
  }
  for (const auto& c : data.cylinder_cylinder) {
    need(sys.admissible(c.leaf) && sys.admissible(c.other_leaf), c.id);
    need(sys.admissible(c.first) && sys.admissible(c.second), c.id);
    for (const auto& x : c.decomposition) need(sys.admissible(x), c.id);
  }
}

}  // namespace detail

/// Validates the matrix, finds the primitivity exponent and cross-checks the
/// boundary tables.
inline SftSystem build_sft(std::size_t k, const IntMatrix& matrix,
                           std::optional<BoundaryData> boundary = std::nullopt) {
  if (k == 0 || matrix.size() != k) throw Error(Errc::parse_error, "matrix must be k x k with k >= 1");
  for (const auto& row : matrix) {
    if (row.size() != k) throw Error(Errc::parse_error, "matrix must be k x k");
    for (auto v : row)
      if (v != 0 && v != 1) throw Error(Errc::parse_error, "matrix entries must be 0 or 1");
  }
  // Wielandt: a primitive k x k matrix has A^n > 0 for some n <= (k-1)^2 + 1.
  const std::size_t bound = (k - 1) * (k - 1) + 1;
  IntMatrix power = matrix;
  std::size_t exponent = 0;
  for (std::size_t n = 1; n <= bound; ++n) {
    bool positive = true;
    for (const auto& row : power)
      for (auto v : row) positive = positive && v > 0;
    if (positive) {
      exponent = n;
      break;
    }
    power = multiply(power, matrix);
    for (auto& row : power)
      for (auto& v : row) v = v > 0 ? 1 : 0;
  }
  if (exponent == 0) throw Error(Errc::not_primitive, "no power of the matrix is entrywise positive");

  SftSystem sys{k, matrix, exponent, std::move(boundary)};
  if (sys.boundary) detail::check_boundary_words(sys, *sys.boundary);
  return sys;
}

/// All admissible n-words on the given side, lexicographic in time order.
inline std::vector<Word> enumerate_cylinders(const SftSystem& sys, std::size_t n, Side side) {
  std::vector<Word> out;
  if (n == 0) return out;
  Symbols current;
  auto extend = [&](auto&& self) -> void {
    if (current.size() == n) {
      out.push_back(Word{side, current});
      return;
    }
    for (int b = 0; b < static_cast<int>(sys.k); ++b) {
      if (!current.empty() && !sys.allowed(current.back(), b)) continue;
      current.push_back(b);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

// ---- periodic orbits --------------------------------------------------------

struct PeriodicOrbit {
  Symbols word;  ///< least rotation of a primitive cyclic word
  std::size_t period = 0;

  /// The p cyclic shifts of the representative.
  [[nodiscard]] std::vector<Symbols> rotations() const {
    std::vector<Symbols> out;
    for (std::size_t i = 0; i < period; ++i) {
      Symbols r(word.begin() + static_cast<std::ptrdiff_t>(i), word.end());
      r.insert(r.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(r));
    }
    return out;
  }

  friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

inline std::size_t least_period(const Symbols& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
    if (repeats) return d;
  }
  return n;
}

inline bool is_least_rotation(const Symbols& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int a = w[(i + j) % n];
      if (a < w[j]) return false;
      if (a > w[j]) break;
    }
  }
  return true;
}

/// One representative (least rotation) per cyclic class of least period <= p_max.
inline std::vector<PeriodicOrbit> periodic_orbits(const SftSystem& sys, std::size_t p_max) {
  std::vector<PeriodicOrbit> out;
  for (std::size_t p = 1; p <= p_max; ++p) {
    for (const auto& w : enumerate_cylinders(sys, p, Side::u)) {
      if (!sys.allowed(w.symbols.back(), w.symbols.front())) continue;
      if (least_period(w.symbols) != p || !is_least_rotation(w.symbols)) continue;
      out.push_back(PeriodicOrbit{w.symbols, p});
    }
  }
  return out;
}

}  // namespace livsic
