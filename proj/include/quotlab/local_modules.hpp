#pragma once

// Finite modules over the truncated ring F_q[t]/(t^N).
//
// The ambient module at level N and rank r is M_N = (F_q[t]/(t^N))^r with
// F_q-coordinates ordered e_1*1, e_1*t, ..., e_1*t^(N-1), e_2*1, ...  A
// Submodule is a t-invariant subspace stored by its reduced row echelon
// basis, which makes equality and ordering plain comparisons.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quotlab/errors.hpp"
#include "quotlab/field.hpp"
#include "quotlab/fp_linalg.hpp"

namespace quotlab {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw AlgebraError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty())
      for (int i = 1; i <= parts_.front(); ++i)
        c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; })));
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Number of parts: the dimension of the socle {b : t b = 0} of a module of
/// this type.
inline int socle_parts(const Partition& p) { return static_cast<int>(p.length()); }

struct ModuleShape {
  int level;  // N
  int rank;   // r
  std::uint32_t q;

  int dim() const { return level * rank; }
  std::size_t coord(int generator, int power) const { return static_cast<std::size_t>(generator * level + power); }
  auto operator<=>(const ModuleShape&) const = default;
};

class Submodule {
 public:
  Submodule(ModuleShape shape, FpRows rows) : shape_(shape) {
    const PrimeField f(shape.q);
    for (const auto& row : rows)
      if (row.size() != static_cast<std::size_t>(shape.dim())) throw AlgebraError("submodule row has wrong length");
    basis_ = rref(std::move(rows), f);
  }

  static Submodule whole(ModuleShape shape) {
    FpRows rows;
    for (int k = 0; k < shape.dim(); ++k) {
      FpVector v(static_cast<std::size_t>(shape.dim()), 0);
      v[static_cast<std::size_t>(k)] = 1;
      rows.push_back(std::move(v));
    }
    return Submodule(shape, std::move(rows));
  }

  const ModuleShape& shape() const { return shape_; }
  const FpRows& basis() const { return basis_; }
  int level() const { return shape_.level; }
  int rank() const { return shape_.rank; }
  std::uint32_t q() const { return shape_.q; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int colength() const { return shape_.dim() - dim(); }
  PrimeField field() const { return PrimeField(shape_.q); }

  bool contains(const Submodule& other) const {
    if (other.shape_ != shape_) throw AlgebraError("contains: submodules of different ambient modules");
    if (other.dim() > dim()) return false;
    FpRows joined = basis_;
    joined.insert(joined.end(), other.basis_.begin(), other.basis_.end());
    return rank_of(joined, field()) == basis_.size();
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i) os << ",";
      for (auto x : basis_[i]) os << x;
    }
    os << "]";
    return os.str();
  }

  auto operator<=>(const Submodule&) const = default;

 private:
  ModuleShape shape_;
  FpRows basis_;
};

/// t * v in the coordinates of M_N.
inline FpVector t_times(const FpVector& v, const ModuleShape& s) {
  FpVector out(v.size(), 0);
  for (int g = 0; g < s.rank; ++g)
    for (int j = 0; j + 1 < s.level; ++j) out[s.coord(g, j + 1)] = v[s.coord(g, j)];
  return out;
}

/// t * A.
inline Submodule t_image(const Submodule& a) {
  FpRows rows;
  for (const auto& v : a.basis()) rows.push_back(t_times(v, a.shape()));
  return Submodule(a.shape(), std::move(rows));
}

inline bool is_t_invariant(const Submodule& a) { return a.contains(t_image(a)); }

/// t^k * M_N.
inline Submodule power_of_maximal_ideal(ModuleShape s, int k) {
  FpRows rows;
  for (int g = 0; g < s.rank; ++g)
    for (int j = k; j < s.level; ++j) {
      FpVector v(static_cast<std::size_t>(s.dim()), 0);
      v[s.coord(g, j)] = 1;
      rows.push_back(std::move(v));
    }
  return Submodule(s, std::move(rows));
}

inline int span_dim(const Submodule& a, const Submodule& b) {
  FpRows joined = a.basis();
  joined.insert(joined.end(), b.basis().begin(), b.basis().end());
  return static_cast<int>(rank_of(joined, a.field()));
}

/// Isomorphism type of M_N / A.  With B = M_N / A, m_i = dim t^i B / t^(i+1) B
/// counts the parts larger than i, so (m_0, m_1, ...) is the conjugate.
inline Partition quotient_type(const Submodule& a) {
  std::vector<int> m;
  int prev = span_dim(power_of_maximal_ideal(a.shape(), 0), a);
  for (int i = 0; i < a.level(); ++i) {
    int next = span_dim(power_of_maximal_ideal(a.shape(), i + 1), a);
    if (prev - next > 0) m.push_back(prev - next);
    prev = next;
  }
  return Partition(m).conjugate();
}

/// Full preimage of A under the reduction M_{N'} -> M_N.
inline Submodule lift_preimage(const Submodule& a, int to_level, int max_dim = 24) {
  const ModuleShape& s = a.shape();
  if (to_level < s.level) throw AlgebraError("lift_preimage: target level below source level");
  ModuleShape t{to_level, s.rank, s.q};
  if (t.dim() > max_dim) throw GuardError("lift_preimage: ambient dimension exceeds the guard");
  FpRows rows;
  for (const auto& v : a.basis()) {
    FpVector w(static_cast<std::size_t>(t.dim()), 0);
    for (int g = 0; g < s.rank; ++g)
      for (int j = 0; j < s.level; ++j) w[t.coord(g, j)] = v[s.coord(g, j)];
    rows.push_back(std::move(w));
  }
  for (int g = 0; g < s.rank; ++g)
    for (int j = s.level; j < to_level; ++j) {
      FpVector w(static_cast<std::size_t>(t.dim()), 0);
      w[t.coord(g, j)] = 1;
      rows.push_back(std::move(w));
    }
  return Submodule(t, std::move(rows));
}

/// Codimension-one subspaces H with t*A <= H <= A.  These are exactly the
/// t-invariant subspaces of A of codimension one.
inline std::vector<Submodule> hyperplanes_over_t_image(const Submodule& a) {
  const PrimeField f = a.field();
  const Submodule w = t_image(a);
  // complete a basis of t*A to one of A
  FpRows current = w.basis();
  FpRows complement;
  for (const auto& v : a.basis()) {
    FpRows trial = current;
    trial.push_back(v);
    if (rank_of(trial, f) > current.size()) {
      current = rref(std::move(trial), f);
      complement.push_back(v);
    }
  }
  const std::size_t s = complement.size();
  std::vector<Submodule> out;
  if (s == 0) return out;
  // functionals phi on span(complement), normalized so the first nonzero entry is 1
  std::vector<std::uint32_t> phi(s, 0);
  auto emit = [&](std::size_t lead) {
    FpRows rows = w.basis();
    for (std::size_t k = 0; k < s; ++k) {
      if (k == lead) continue;
      FpVector v = complement[k];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.sub(v[c], f.mul(phi[k], complement[lead][c]));
      rows.push_back(std::move(v));
    }
    out.emplace_back(a.shape(), std::move(rows));
  };
  for (std::size_t lead = 0; lead < s; ++lead) {
    // phi = (0, ..., 0, 1, *, ..., *)
    std::fill(phi.begin(), phi.end(), 0);
    phi[lead] = 1;
    const std::size_t tail = s - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < tail; ++k) count *= a.q();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t k = lead + 1; k < s; ++k) {
        phi[k] = static_cast<std::uint32_t>(c % a.q());
        c /= a.q();
      }
      emit(lead);
    }
  }
  return out;
}

struct EnumerationGuard {
  int max_ambient_dim = 12;
  std::vector<std::uint32_t> allowed_q{2, 3, 5};
};

/// All t-invariant subspaces of M_level of the given colength, sorted.
/// Built colength by colength: every such subspace is a t-invariant
/// hyperplane of one of colength one less.
inline std::vector<Submodule> enumerate_submodules(int level, int rank, std::uint32_t q, int colength,
                                                   const EnumerationGuard& guard = {}) {
  if (!PrimeField::is_prime(q)) throw AlgebraError("enumerate_submodules: q must be prime, got " + std::to_string(q));
  if (std::find(guard.allowed_q.begin(), guard.allowed_q.end(), q) == guard.allowed_q.end())
    throw GuardError("enumerate_submodules: q=" + std::to_string(q) + " is outside the enumeration guard");
  if (level < 0 || rank < 1) throw AlgebraError("enumerate_submodules: need level >= 0 and rank >= 1");
  ModuleShape shape{level, rank, q};
  if (shape.dim() > guard.max_ambient_dim)
    throw GuardError("enumerate_submodules: ambient dimension " + std::to_string(shape.dim()) + " exceeds " +
                     std::to_string(guard.max_ambient_dim));
  if (colength < 0 || colength > shape.dim()) return {};
  std::set<Submodule> layer{Submodule::whole(shape)};
  for (int c = 0; c < colength; ++c) {
    std::set<Submodule> next;
    for (const auto& a : layer)
      for (auto& h : hyperplanes_over_t_image(a)) next.insert(std::move(h));
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

/// Points of the punctual Quot scheme F_n over F_q.
inline std::vector<Submodule> quot_points(int n, int r, std::uint32_t q, const EnumerationGuard& guard = {}) {
  return enumerate_submodules(n, r, q, n, guard);
}

/// t * lift(A) for A of colength n-1 at level n-1, landing at level n+1 (r = 2).
inline Submodule m_embed(const Submodule& a) {
  if (a.rank() != 2) throw AlgebraError("m_embed: defined for rank 2 only");
  if (a.colength() != a.level()) throw AlgebraError("m_embed: expects a point of F_{n-1} (colength = level)");
  return t_image(lift_preimage(a, a.level() + 2));
}

/// (A_n, A_{n+1}) with A_{n+1} contained in the lift of A_n.
struct IncidencePair {
  Submodule lower;  // A_n at level n
  Submodule upper;  // A_{n+1} at level n+1
  auto operator<=>(const IncidencePair&) const = default;
};

inline std::vector<IncidencePair> incidence_pairs(int n, int r, std::uint32_t q, const EnumerationGuard& guard = {}) {
  if (n < 0) throw AlgebraError("incidence_pairs: n must be non-negative");
  auto lower = quot_points(n, r, q, guard);
  auto upper = quot_points(n + 1, r, q, guard);
  std::vector<IncidencePair> out;
  for (const auto& a : lower) {
    const Submodule lifted = lift_preimage(a, n + 1);
    for (const auto& b : upper)
      if (lifted.contains(b)) out.push_back({a, b});
  }
  return out;
}

/// Number of pairs over each A_n and over each A_{n+1}.
struct FiberCounts {
  std::map<Submodule, int> over_lower;
  std::map<Submodule, int> over_upper;
};

inline FiberCounts fiber_counts(const std::vector<IncidencePair>& pairs) {
  FiberCounts fc;
  for (const auto& p : pairs) {
    ++fc.over_lower[p.lower];
    ++fc.over_upper[p.upper];
  }
  return fc;
}

/// #P^(k-1)(F_q) = (q^k - 1)/(q - 1).
inline long projective_count(std::uint32_t q, int k) {
  long total = 0, pw = 1;
  for (int i = 0; i < k; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

}  // namespace quotlab
