#pragma once

// Representations of acyclic quivers over F_p and the interval catalog for type A.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hallalg/coeff.hpp"
#include "hallalg/fp_linalg.hpp"

namespace hallalg {

inline constexpr std::int64_t kDefaultCap = std::int64_t{1} << 20;

using DimVector = std::vector<int>;

class Quiver {
 public:
  Quiver(int n, std::vector<std::pair<int, int>> arrows, std::string name = "");

  // orientation: n-1 characters, 'r' for i -> i+1 and 'l' for i+1 -> i; empty means all 'r'.
  static Quiver type_a(int n, std::string_view orientation = "");
  // "A2", "A3", "A3:rl"
  static Quiver parse(std::string_view text);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  const std::string& name() const { return name_; }
  bool is_type_a() const { return type_a_; }
  // True when there is a directed path (possibly of length zero) from `from` to `to`.
  bool reaches(int from, int to) const { return reach_[static_cast<std::size_t>(from) * n_ + to] != 0; }
  // Arrow indices along the unique path from `from` to `to`; requires reaches(from, to).
  const std::vector<int>& path(int from, int to) const { return paths_[static_cast<std::size_t>(from) * n_ + to]; }

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> arrows_;
  std::string name_;
  bool type_a_ = false;
  std::vector<char> reach_;
  std::vector<std::vector<int>> paths_;
};

struct Rep {
  int p = 2;
  DimVector dims;
  std::vector<FpMatrix> maps;  // one per arrow, dims[target] x dims[source]

  int total_dim() const;
};

struct RepMorphism {
  std::vector<FpMatrix> at;  // one per vertex, dims_N[v] x dims_M[v]
};

Rep zero_rep(const Quiver& q, int p);
Rep direct_sum(const Rep& a, const Rep& b);
void validate_rep(const Quiver& q, const Rep& m);
// Composite of the arrow maps along the unique path.
FpMatrix path_map(const Quiver& q, const Rep& m, int from, int to);

std::vector<RepMorphism> hom_space(const Quiver& q, const Rep& m, const Rep& n);
int hom_dim(const Quiver& q, const Rep& m, const Rep& n);
bool is_morphism(const Quiver& q, const Rep& m, const Rep& n, const RepMorphism& f);
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
int ext1_dim(const Quiver& q, const Rep& m, const Rep& n);

// Subrepresentation and quotient by vertex-wise subspaces closed under the arrows.
bool is_closed(const Quiver& q, const Rep& m, const std::vector<Subspace>& u);
Rep sub_rep(const Quiver& q, const Rep& m, const std::vector<Subspace>& u);
Rep quotient_rep(const Quiver& q, const Rep& m, const std::vector<Subspace>& u);

// A direct sum of indecomposable projectives, listed by vertex. A map
// between two such sums is a scalar matrix whose (j, i) entry may be
// nonzero only when the target vertex w_j reaches the source vertex v_i.
using ProjSum = std::vector<int>;

// Indices of summands whose projective is nonzero at vertex u.
std::vector<int> support_at(const Quiver& q, const ProjSum& s, int u);
Rep projective_rep(const Quiver& q, int p, const ProjSum& s);
bool respects_mask(const Quiver& q, const ProjSum& source, const ProjSum& target, const FpMatrix& m);
// The map at vertex u of a masked matrix.
FpMatrix at_vertex(const Quiver& q, const ProjSum& source, const ProjSum& target, const FpMatrix& m, int u);

struct Presentation {
  ProjSum p0;
  ProjSum p1;
  FpMatrix d;  // |p0| x |p1|, injective
};

// Minimal projective presentation 0 -> P1 -> P0 -> M -> 0 built from tops.
Presentation projective_presentation(const Quiver& q, const Rep& m);
// Dimension of coker(Hom(P0, N) -> Hom(P1, N)) for the presentation of M.
int ext1_dim_presentation(const Quiver& q, const Rep& m, const Rep& n);

// Iso class as a multiset of catalog labels with multiplicities, sorted by label.
struct ModClass {
  std::vector<std::pair<int, int>> parts;

  static ModClass single(int label, int mult = 1) { return ModClass{{{label, mult}}}; }
  bool is_zero() const { return parts.empty(); }
  int summand_count() const;
  int multiplicity(int label) const;
  friend ModClass operator+(const ModClass& a, const ModClass& b);
  friend bool operator==(const ModClass&, const ModClass&) = default;
  friend auto operator<=>(const ModClass&, const ModClass&) = default;
};

struct Interval {
  int lo = 0;  // 0-based, inclusive
  int hi = 0;
};

// Indecomposables of a type-A quiver: interval modules, in the order
// (lo ascending, hi descending).
class Catalog {
 public:
  Catalog(Quiver q, int p);

  const Quiver& quiver() const { return q_; }
  int p() const { return p_; }
  int size() const { return static_cast<int>(intervals_.size()); }

  const Interval& interval(int label) const { return intervals_.at(label); }
  const Rep& rep(int label) const { return reps_.at(label); }
  const Presentation& presentation(int label) const { return presentations_.at(label); }
  const DimVector& dim_vector(int label) const { return reps_.at(label).dims; }
  int hom(int a, int b) const { return hom_[static_cast<std::size_t>(a) * size() + b]; }
  int ext(int a, int b) const { return ext_[static_cast<std::size_t>(a) * size() + b]; }
  bool is_projective(int label) const { return presentations_.at(label).p1.empty(); }

  std::string label_name(int label) const;
  std::optional<int> find_label(int lo, int hi) const;

  DimVector dim_vector(const ModClass& m) const;
  int total_dim(const ModClass& m) const;
  Rep realize(const ModClass& m) const;
  ModClass classify(const Rep& m) const;
  std::vector<int> fingerprint(const Rep& m) const;

  std::string to_string(const ModClass& m) const;
  ModClass parse(std::string_view text) const;

  std::vector<ModClass> classes_with_dim(const DimVector& d) const;
  std::vector<ModClass> classes_up_to(int total_dim) const;

 private:
  Quiver q_;
  int p_;
  std::vector<Interval> intervals_;
  std::vector<Rep> reps_;
  std::vector<Presentation> presentations_;
  std::vector<int> hom_;
  std::vector<int> ext_;
  std::vector<Rational> hom_inverse_;  // inverse of the hom table
};

// Counts coefficient vectors c in F_p^k with every block of sum_i c_i B_i
// invertible. basis[i][b] is the b-th square block of the i-th element.
std::int64_t count_units(int p, const std::vector<std::vector<FpMatrix>>& basis, std::int64_t cap);

std::int64_t gl_order(int p, int m);
std::int64_t aut_order(const Catalog& cat, const ModClass& m);
std::int64_t aut_order_bruteforce(const Catalog& cat, const ModClass& m, std::int64_t cap = kDefaultCap);

// Indecomposables found by exhaustive search over all representations with dims <= dim_cap.
std::vector<Rep> indecomposables_bruteforce(const Quiver& q, int p, const DimVector& dim_cap,
                                            std::int64_t cap = kDefaultCap);
bool is_indecomposable_bruteforce(const Quiver& q, const Rep& m, std::int64_t cap = kDefaultCap);
bool isomorphic_bruteforce(const Quiver& q, const Rep& m, const Rep& n, std::int64_t cap = kDefaultCap);

// Ext^1(quot, sub) = coker(Hom(P0, sub) -> Hom(P1, sub)) for the presentation of quot.
class ExtSpace {
 public:
  ExtSpace(const Catalog& cat, const ModClass& sub, const ModClass& quot);

  int dim() const { return static_cast<int>(complement_.size()); }
  // Element of Hom(P1, sub) for the given cokernel coordinates.
  FpVector representative(const FpVector& coords) const;
  // Middle term of the extension 0 -> sub -> E -> quot -> 0 with class `coords`.
  ModClass middle(const FpVector& coords) const;

 private:
  const Catalog& cat_;
  Rep sub_;
  Presentation pres_;
  int ambient_ = 0;
  std::vector<FpVector> complement_;
};

ModClass middle_of_extension(const Catalog& cat, const ModClass& sub, const ModClass& quot, const FpVector& coords);

// Vertex-wise subspaces U of L closed under the arrows with U ~ X and L/U ~ Y.
std::int64_t hall_number(const Catalog& cat, const ModClass& l, const ModClass& x, const ModClass& y,
                         std::int64_t cap = kDefaultCap);
// |{monomorphisms X -> L with cokernel Y}| / |Aut X|.
Rational hall_number_via_monos(const Catalog& cat, const ModClass& l, const ModClass& x, const ModClass& y,
                               std::int64_t cap = kDefaultCap);

}  // namespace hallalg
