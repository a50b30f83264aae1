#pragma once

// Bounded derived category of a type-A path algebra, modelled by complexes of
// projectives. Objects are identified with their homology decomposition.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hallalg/coeff.hpp"
#include "hallalg/fp_linalg.hpp"
#include "hallalg/quiver.hpp"

namespace hallalg {

// One summand type M[s] with multiplicity.
struct DTerm {
  int label = 0;
  int shift = 0;
  int mult = 1;

  friend bool operator==(const DTerm&, const DTerm&) = default;
};

// Finitely supported multiset of shifted indecomposables, sorted by
// shift descending, then label ascending.
class DObj {
 public:
  DObj() = default;
  static DObj single(int label, int shift = 0, int mult = 1);
  static DObj from_module(const ModClass& m, int shift = 0);

  const std::vector<DTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int summand_count() const;
  int min_shift() const;
  int max_shift() const;
  DObj shifted(int s) const;
  // The module sitting at shift s.
  ModClass at_shift(int s) const;

  friend DObj operator+(const DObj& a, const DObj& b);
  friend bool operator==(const DObj&, const DObj&) = default;
  friend std::strong_ordering operator<=>(const DObj& a, const DObj& b);

 private:
  void normalize();
  std::vector<DTerm> terms_;
};

// Cohomologically graded bounded complex of projectives; terms[i] sits in
// degree lo + i and diffs[i] maps it to degree lo + i + 1.
struct Complex {
  int lo = 0;
  std::vector<ProjSum> terms;
  std::vector<FpMatrix> diffs;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  int size_at(int k) const;
  const ProjSum& term(int k) const;
  // Differential out of degree k (zero matrix of the right shape when absent).
  FpMatrix diff(int k, int p) const;
};

Complex shift_complex(const Complex& c, int s);
Complex direct_sum(const Complex& a, const Complex& b, int p);
bool is_complex(const Quiver& q, const Complex& c, int p);

// Chain map; comp[i] is the component in degree lo + i with shape
// |target^k| x |source^k|. Degrees outside the range have zero-size components.
struct ChainMap {
  int lo = 0;
  std::vector<FpMatrix> comp;

  int hi() const { return lo + static_cast<int>(comp.size()) - 1; }
  const FpMatrix* at(int k) const;
};

ChainMap zero_map(const Complex& a, const Complex& b, int p);
ChainMap identity_map(const Complex& a, int p);
ChainMap compose(const ChainMap& g, const ChainMap& f, int p);
ChainMap add(const ChainMap& f, const ChainMap& g, int p);
ChainMap scale(const ChainMap& f, int s, int p);
ChainMap shift_map(const ChainMap& f, int s);
bool is_chain_map(const Quiver& q, const Complex& a, const Complex& b, const ChainMap& f, int p);

// Cone(f)^k = A^{k+1} + B^k with differential [[-d_A, 0], [f, d_B]].
Complex cone_complex(const Complex& a, const Complex& b, const ChainMap& f, int p);

// For h : Y -> X[1], the complex Cone(h)[-1] with terms Y^k + X^k and the
// triangle X -> Fib -> Y -> X[1] given by inclusion and projection.
struct FiberTriangle {
  Complex cx;
  ChainMap incl;  // X -> Fib
  ChainMap proj;  // Fib -> Y
};
FiberTriangle fiber_triangle(const Complex& y, const Complex& x, const ChainMap& h, int p);

// Maps out of and into a direct sum complex a + b, from their two components.
ChainMap from_sum(const Complex& a, const Complex& b, const ChainMap& fa, const ChainMap& fb, int p);
ChainMap to_sum(const Complex& a, const Complex& b, const ChainMap& ga, const ChainMap& gb, int p);

// Chain maps A -> B modulo null-homotopic maps, with a fixed complement
// of the boundaries chosen by echelon pivots.
class HomSpace {
 public:
  HomSpace(const Quiver& q, int p, const Complex& a, const Complex& b);

  int dim() const { return static_cast<int>(complement_.size()); }
  int cycle_dim() const { return cycle_dim_; }
  int boundary_dim() const { return boundary_dim_; }

  ChainMap element(const FpVector& coords) const;
  FpVector coords(const ChainMap& f) const;
  bool is_null_homotopic(const ChainMap& f) const;
  // Null-homotopic map d_B s + s d_A for a homotopy given in raw coordinates.
  ChainMap homotopy_image(const FpVector& s) const;
  int homotopy_dim() const { return homotopy_len_; }

  FpVector to_vector(const ChainMap& f) const;
  ChainMap from_vector(const FpVector& v) const;

 private:
  struct Slot {
    int degree;
    int rows;
    int cols;
    std::vector<std::pair<int, int>> entries;  // allowed (row, col)
    std::vector<int> index;                    // row * cols + col -> position, or -1
    int offset;
  };
  int p_;
  int lo_ = 0;
  std::vector<Slot> slots_;
  int length_ = 0;
  int cycle_dim_ = 0;
  int boundary_dim_ = 0;
  int homotopy_len_ = 0;
  FpMatrix homotopy_matrix_;  // length_ x homotopy_len_
  std::vector<FpVector> complement_;
  SpanSolver solver_;
};

struct Carrier {
  struct Block {
    int label;
    int shift;
    int deg1, off1, len1;  // presentation term P1 in degree deg1 = -shift-1
    int deg0, off0, len0;  // presentation term P0 in degree deg0 = -shift
  };
  DObj obj;
  Complex cx;
  std::vector<Block> blocks;  // one per copy of each summand, canonical order
};

struct HomotopyEquivalence {
  DObj obj;
  ChainMap to_carrier;    // complex -> carrier(obj)
  ChainMap from_carrier;  // carrier(obj) -> complex
};

struct IsoPartDecomposition {
  DObj l, z;  // n : L -> Z[1]
  DObj l1, l2, z1, z2;
  ChainMap b;  // automorphism of L
  ChainMap d;  // automorphism of Z
  ChainMap split;  // d[1] n b, block diagonal up to homotopy
  std::vector<int> l_blocks;  // carrier blocks of L forming L1, paired with
  std::vector<int> z_blocks;  // carrier blocks of Z[1] forming Z1[1]
};

struct TriangleOrbit {
  ChainMap f;  // Z -> M
  ChainMap g;  // M -> L
  ChainMap h;  // L -> Z[1]
  std::int64_t orbit_size = 0;
  std::int64_t f_orbit_size = 0;
  IsoPartDecomposition iso;
};

class DerivedCategory {
 public:
  explicit DerivedCategory(std::shared_ptr<const Catalog> cat, int window = 4, std::int64_t cap = kDefaultCap);

  const Catalog& catalog() const { return *cat_; }
  std::shared_ptr<const Catalog> catalog_ptr() const { return cat_; }
  const Quiver& quiver() const { return cat_->quiver(); }
  int p() const { return cat_->p(); }
  int window() const { return window_; }
  std::int64_t cap() const { return cap_; }

  std::string to_string(const DObj& x) const;
  DObj parse(std::string_view text) const;
  void check_window(const DObj& x, int slack = 0) const;
  int total_dim(const DObj& x) const;

  const Carrier& carrier(const DObj& x) const;
  const HomSpace& hom(const DObj& x, const DObj& y) const;

  int graded_hom_dim(const DObj& x, const DObj& y, int i) const;
  int hom_dim(const DObj& x, const DObj& y) const { return graded_hom_dim(x, y, 0); }
  int braces_exponent(const DObj& x, const DObj& y) const;
  Rational braces(const DObj& x, const DObj& y) const;

  DObj homology_class(const Complex& c) const;
  bool is_acyclic(const Complex& c) const;
  DObj cone(const DObj& x, const DObj& y, const ChainMap& f) const;

  void for_each_class(const DObj& x, const DObj& y,
                      const std::function<void(const FpVector&, const ChainMap&)>& fn) const;
  std::vector<ChainMap> dhom_classes(const DObj& x, const DObj& y) const;
  std::map<DObj, std::int64_t> cone_strata(const DObj& x, const DObj& y) const;
  std::int64_t hom_with_cone_count(const DObj& x, const DObj& y, const DObj& c) const;

  std::int64_t daut_order(const DObj& x) const;
  // Unit count over End(X) using the scalar parts of the diagonal blocks.
  std::int64_t daut_order_counted(const DObj& x) const;
  // Counts endomorphisms whose cone is acyclic.
  std::int64_t daut_order_bruteforce(const DObj& x, std::int64_t cap) const;
  std::int64_t end_order(const DObj& x) const;
  bool is_automorphism(const DObj& x, const ChainMap& f) const;
  std::vector<ChainMap> automorphisms(const DObj& x) const;

  // Scalar c with f ~ c * id, for f an endomorphism of a single indecomposable M[s].
  int scalar(int label, int shift, const ChainMap& f) const;

  HomotopyEquivalence minimal_model(const Complex& c) const;

  // Component of f : carrier(X) -> carrier(Y) from block i of X to block j of Y,
  // as a map between the carriers of the two single summands.
  ChainMap block(const Carrier& x, int i, const Carrier& y, int j, const ChainMap& f) const;
  // Inverse of `block`: places a map between single carriers at position (j, i).
  ChainMap embed(const Carrier& x, int i, const Carrier& y, int j, const ChainMap& g) const;

  IsoPartDecomposition iso_part(const DObj& l, const DObj& z, const ChainMap& n) const;

  std::vector<TriangleOrbit> triangle_orbits(const DObj& z, const DObj& l, const DObj& m) const;

  // All objects with summands M[s], s in [min_shift, max_shift], at most
  // max_summands summands counted with multiplicity; includes zero.
  std::vector<DObj> corpus(int min_shift, int max_shift, int max_summands) const;

 private:
  std::shared_ptr<const Catalog> cat_;
  int window_;
  std::int64_t cap_;
  mutable std::map<DObj, std::unique_ptr<Carrier>> carriers_;
  mutable std::map<std::pair<DObj, DObj>, std::unique_ptr<HomSpace>> homs_;
};

}  // namespace hallalg
