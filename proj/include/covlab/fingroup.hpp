#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covlab/common.hpp"

namespace covlab::fingroup {

/// Element of a finite group, addressed by its row index in the table.
using Elem = int;

/// A permutation of {0..n-1}; composition (p*q)(x) = p[q[x]].
using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm identity_perm(int n);

/// A finite group given by its multiplication table. Element 0 is always the
/// identity. Instances only come out of `make_group` and are immutable.
class GroupTable {
 public:
  GroupTable() = default;

  int order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }
  static constexpr Elem identity() { return 0; }

  /// a*x*a^-1; the single convention for inner automorphisms in the project.
  Elem conj(Elem a, Elem x) const { return mul(mul(a, x), inv(a)); }
  Perm ad(Elem a) const;

  int element_order(Elem a) const;
  bool is_abelian() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend GroupTable make_group(const std::vector<std::vector<int>>& table, std::string name);
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
};

/// Validates a multiplication table and returns the group. When the identity
/// sits at some index e != 0, indices e and 0 are swapped on ingestion.
/// Throws Error{IndexOutOfRange | NoIdentity | NotInvertible | NotAssociative}
/// naming the offending element or triple.
GroupTable make_group(const std::vector<std::vector<int>>& table, std::string name = {});

struct GroupHom {
  GroupTable source;
  GroupTable target;
  std::vector<Elem> map;
};

/// Checks the homomorphism law at every pair; the witness is the first failing
/// (x, y) in row-major order. A wrong-size map or out-of-range image fails with
/// an empty witness.
Verdict check_hom(const GroupHom& h);

/// The automorphism group of g, with each automorphism realized as a
/// permutation of g's elements. perms are sorted lexicographically, so index 0
/// is the identity automorphism and group.mul(i, j) realizes perms[i]*perms[j].
struct AutGroup {
  GroupTable group;
  std::vector<Perm> perms;

  std::optional<int> index_of(const Perm& p) const;
};

AutGroup compute_aut(const GroupTable& g, const Limits& limits = {});

/// Centre as a sorted element list.
std::vector<Elem> centre(const GroupTable& g);

/// Smallest generating set found greedily in index order.
std::vector<Elem> generators(const GroupTable& g);

/// Subgroup generated by `gens`, sorted.
std::vector<Elem> closure(const GroupTable& g, const std::vector<Elem>& gens);

bool is_subgroup(const GroupTable& g, const std::vector<Elem>& subset);
bool is_normal(const GroupTable& g, const std::vector<Elem>& subset);

/// Sub-table on a subgroup given as a sorted element list containing the
/// identity; `embedding[i]` is the g-element of sub-element i.
struct Subgroup {
  GroupTable group;
  std::vector<Elem> embedding;
};
Subgroup subgroup(const GroupTable& g, const std::vector<Elem>& elements);

/// Quotient by a normal subgroup. Cosets are numbered by their least element.
struct Quotient {
  GroupTable group;
  std::vector<Elem> projection;  // g-element -> coset index
};
Quotient quotient(const GroupTable& g, const std::vector<Elem>& normal);

std::vector<Elem> kernel(const GroupHom& h);
std::vector<Elem> image(const GroupHom& h);

/// Visits every homomorphism source -> target (as an image list) in
/// lexicographic order of generator images. The callback returns false to stop.
void for_each_hom(const GroupTable& source, const GroupTable& target,
                  const std::function<bool(const std::vector<Elem>&)>& visit);

/// First isomorphism found in lexicographic generator-image order.
std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a, const GroupTable& b);

// Built-in groups. Element conventions:
//   cyclic(n): k is the class of k mod n.
//   direct_product(G, H): (g, h) -> g * |H| + h.
//   Z2xZ2: 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1).
//   S3: permutations of {0,1,2} in lexicographic order, product = composition.
//   Q8: 0=1 1=-1 2=i 3=-i 4=j 5=-j 6=k 7=-k.
GroupTable cyclic(int n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
GroupTable klein_four();
GroupTable symmetric3();
GroupTable quaternion8();
GroupTable dihedral(int n);

/// Named constructor: "Z<n>", "Z2xZ2", "Z<m>xZ<n>", "S3", "Q8", "D<n>".
std::optional<GroupTable> named_group(const std::string& name);

/// Name of the first isomorphic built-in among Z<n>, Z<a>xZ<b> (a | b), S3,
/// Q8 and D<n/2>; nullopt when none matches or the order exceeds 32.
std::optional<std::string> identify_group(const GroupTable& g);

}  // namespace covlab::fingroup
