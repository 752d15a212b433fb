#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schur/pgroup.hpp"

namespace schur {

inline constexpr std::uint32_t kNoClass = 0xffffffffu;

// A partition of a subgroup (usually the whole group) into basic sets.
// Classes are stored canonically: elements ascending inside a class, and
// classes ordered by their minimum element, so the class of the identity is
// always class 0.
class Partition {
 public:
  // Classes must partition the whole group. Throws InvalidPartition.
  Partition(GroupPtr group, std::vector<ElementSet> classes);

  // Classes partition their union, which must be a subgroup.
  static Partition over_subgroup(GroupPtr group, std::vector<ElementSet> classes);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ElementSet& support() const { return support_; }
  std::size_t size() const { return classes_.size(); }
  const ElementSet& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ElementSet>& classes() const { return classes_; }
  // kNoClass outside the support.
  std::uint32_t class_of(Elem x) const { return class_of_[x]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.group_->spec() == b.group_->spec() && a.classes_ == b.classes_;
  }

 private:
  Partition(GroupPtr group, std::vector<ElementSet> classes, bool whole_group);

  GroupPtr group_;
  ElementSet support_;
  std::vector<ElementSet> classes_;
  std::vector<std::uint32_t> class_of_;
};

// Sparse rank^3 tensor of nonnegative integers, stored row-wise per (i, j).
class StructureConstants {
 public:
  struct Term {
    std::uint32_t k;
    std::uint32_t value;
    friend bool operator==(const Term&, const Term&) = default;
  };

  StructureConstants() = default;
  explicit StructureConstants(std::size_t rank);

  std::size_t rank() const { return rank_; }
  // Rows must be appended in (i, j) lexicographic order with k ascending.
  void append_row(std::vector<Term> terms);
  bool complete() const { return offsets_.size() == rank_ * rank_ + 1; }

  std::span<const Term> row(std::size_t i, std::size_t j) const;
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t nonzeros() const { return terms_.size(); }

  // Swaps the first two indices: result(i, j, k) = this(j, i, k).
  StructureConstants transposed() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Term> terms_;
};

class SRing {
 public:
  const Partition& partition() const { return partition_; }
  const Group& group() const { return partition_.group(); }
  const GroupPtr& group_ptr() const { return partition_.group_ptr(); }
  std::size_t rank() const { return partition_.size(); }
  const ElementSet& cls(std::size_t i) const { return partition_[i]; }
  std::uint32_t class_of(Elem x) const { return partition_.class_of(x); }
  const ElementSet& support() const { return partition_.support(); }
  const StructureConstants& constants() const { return constants_; }
  std::uint32_t inverse_class(std::size_t i) const { return inverse_[i]; }

 private:
  friend SRing validate_sring(Partition part);
  SRing(Partition p, StructureConstants c, std::vector<std::uint32_t> inv)
      : partition_(std::move(p)), constants_(std::move(c)), inverse_(std::move(inv)) {}

  Partition partition_;
  StructureConstants constants_;
  std::vector<std::uint32_t> inverse_;
};

// Checks, in order: the identity class is {e}; every class's inverse set is a
// class; every class product is constant on classes. Throws
// IdentityNotSingleton, NotInverseClosed or NotClosedUnderProduct naming the
// first violation.
SRing validate_sring(Partition part);

bool is_p_sring(const SRing& sr);
bool is_commutative(const SRing& sr);

// Elements whose singleton is a basic set.
ElementSet thin_radical(const SRing& sr);
// Subgroup generated by all T^{-1}T.
ElementSet thin_residue(const SRing& sr);
// {h : Th = T}.
ElementSet right_stabilizer(const SRing& sr, std::size_t class_index);
// {h : hT = T}.
ElementSet left_stabilizer(const SRing& sr, std::size_t class_index);

bool is_a_subgroup(const SRing& sr, const ElementSet& s);
// All A-subgroups, ordered by size then lexicographically.
std::vector<ElementSet> a_subgroups(const SRing& sr);
// A chain {e} = K_0 < K_1 < ... < K_m = support with every index p, if any.
std::optional<std::vector<ElementSet>> a_subgroup_chain(const SRing& sr);

// The S-ring over an A-subgroup E formed by the classes inside E.
// Throws NotAnASubgroup.
SRing restriction(const SRing& sr, const ElementSet& subgroup);

// Index of the class Tm. Throws NotAThinElement if {m} is not a class.
std::size_t translate_class(const SRing& sr, std::size_t class_index, Elem m);

// A group automorphism stored as a full image table.
class GroupAutomorphism {
 public:
  // Extends generator images through normal forms (c is sent to the
  // commutator of the images in H2) and verifies the result on every pair.
  // Throws NotAnAutomorphism with a witness pair.
  static GroupAutomorphism from_generator_images(const Group& g, Elem image_a, Elem image_b);
  // Verifies an arbitrary image table.
  static GroupAutomorphism from_images(const Group& g, std::vector<Elem> images);

  Elem operator()(Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const { return images_; }

 private:
  explicit GroupAutomorphism(std::vector<Elem> images) : images_(std::move(images)) {}
  std::vector<Elem> images_;
};

// Orbits of <auts> on the group, validated as an S-ring.
SRing transitivity_module(GroupPtr group, const std::vector<GroupAutomorphism>& auts);

struct SuitabilityConditionsAB {
  bool holds_A = false;
  bool holds_B = false;
  ElementSet residue;                     // thin residue O_r
  std::vector<std::size_t> outside;       // classes not contained in O_r
  std::vector<ElementSet> stabilizers;    // distinct St_R(T) over `outside`
  bool stabilizers_avoid_center = false;  // no St_R(T) equals Z(H)
  // Classes inside O_r are singletons and the others are the p-element
  // families {T z^j} for the central generator z.
  bool shifted_block_structure = false;
};

SuitabilityConditionsAB check_conditions_AB(const SRing& sr);

// Text format: group header line, '#' comments, one class per line with
// comma-separated elements. Throws ParseError / InvalidPartition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& part);

}  // namespace schur
