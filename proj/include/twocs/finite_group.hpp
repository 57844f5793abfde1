#pragma once

#include <string>
#include <vector>

#include "twocs/report.hpp"

namespace twocs {

// A finite group stored as its full Cayley table. Elements are 0..n-1.
//
// The constructor only validates the table shape; group axioms are checked
// separately by check_group_axioms so that broken tables can be inspected.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::string name, const std::vector<std::vector<int>>& mul,
              std::vector<std::string> labels = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  // Closure of the given permutations (images of 0..d-1) under composition.
  // Element 0 is the identity; the rest follow breadth-first order.
  static FiniteGroup from_permutations(std::string name,
                                       const std::vector<std::vector<int>>& gens);
  static FiniteGroup symmetric3();

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  // Inverse, or -1 if the table has none (only possible for invalid tables).
  int inv(int a) const { return inv_[a]; }
  // Identity, or -1 if the table has none.
  int identity() const { return identity_; }
  int pow(int a, int k) const;
  const std::string& label(int a) const { return labels_[a]; }
  int find_label(const std::string& label) const;
  std::vector<std::vector<int>> table() const;
  bool is_abelian() const;
  // Permutation images when built from permutations; empty otherwise.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

 private:
  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  int identity_ = -1;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> perms_;
};

// Exhaustive identity/inverse/Latin-square/associativity scan with witnesses.
CheckReport check_group_axioms(const FiniteGroup& g);

// Exhaustive check that phi: A -> B (index map) is a homomorphism.
CheckReport check_homomorphism(const FiniteGroup& a, const FiniteGroup& b,
                               const std::vector<int>& phi);

}  // namespace twocs
