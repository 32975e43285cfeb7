#pragma once

#include <map>
#include <string>
#include <vector>

#include "grcob/gaf.hpp"

namespace grcob {

/// Morphism of Gr from source() to target(), stored as a representative.
/// Equality of representatives is canonical-form equality (isomorphism over
/// fixed endpoints), not homotopy-class equality.
struct GrMorphism {
  MarkedGaf rep;

  const std::vector<std::string>& source() const { return rep.source; }
  const std::vector<std::string>& target() const { return rep.gaf.attach; }
};

GrMorphism identity(const std::vector<std::string>& a);

/// Pushout composition: glues h's attach points onto g's marked vertices.
/// g: B -> A, h: C -> B; the result is C -> A. Inner and half-edge labels are
/// prefixed "L."/"R." when the label sets collide (always, if force_prefix).
GrMorphism compose(const GrMorphism& g, const GrMorphism& h,
                   bool force_prefix = false);

/// Disjoint union; labels prefixed "L."/"R." on collision (or always).
GrMorphism tensor(const GrMorphism& g, const GrMorphism& h,
                  bool force_prefix = false);

/// Operation (1): the morphism of a plain map of finite sets f: B -> A.
GrMorphism op1(const std::vector<std::string>& b,
               const std::vector<std::string>& a,
               const std::map<std::string, std::string>& f);

/// Operation (2): adjoin a fresh free vertex; A u {fresh} -> A.
GrMorphism op2(const std::vector<std::string>& a);

/// Operation (3): glue an interval between a1 and a2 (a1 == a2 allowed).
GrMorphism op3(const std::vector<std::string>& a, const std::string& a1,
               const std::string& a2);

/// Sound (not complete) invariants distinguishing morphisms: per component
/// the sorted attach labels, the relative H1 rank, and the sorted marks.
struct HomotopyInvariants {
  struct Component {
    std::vector<std::string> attach;
    long h1_rank = 0;
    std::vector<std::string> marks;
    auto operator<=>(const Component&) const = default;
  };
  std::vector<Component> components;
  bool operator==(const HomotopyInvariants&) const = default;
};

HomotopyInvariants homotopy_invariants(const GrMorphism& g);

}  // namespace grcob
