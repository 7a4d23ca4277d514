#pragma once

#include <string>

#include "triplane/triplane.h"

namespace triplane {

// Parameterized reference families: the unknotted surfaces, the 1-crossing
// projective-plane sums P(n,m), and spun 2-bridge knots.
struct FamilySpec {
    enum class Kind { Sphere, Torus, ProjectivePlus, ProjectiveMinus, Projective, Spun };

    Kind kind = Kind::Sphere;
    int genus = 1;      // Torus
    int n = 0, m = 0;   // Projective
    SliceSeq plat;      // Spun: 4-strand plat word, crossings only

    // Accepts "sphere", "torus:g", "p+", "p-", "p:n,m" and
    // "spun:tok,tok,...". A trailing colon with no parameters is tolerated.
    static FamilySpec parse(const std::string& text);
};

TriPlaneDiagram generate(const FamilySpec& spec);

}  // namespace triplane
