#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triplane/trace.h"
#include "triplane/word.h"

namespace triplane {

// Outcome of one unlink certification attempt on a closed diagram.
struct Certification {
    enum class Status { Certified, Refuted, Unknown };

    Status status = Status::Unknown;
    int components = 0;
    // Replayable rewrite log taking the diagram to a crossingless word.
    // Present when certified and the start had crossings.
    std::vector<std::string> witness;
    std::string obstruction;  // set when refuted

    bool certified() const { return status == Status::Certified; }
};

using Certifier = std::function<Certification(const LinkWord&)>;

class TriPlaneDiagram {
public:
    TriPlaneDiagram() = default;
    TriPlaneDiagram(TrivialTangleWord t1, TrivialTangleWord t2, TrivialTangleWord t3);

    int bridges() const { return tangles_[0].bridges(); }
    const TrivialTangleWord& tangle(int i) const { return tangles_.at(i); }
    const std::array<TrivialTangleWord, 3>& tangles() const { return tangles_; }

    bool operator==(const TriPlaneDiagram&) const = default;

private:
    std::array<TrivialTangleWord, 3> tangles_;
};

// Closed diagram T_a joined to the mirror image of T_b along the bridge
// sphere: the slices of a followed by the reflection of b.
LinkWord pair_closure(const TrivialTangleWord& a, const TrivialTangleWord& b);

// Closures in the fixed order (1,2), (2,3), (3,1).
std::array<LinkWord, 3> closures(const TriPlaneDiagram& d);

struct ValidationReport {
    std::array<Certification, 3> closure_certs;

    bool valid() const {
        for (const auto& c : closure_certs)
            if (!c.certified()) return false;
        return true;
    }
    bool refuted() const {
        for (const auto& c : closure_certs)
            if (c.status == Certification::Status::Refuted) return true;
        return false;
    }
};

// A diagram is valid iff all three pair closures certify as unlinks.
ValidationReport validate_triplane(const TriPlaneDiagram& d, const Certifier& certifier);

struct SurfaceComponent {
    int bridges = 0;
    std::array<int, 3> patches{};
    int euler = 0;
    bool orientable = true;
    std::string type;  // "S2", "T2", "T2#T2", "P2", "P2#P2", ...
};

struct InvariantReport {
    int bridges = 0;
    std::array<int, 3> crossings{};
    int total_crossings = 0;
    std::array<int, 3> patches{};  // component counts of the three closures
    int euler = 0;                 // chi = c1 + c2 + c3 - b
    int normal_euler = 0;          // e = sum of the three closure writhes
    bool orientable = true;
    bool concentrated = true;  // every crossing in a single tangle
    std::vector<SurfaceComponent> components;
    std::string type_partition;  // component types, sorted, joined with '+'
};

InvariantReport invariants(const TriPlaneDiagram& d);

// One-line summary in "key=value" form, e.g.
// "b=2 c=1 chi=1 e=2 orientable=false concentrated=true".
std::string invariant_line(const InvariantReport& r);

// Boundary connected sum: the second diagram is attached to the right of the
// first, tangle by tangle, and the junction arcs are merged. Crossing counts
// add, bridge numbers add minus one, chi adds minus two.
TriPlaneDiagram connected_sum(const TriPlaneDiagram& a, const TriPlaneDiagram& b);

// Appends the same crossing to all three tangles. Preserves validity and
// every invariant except the crossing counts.
TriPlaneDiagram mutual_braid(const TriPlaneDiagram& d, int pos, int sign);

// Bridge stabilization: kind 1 appends cap(pos) to the chosen tangle and
// cap(pos+1) to the other two, kind 2 the mirror. 1 <= pos <= 2b.
TriPlaneDiagram stabilize(const TriPlaneDiagram& d, int kind, int tangle, int pos);

// A successful destabilization: the reduced diagram plus the stabilization
// template that was removed (tangle index 0 based).
struct Destabilization {
    TriPlaneDiagram diagram;
    int kind = 1;
    int tangle = 0;
    int pos = 1;
};

// Removes the three caps of the template (kind, tangle, pos) when
// commutations alone can carry each one to the bottom of its word. Performs
// no certification; used to replay logged destabilizations.
std::optional<TriPlaneDiagram> remove_stabilization(const TriPlaneDiagram& d, int kind, int tangle,
                                                    int pos);

// Inverse of stabilize. Scans for removable bottom caps, removes the best
// template candidate and accepts it only after the result re-certifies with
// unchanged chi, normal Euler number and orientability. A freshly stabilized
// diagram destabilizes back to the identical words.
std::optional<Destabilization> destabilize(const TriPlaneDiagram& d, const Certifier& certifier);

}  // namespace triplane
