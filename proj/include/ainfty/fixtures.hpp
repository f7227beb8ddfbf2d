#pragma once
#include <memory>

#include "ainfty/retraction.hpp"

namespace af {

/* Directed path category on L0..L{n-1}: units e{i}, degree-0 path generators
 * p{i}_{j} for i < j with action j - i, mu^2 = concatenation. */
Category linear_quiver_category(std::size_t n);

/* Combinatorial disk: s stops and marked points interleaved on the boundary
 * circle, objects = arcs between marked points on distinct intervals,
 * morphisms = counterclockwise boundary paths with winding < winding_bound.
 * Slot layout: stop 0, then the interval-0 points, stop 1, ... */
struct DiskModel {
    std::size_t stop_count = 2;
    std::vector<std::size_t> points_per_interval;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;  // global point ids
    std::size_t winding_bound = 1;
};
DiskModel parse_disk_model(const std::string& text);
DiskModel load_disk_model_file(const std::string& path);
std::string disk_model_to_string(const DiskModel& m);

/* throws InvalidModel */
Category disk_with_stops_category(const DiskModel& m);

/* per-stop exact crossing counts; -1 leaves a stop unconstrained */
struct WeightConstraint {
    std::vector<int> exact;
};

/* boundary-walk path count from arcX endpoints to arcY endpoints, independent
 * of the category construction; the identified empty path counts once */
std::size_t path_count_oracle(const DiskModel& m, std::size_t arcX, std::size_t arcY,
                              const WeightConstraint& c);

struct StopRemoval {
    Category full;       // all paths, winding-truncated
    Category fine;       // zero crossings at every stop (the quotient base)
    Category reference;  // zero crossings at the kept stops only
    ObjId covering_arc = 0;
    std::size_t removed_stop = 0;
};
/* throws MissingCoveringArc */
StopRemoval stop_removal_testcase(const DiskModel& m, std::size_t removed_stop);

/* the two acceptance disk models */
DiskModel disk_model_s2();
DiskModel disk_model_s3();

/* gauge-twisted fixtures with genuine higher operations (which = 1..3) */
struct GaugeFixture {
    Category base;
    Category twisted;
    GaugeFamily g;
};
GaugeFixture gauge_fixture(int which);

/* Quotient retraction toy: quiver L0 -> P -> L1 with a one-stop weight on
 * u: L0 -> P, quotiented by {P} at word length 5, and the explicit
 * weight-dropping Delta on hom_Q(L0, L1). */
struct ToyRetraction {
    std::shared_ptr<Category> base;  // heap-held so Q.base stays valid on move
    QuotientCategory Q;
    RetractionHomotopy delta;
    std::vector<GenId> basis;  // hom_Q(L0, L1) generators
    std::size_t sigma = 0;
};
ToyRetraction toy_retraction_fixture();

} // namespace af
