#include <cmath>

#include <gtest/gtest.h>

#include "gaugewheel/compare.hpp"
#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"
#include "gaugewheel/field_lines.hpp"
#include "gaugewheel/finite_difference.hpp"
#include "gaugewheel/parallel.hpp"
#include "gaugewheel/scenario.hpp"

namespace gaugewheel {
namespace {

const StepPolicy kPolicy{1e-5, FdScheme::central4, 1e-12, 1.0};

TEST(FdGradient, SimpleFields) {
    const FieldPoint p{2.0, 0.7, 0.3, 0.0};
    const CylVec gr = fd_gradient([](const FieldPoint& q) { return q.r; }, p, kPolicy);
    EXPECT_NEAR(gr.r, 1.0, 1e-10);
    EXPECT_NEAR(gr.phi, 0.0, 1e-10);
    EXPECT_NEAR(gr.z, 0.0, 1e-10);
    const CylVec gp = fd_gradient([](const FieldPoint& q) { return q.phi; }, p, kPolicy);
    EXPECT_NEAR(gp.phi, 0.5, 1e-10);
    EXPECT_NEAR(gp.r, 0.0, 1e-10);
}

TEST(FdGradient, MatchesAnalyticPhaseGradient) {
    const GaugeModel m = preset("fig3").model();
    const StepPolicy policy = StepPolicy::for_beam(m.beam());
    const FieldPoint p{0.9 * m.beam().waist, 0.2, 0.15 * m.beam().waist, 0.0};
    const CylVec fd = fd_gradient([&](const FieldPoint& q) { return m.ferris_phase(q); }, p, policy);
    const CylVec an = m.grad_ferris_phase(p);
    EXPECT_LE(norm(fd - an) / norm(an), 1e-8);
}

TEST(FdGradient, AxisError) {
    EXPECT_THROW((void)fd_gradient([](const FieldPoint& q) { return q.r; }, {1e-6, 0, 0, 0}, kPolicy), AxisError);
}

TEST(FdCurl, SimpleFields) {
    const FieldPoint p{1.5, 0.4, -0.2, 0.0};
    const CylVec c0 = fd_curl([](const FieldPoint&) { return CylVec{0, 0, 3.0}; }, p, kPolicy);
    EXPECT_NEAR(norm(c0), 0.0, 1e-12);
    const CylVec c1 = fd_curl([](const FieldPoint& q) { return CylVec{0, q.r, 0}; }, p, kPolicy);
    EXPECT_NEAR(c1.r, 0.0, 1e-10);
    EXPECT_NEAR(c1.phi, 0.0, 1e-10);
    EXPECT_NEAR(c1.z, 2.0, 1e-10);
}

TEST(FdDivergence, SimpleFields) {
    const FieldPoint p{1.5, 0.4, -0.2, 0.0};
    EXPECT_NEAR(fd_divergence([](const FieldPoint& q) { return CylVec{0, std::sin(q.r), 0}; }, p, kPolicy), 0.0,
                1e-12);
    EXPECT_NEAR(fd_divergence([](const FieldPoint& q) { return CylVec{q.r, 0, 0}; }, p, kPolicy), 2.0, 1e-10);
}

TEST(FdTimeDerivative, Sinusoid) {
    const double w = 3e7;
    const StepPolicy policy{1e-5, FdScheme::central4, 1e-12, 1.0};
    const FieldPoint p{1.0, 0.0, 0.0, 2e-8};
    const double d = fd_time_derivative([&](const FieldPoint& q) { return 2.0 * std::sin(w * q.t); }, p, policy);
    EXPECT_NEAR(d / w, 2.0 * std::cos(w * p.t), 1e-8);
    const GaugeModel m = preset("fig1").model();
    const CylVec a = fd_time_derivative([&](const FieldPoint& q) { return m.vector_potential(q); },
                                        {4e-6, 0.3, 0.0, 1e-9}, policy);
    EXPECT_EQ(norm(a), 0.0);
}

TEST(FdSchemes, ConvergenceOrders) {
    // d/dr of sin(r) at r = 1 with relative steps h0.
    auto err = [](FdScheme scheme, double h0) {
        const StepPolicy policy{h0, scheme, 1e-12, 1.0};
        const CylVec g = fd_gradient([](const FieldPoint& q) { return std::sin(q.r); }, {1.0, 0, 0, 0}, policy);
        return std::abs(g.r - std::cos(1.0));
    };
    const double o2 = std::log2(err(FdScheme::central2, 1e-2) / err(FdScheme::central2, 5e-3));
    const double o4 = std::log2(err(FdScheme::central4, 4e-2) / err(FdScheme::central4, 2e-2));
    const double o6 = std::log2(err(FdScheme::richardson, 1e-1) / err(FdScheme::richardson, 5e-2));
    EXPECT_NEAR(o2, 2.0, 0.05);
    EXPECT_NEAR(o4, 4.0, 0.1);
    EXPECT_NEAR(o6, 6.0, 0.3);
}

TEST(StepPolicy, RejectsNonPositive) {
    StepPolicy p;
    p.base_step = 0.0;
    EXPECT_THROW(p.validate(), InvalidConfig);
}

TEST(Compare, IdenticalFieldsGiveZeroError) {
    const BeamConfig beam = preset("fig1").beam;
    const VectorField f = [](const FieldPoint& q) { return CylVec{q.r, std::sin(q.phi), q.z}; };
    const ComparisonReport rep = compare("self", f, f, SamplingRegion::focal_plane(beam, 500, 7));
    EXPECT_EQ(rep.n_points, 500u);
    EXPECT_LE(rep.max_rel_error, 1e-15);
    EXPECT_NE(rep.to_text().find("self"), std::string::npos);
    EXPECT_NE(rep.to_key_value("x.").find("x.max_rel_error="), std::string::npos);
}

TEST(Compare, DetectsScaledField) {
    const BeamConfig beam = preset("fig1").beam;
    const VectorField f = [](const FieldPoint& q) { return CylVec{q.r, 1.0, 0.0}; };
    const VectorField g = [](const FieldPoint& q) { return CylVec{1.01 * q.r, 1.01, 0.0}; };
    const ComparisonReport rep = compare("scaled", g, f, SamplingRegion::focal_plane(beam, 100, 7));
    EXPECT_NEAR(rep.max_rel_error, 0.01, 1e-12);
}

TEST(SamplePoints, DeterministicAndInRange) {
    const BeamConfig beam = preset("fig1").beam;
    const auto a = sample_points(SamplingRegion::focal_plane(beam, 1000, 42));
    const auto b = sample_points(SamplingRegion::focal_plane(beam, 1000, 42));
    ASSERT_EQ(a.size(), 1000u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].r, b[i].r);
        EXPECT_EQ(a[i].phi, b[i].phi);
        EXPECT_GE(a[i].r, 0.05 * beam.waist);
        EXPECT_LE(a[i].r, 3.0 * beam.waist);
        EXPECT_EQ(a[i].z, 0.0);
    }
}

TEST(SamplePoints, EmptyRegion) {
    SamplingRegion r;
    r.r_min = 1.0;
    r.r_max = 0.5;
    EXPECT_THROW((void)sample_points(r), EmptyRegion);
    r.r_max = 2.0;
    r.n_points = 0;
    EXPECT_THROW((void)sample_points(r), EmptyRegion);
}

TEST(Parallel, VisitsEveryIndexOnceAndRethrows) {
    std::vector<int> hits(1003, 0);
    parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) { if (i == 5) throw std::runtime_error("x"); }),
                 std::runtime_error);
    EXPECT_GE(default_worker_count(), 1u);
}

TEST(FieldLines, UniformAxialFieldIsStraight) {
    TraceOptions o;
    o.step = 0.01;
    o.max_steps = 50;
    o.r_max = 10.0;
    o.z_max = 10.0;
    const Polyline line =
        trace_field_line([](const FieldPoint&) { return CylVec{0, 0, 1.0}; }, {1.0, 0.5, 0.0, 0.0}, o);
    EXPECT_EQ(line.points.size(), 51u);
    EXPECT_NEAR(line.arc_length, 0.5, 1e-12);
    EXPECT_NEAR(line.points.back().z, 0.5, 1e-12);
    EXPECT_NEAR(line.points.back().r, 1.0, 1e-12);
    EXPECT_EQ(line.termination, Termination::max_steps);
}

TEST(FieldLines, AzimuthalFieldTracesCircle) {
    const double radius = 2.0;
    TraceOptions o;
    o.step = 1e-2;
    o.r_max = 10.0;
    o.z_max = 10.0;
    o.max_steps = static_cast<std::size_t>(std::round(constants::two_pi * radius / o.step));
    o.step = constants::two_pi * radius / static_cast<double>(o.max_steps);
    const Polyline line =
        trace_field_line([](const FieldPoint&) { return CylVec{0, 1.0, 0}; }, {radius, 0.0, 0.0, 0.0}, o);
    const FieldPoint& end = line.points.back();
    const double closure = std::hypot(end.r * std::cos(end.phi) - radius, end.r * std::sin(end.phi));
    EXPECT_LE(closure, 1e-6 * radius);
    EXPECT_NEAR(end.phi, constants::two_pi, 1e-6);
}

TEST(FieldLines, StopsAtDomainAndNullField) {
    TraceOptions o;
    o.step = 0.1;
    o.max_steps = 1000;
    o.r_max = 2.0;
    o.z_max = 10.0;
    const Polyline out =
        trace_field_line([](const FieldPoint&) { return CylVec{1.0, 0, 0}; }, {1.0, 0.0, 0.0, 0.0}, o);
    EXPECT_EQ(out.termination, Termination::left_domain);
    EXPECT_EQ(to_string(out.termination), "left-domain");
    o.null_threshold = 1e-3;
    EXPECT_THROW((void)trace_field_line([](const FieldPoint&) { return CylVec{}; }, {1.0, 0, 0, 0}, o), NullField);
    const Polyline null_end = trace_field_line(
        [](const FieldPoint& q) { return CylVec{1.5 - q.r, 0, 0}; }, {1.0, 0.0, 0.0, 0.0}, o);
    EXPECT_EQ(null_end.termination, Termination::null_field);
}

TEST(FieldLines, Fig1MagneticLinesAreNonEmpty) {
    const Scenario s = preset("fig1");
    const GaugeModel m = s.model();
    TraceOptions o;
    o.step = 0.01 * s.beam.waist;
    o.max_steps = 500;
    o.r_min = 0.01 * s.beam.waist;
    o.r_max = 3.5 * s.beam.waist;
    o.z_max = s.beam.waist;
    const Polyline line =
        trace_field_line([&](const FieldPoint& q) { return m.magnetic_field(q); }, {s.beam.waist, 0.3, 0, 0}, o);
    EXPECT_GT(line.points.size(), 10u);
    for (const FieldPoint& p : line.points) EXPECT_NEAR(p.z, 0.0, 1e-18);
}

}  // namespace
}  // namespace gaugewheel
