#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "gaugewheel/closed_forms.hpp"
#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"
#include "gaugewheel/gauge.hpp"
#include "gaugewheel/scenario.hpp"
#include "oracle_model.hpp"
#include "oracle_values.hpp"

namespace gaugewheel {
namespace {

using testing_support::model_for;
using testing_support::point_of;
using testing_support::rel_error;
using testing_support::vec_of;

constexpr double kOracleTol = 1e-9;

const oracle::OracleCase* const kCases[] = {&oracle::kFig1Static, &oracle::kFig1Peak, &oracle::kFig3Rotating,
                                            &oracle::kRadialP1};

class OracleTest : public ::testing::TestWithParam<int> {};

TEST_P(OracleTest, PotentialsAndFieldsMatchSymbolicOracle) {
    const oracle::OracleCase& c = *kCases[GetParam()];
    const GaugeModel m = model_for(c);
    const FieldPoint p = point_of(c);
    const double phase_scale = std::max(1.0, std::abs(c.phase));
    EXPECT_LE(rel_error(m.rabi(p), c.rabi), kOracleTol);
    EXPECT_LE(std::abs(m.ferris_phase(p) - c.phase) / phase_scale, 1e-12);
    EXPECT_LE(rel_error(m.scalar_potential(p), c.scalar_potential), kOracleTol);
    EXPECT_LE(rel_error(m.vector_potential(p), vec_of(c.vector_potential)), kOracleTol);
    const CylVec b = vec_of(c.magnetic);
    if (norm(b) > 0.0) {
        EXPECT_LE(rel_error(m.magnetic_field(p), b), kOracleTol);
    } else {
        EXPECT_LE(norm(m.magnetic_field(p)), 1e-15);
    }
    EXPECT_LE(rel_error(m.electric_field(p), vec_of(c.electric)), kOracleTol);
}

std::string case_name(const ::testing::TestParamInfo<int>& info) {
    static const char* const names[] = {"Fig1Static", "Fig1Peak", "Fig3Rotating", "RadialP1"};
    return names[info.index];
}

INSTANTIATE_TEST_SUITE_P(Cases, OracleTest,
                         ::testing::Range(0, 4),
                         case_name);

TEST(ScalarPotential, PositiveAtFig1Peak) {
    const GaugeModel m = preset("fig1").model();
    EXPECT_GT(m.scalar_potential(point_of(oracle::kFig1Peak)), 0.0);
}

TEST(MixingCos, Examples) {
    EXPECT_EQ(mixing_cos(3.0, 0.0), 1.0);
    EXPECT_NEAR(mixing_cos(2.0, 2.0), 1.0 / std::sqrt(2.0), 1e-16);
    EXPECT_NEAR(mixing_cos(100.0, 10.0), 100.0 / std::sqrt(10100.0), 1e-16);
    EXPECT_NEAR(mixing_cos(100.0, 10.0), 0.99504, 5e-6);
    EXPECT_THROW((void)mixing_cos(0.0, 0.0), DegeneratePoint);
}

TEST(DressedStates, Examples) {
    const auto [a, b] = dressed_states(5.0, 0.0, 1.3);
    EXPECT_EQ(a.ground, 1.0);
    EXPECT_NEAR(std::abs(a.excited), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(b.ground), 0.0, 1e-16);
    EXPECT_EQ(b.excited, 1.0);

    const auto [c, d] = dressed_states(0.0, 2.0, 0.4);
    for (const auto& amp : {c.ground, c.excited, d.ground, d.excited}) {
        EXPECT_NEAR(std::abs(amp), 1.0 / std::sqrt(2.0), 1e-15);
    }
}

TEST(DressedStates, Orthonormal) {
    for (double delta : {-3.0, -0.2, 0.0, 0.7, 40.0}) {
        for (double rabi : {-2.0, 0.0, 0.3, 9.0}) {
            if (delta == 0.0 && rabi == 0.0) continue;
            const auto [a, b] = dressed_states(delta, rabi, 2.1);
            const std::complex<double> ab = std::conj(a.ground) * b.ground + std::conj(a.excited) * b.excited;
            EXPECT_NEAR(std::norm(a.ground) + std::norm(a.excited), 1.0, 1e-15);
            EXPECT_NEAR(std::norm(b.ground) + std::norm(b.excited), 1.0, 1e-15);
            EXPECT_NEAR(std::abs(ab), 0.0, 1e-15);
        }
    }
}

TEST(GaugeModel, PhaseGradientOnAxis) {
    const GaugeModel m = preset("fig1").model();
    const CylVec g = m.grad_ferris_phase({0.0, 0.0, 0.0, 0.0});
    EXPECT_EQ(g.r, 0.0);
    EXPECT_EQ(g.phi, 0.0);
    EXPECT_DOUBLE_EQ(g.z, m.geometry().k - 2.0 / m.geometry().rayleigh_range);
}

TEST(GaugeModel, VectorPotentialVanishesWithoutLight) {
    Scenario s = preset("fig1");
    s.beam.peak_rabi = 0.0;
    const CylVec a = s.model().vector_potential({s.beam.waist, 0.3, 0.1 * s.beam.waist, 0.0});
    EXPECT_EQ(norm(a), 0.0);
}

TEST(GaugeModel, FieldsOnAxis) {
    const GaugeModel m = preset("fig1").model();
    const FieldPoint axis{0.0, 0.0, 0.0, 0.0};
    EXPECT_EQ(norm(m.magnetic_field(axis)), 0.0);
    EXPECT_THROW((void)m.grad_rabi(axis), AxisError);
    EXPECT_THROW((void)m.scalar_potential(axis), AxisError);
}

TEST(GaugeModel, ZeroDetuningGivesZeroB) {
    const GaugeModel m = preset("fig1").model().with_detuning(0.0);
    for (double r : {0.3, 0.9, 2.0}) {
        EXPECT_EQ(norm(m.magnetic_field({r * 5e-6, 0.4, 0.0, 0.0})), 0.0);
    }
}

TEST(GaugeModel, StaticElectricEqualsFullWhenStatic) {
    const GaugeModel m = preset("fig3").model();
    const FieldPoint p{0.8e-5, 1.1, 0.0, 5e-9};
    const CylVec e = m.electric_field(p);
    const CylVec s = m.electric_field_static(p);
    EXPECT_EQ(e.r, s.r);
    EXPECT_EQ(e.phi, s.phi);
    EXPECT_EQ(e.z, s.z);
}

TEST(GaugeModel, ConventionScalesFields) {
    const GaugeModel std_model = preset("fig1").model();
    const GaugeModel printed = std_model.with_convention(FieldConvention::as_printed);
    const FieldPoint p{4e-6, 0.6, 0.0, 0.0};
    EXPECT_NEAR(rel_error(printed.magnetic_field(p), 2.0 * std_model.magnetic_field(p)), 0.0, 1e-15);
    EXPECT_NEAR(printed.scalar_potential(p) / std_model.scalar_potential(p), 4.0, 1e-14);
}

TEST(AtomConfig, RejectsInvalid) {
    AtomConfig a = preset("fig1").atom;
    a.mass = 0.0;
    EXPECT_THROW(a.validate(), InvalidConfig);
    a = preset("fig1").atom;
    a.charge = 0.0;
    EXPECT_THROW(a.validate(), InvalidConfig);
}

TEST(ClosedForms, Examples) {
    const GaugeModel m = preset("fig1").model();
    const double w0 = m.beam().waist;
    EXPECT_EQ(magnetic_closed_z0(m, 0.7 * w0, 0.0, 0.0).r, 0.0);
    const double b_scale = norm(magnetic_closed_z0(m, 0.3 * w0, 0.8, 0.0));
    EXPECT_NEAR(magnetic_closed_z0(m, w0 * std::sqrt(0.5), 0.8, 0.0).phi, 0.0, 1e-14 * b_scale);
    EXPECT_EQ(norm(magnetic_closed_z0(m, 0.0, 0.8, 0.0)), 0.0);
    EXPECT_NEAR(electric_closed_z0(m, 0.7 * w0, 0.0).phi, 0.0, 1e-25);

    const GaugeModel faint = m.with_peak_rabi(1e-3 * m.beam().peak_rabi);
    const GaugeModel fainter = m.with_peak_rabi(5e-4 * m.beam().peak_rabi);
    const double e1 = norm(electric_closed_z0(faint, 0.7 * w0, 0.3));
    const double e2 = norm(electric_closed_z0(fainter, 0.7 * w0, 0.3));
    EXPECT_NEAR(e1 / e2, 4.0, 1e-6);

    const GaugeModel rot = m.with_detuning(m.atom().detuning);
    EXPECT_EQ(electric_largedet_z0(rot, 0.7 * w0, 0.3, 0.0).z, 0.0);

    Scenario s = preset("fig1-rotating");
    const GaugeModel spinning = s.model();
    const double arg_zero_t = 0.5 / (0.5 * s.beam.freq_shift);  // lφ - Δωt/2 = 0 at φ = 0.5
    EXPECT_NEAR(magnetic_largedet_z0(spinning, 0.7 * w0, 0.5, arg_zero_t).r, 0.0, 1e-20);
}

TEST(ClosedForms, RequireFundamentalRadialMode) {
    Scenario s = preset("fig1");
    s.beam.radial_index = 1;
    EXPECT_THROW((void)magnetic_closed_z0(s.model(), 1e-6, 0.1, 0.0), InvalidConfig);
}

}  // namespace
}  // namespace gaugewheel
