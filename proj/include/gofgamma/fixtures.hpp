// Embedded example datasets used by the documentation, the CLI `fixtures`
// subcommand, and the tests.
#ifndef GOFGAMMA_FIXTURES_HPP
#define GOFGAMMA_FIXTURES_HPP

#include <vector>

namespace gofgamma::fixtures {

// 25 waiting times (in units of 1/5000 minute) between Geiger counter pulses;
// classical dataset analyzed with shape alpha = 100.
const std::vector<double>& geiger_counter_times();

// 107 failure times (in millions of operating cycles) of right rear tractor
// brakes; classical reliability dataset analyzed over a range of shapes.
const std::vector<double>& tractor_brake_times();

} // namespace gofgamma::fixtures

#endif
