#pragma once

#include <random>
#include <string>
#include <vector>

#include "qreg/report.hpp"
#include "qreg/series.hpp"

namespace qreg {

// Registered suite names, in report assembly order.
const std::vector<std::string>& registered_suites();

// Anchor table: check name -> short quote locating the identity in the
// source text. Shipped as data so reports and docs cannot drift.
const std::vector<std::pair<std::string, std::string>>& anchor_table();
std::string anchor_for(const std::string& check_name);

// Runs the configured suites; deterministic given (config, seed).
VerificationReport run_suites(const SuiteConfig& config);

// Uniform draw from the quaternion ball of radius 1.
Quaternion random_quaternion_ball(std::mt19937_64& rng);

// Random series of the given order; when min_a0 > 0 the constant term is
// resampled until |a_0| >= min_a0.
QSeries random_series(std::mt19937_64& rng, int order, double min_a0 = 0.0);

}  // namespace qreg
