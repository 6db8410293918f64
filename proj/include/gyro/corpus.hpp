#pragma once

#include <vector>

#include "gyro/engine.hpp"
#include "gyro/finite.hpp"
#include "gyro/report.hpp"

namespace gyro::corpus {

// the eight-element gyrogroup with two gyroautomorphisms I and (4,6)(5,7)
FiniteGyrogroup g8();
FiniteGyrogroup z2();
FiniteGyrogroup z4();
FiniteGyrogroup k4();   // Z2 x Z2
FiniteGyrogroup s3();   // symmetric group on three letters, identity at 0
FiniteGyrogroup g8_z2();

// the four-open topology {0,1,2,3}/{4,5,6,7} on g8
FiniteTopology g8_coset_topology();

// named (gyrogroup, topology) pairs: every bundled gyrogroup under the
// discrete and indiscrete topologies plus coset topologies by an invariant
// subgyrogroup where one exists
std::vector<Instance> bundled_instances();

// unordered pairwise products of the bundled instances within the carrier cap
std::vector<Instance> pairwise_products(int max_carrier = kMaxCarrier);

// every invariant suite from all modules over the bundled corpus and its
// pairwise products; stops at the first violated property
Report corpus_suite();

}  // namespace gyro::corpus
