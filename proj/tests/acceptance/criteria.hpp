#pragma once

#include "harness.hpp"

namespace acceptance {

void run_criterion_1(Reporter& reporter);
void run_criteria_2_3(Reporter& reporter); // fused bipartite/split/table sweeps
void run_criterion_4(Reporter& reporter);
void run_criterion_5(Reporter& reporter);
void run_criterion_6(Reporter& reporter);
void run_criterion_7(Reporter& reporter);
void run_criterion_8(Reporter& reporter);
void run_criterion_9(Reporter& reporter);

} // namespace acceptance
