#pragma once

#include "diracint/potentials.hpp"
#include "diracint/root_analysis.hpp"
#include "diracint/sequence.hpp"
#include "diracint/solutions.hpp"

#include <string>
#include <vector>

namespace diracint {

const char* condition_kind_name(ConditionKind kind);
ConditionKind condition_kind_from_name(const std::string& name);

// Rationals are serialized as "num/den" strings; everything round-trips
// exactly. Malformed input throws domain_error with the offending key.
std::string descriptor_to_json(const SolutionDescriptor& sol, int indent = 2);
SolutionDescriptor descriptor_from_json(const std::string& text);

// A file may hold one descriptor object or an array of them.
std::string descriptors_to_json(const std::vector<SolutionDescriptor>& sols, int indent = 2);
std::vector<SolutionDescriptor> descriptors_from_json(const std::string& text);

std::string sequence_to_json(const PolySequence& seq, int indent = 2);

// One row per isolated root: m,alpha_lo,alpha_hi,exact. A column where the
// condition vanishes identically prints m,line,line,line.
std::string curve_to_csv(const CurveScan& scan);
std::string curve_to_json(const CurveScan& scan, int indent = 2);

std::string spectrum_to_json(const WhittakerCase& wc,
                             const std::vector<SpectrumLevel>& levels, int indent = 2);

std::string kovacic_to_json(const KovacicReport& rep, int indent = 2);

}  // namespace diracint
