#pragma once

#include "iasi/construct.hpp"
#include "iasi/labeling.hpp"
#include "iasi/partition.hpp"
#include "iasi/search.hpp"
#include "iasi/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <iosfwd>

namespace iasi {

// Key order in every emitted object is fixed, so identical inputs give
// byte-identical output.
using Json = nlohmann::ordered_json;

/// {"0":[0,1],"1":[0,2]}: decimal vertex ids to strictly ascending arrays.
Json labeling_to_json(const Labeling& f);
/// Throws LabelingError on malformed keys or values.
Labeling labeling_from_json(const Json& j);
Labeling parse_labeling(std::istream& in);
Labeling read_labeling_file(const std::filesystem::path& path);

Json report_to_json(const VerificationReport& report);
Json partition_to_json(const PartitionReport& report);
Json outcome_to_json(const SearchOutcome& outcome, const SearchSpec& spec);
Json reduction_to_json(const ReductionResult& result);

} // namespace iasi
