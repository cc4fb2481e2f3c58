#pragma once

#include "finitype/decision.hpp"
#include "finitype/oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// Report rendering. Vertices and minor orders are 1-based here.
namespace finitype::report {

inline constexpr int schema_version = 1;

using Json = nlohmann::ordered_json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer(const Integer& x);
Json matrix(const SquareIntMatrix& m);
Json vertices(const std::vector<std::size_t>& vs);
Json edges(const std::vector<Edge>& es);
Json symmetrizer(const DiagonalRational& d);
Json inventory(const CycleInventory& inv);
Json orientation_failure(const NotCyclicallyOriented& f);
Json domain_error(const NotSkewSymmetrizable& e);
Json decision(const Decision& d);
Json mutation_class(const MutationClassReport& r);

/// Skeleton every report starts from.
Json header(const std::string& command, const std::string& file);

std::string vertex_list(const std::vector<std::size_t>& vs);
std::string matrix_rows(const SquareIntMatrix& m, const std::string& indent);
std::string describe(const NotCyclicallyOriented& f);
std::string decision_text(const Decision& d);
std::string mutation_class_text(const MutationClassReport& r);
std::string to_string(MutationClassReport::Status s);

}  // namespace finitype::report
